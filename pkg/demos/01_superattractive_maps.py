"""
The basic superattractive map z -> z^2 and what conjugation does to it.

A quadratic rational map has three fixed points. For z^2 they are 0 and
infinity (multiplier 0, superattractive) and 1 (multiplier 2, repelling).
Conjugating by a Moebius transformation moves the fixed points around but
keeps every multiplier.
"""
import numpy as np

from qsmatch import INF, Moebius, basic_map, conjugate, fixed_points, iterate, normal_form

f0 = basic_map()
print("fixed points of z^2:")
for z, mu in fixed_points(f0):
    print(f"  z = {z!s:>8}   f'(z) = {mu.real:+.3f}")

# States with |z| < 1 flow to |0>, states with |z| > 1 flow to |1>
print("\norbit of 0.9 + 0.3i:", np.round(iterate(f0, 0.9 + 0.3j, 5), 5))
print("orbit of 1.1 - 0.2i ends at", iterate(f0, 1.1 - 0.2j, 8)[-1])

# An arbitrary Moebius transformation
g = Moebius(1 + 2j, -0.5, 0.3j, 1)
f = conjugate(f0, g)
print("\nconjugated map:", f)
for z, mu in fixed_points(f):
    print(f"  z = {z:.6f}   f'(z) = {mu:.2e}")
print("images of 0, INF, 1 under g:", g(0), g(INF), g(1))

# Normal form with prescribed multipliers at 0 and INF
f = normal_form(0.5, 1 / 3)
data = fixed_points(f)
print("\nnormal form (1/2, 1/3): third fixed point", data.points[2], "multiplier", data.multipliers[2])
