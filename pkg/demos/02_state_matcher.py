"""
Building a matcher for the reference state (|0> + i|1>)/sqrt(2).

Every state whose squared overlap with the reference exceeds 0.9 should be
driven to the reference, every other state to the orthogonal state. The
boundary between the two behaviours is a circle on the plane of labels z.
"""
import numpy as np

from qsmatch import MatcherSpec, build_matcher, fixed_points, overlap, sample_circle
from qsmatch.dynamics import iterate

m = build_matcher(MatcherSpec.from_overlap_sq(1j, 0.9))
print("epsilon      :", m.epsilon)
print("numerator    :", np.round(m.f.numerator, 6))
print("denominator  :", np.round(m.f.denominator, 6))
print("julia circle : center", m.julia.center, "radius", m.julia.radius)

for z, mu in fixed_points(m.f):
    print(f"fixed point {z:.6f}  multiplier {abs(mu):.2e}")

# Points on the Julia circle all have overlap sqrt(0.9) with the reference
s = [abs(overlap(1j, z)) for z in sample_circle(m.julia, 8)]
print("\noverlap along the circle:", np.round(s, 12))

# A state just inside and one just outside
for z0 in (0.55j, 0.45j):
    orbit = iterate(m.f, z0, 6)
    print(f"\nstart {z0}: overlap^2 = {abs(overlap(1j, z0)) ** 2:.4f}")
    for k, z in enumerate(orbit):
        print(f"  step {k}: overlap^2 with reference = {abs(overlap(1j, z)) ** 2:.6f}")
