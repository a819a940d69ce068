"""
Running the post-selection protocol and counting the qubits it consumes.

Each step halves the number of qubits and keeps only a fraction p_k of the
pairs, so reaching step n costs prod 2/p_k input qubits per output qubit.
"""
import numpy as np

from qsmatch import (
    MatcherSpec,
    build_matcher,
    contraction_gate,
    decomposed_step,
    expected_resources,
    monte_carlo_resources,
    overlap,
    worked_example_gate,
    protocol_step,
    simulate_trajectory,
    single_qubit_gate,
)

gate = worked_example_gate()
zs, probs = simulate_trajectory(gate, 0.9j, 5)
for k, z in enumerate(zs):
    p = f"{probs[k - 1]:.5f}" if k else "   -   "
    print(f"step {k}: z = {z:.6f}  p_keep = {p}  overlap^2 = {abs(overlap(1j, z)) ** 2:.8f}")

n = 3
print(f"\nexpected qubits for {n} steps:", expected_resources(probs[:n], n))
rng = np.random.default_rng(0)
print("Monte Carlo estimate         :", monte_carlo_resources(gate, 0.9j, n, 10_000, rng))

# The same step as a universal contraction gate sandwiched by a rotation
m = build_matcher(MatcherSpec.from_overlap_sq(1j, 0.9))
eps_gate, v = contraction_gate(m.epsilon), single_qubit_gate(m.g_u)
for z in (0.2 + 0.1j, -1.5j, 3.0):
    a, b = decomposed_step(eps_gate, v, z), protocol_step(gate, z)
    print(f"z = {z}: direct {b.z_out:.10f}  decomposed {a.z_out:.10f}")
