"""
From a map to a two-qubit gate and back.

Two copies of a qubit pass through a gate U, qubit B is measured and the
run is kept only if B reads 0. The surviving qubit A carries f(z), where f
is read off rows 1 and 3 of U.
"""
import numpy as np

from qsmatch import (
    MatcherSpec,
    build_matcher,
    induced_map,
    worked_example_gate,
    same_map,
    synthesize_unitary,
)
from qsmatch.gates import unitarity_error

np.set_printoptions(precision=4, suppress=True, linewidth=110)

m = build_matcher(MatcherSpec.from_overlap_sq(1j, 0.9))
gate = synthesize_unitary(m.f)
print("synthesized gate:\n", gate.matrix)
print("unitarity error:", unitarity_error(gate.matrix))
print("realizes the matcher map:", same_map(induced_map(gate), m.f))

# A gate written down by hand for the same map differs in rows 2 and 4
# and in a free phase of rows 1 and 3, but induces the same map
worked = worked_example_gate()
print("\nhand-written gate times 6 sqrt 2:\n", worked.matrix * 6 * np.sqrt(2))
print("realizes the matcher map:", same_map(induced_map(worked), m.f))
