import numpy as np
import pytest

from qsmatch.dynamics import eval_map
from qsmatch.errors import DomainError, PostSelectionImpossible
from qsmatch.extcomplex import INF, chordal_distance
from qsmatch.gates import (
    TwoQubitGate,
    contraction_gate,
    induced_map,
    worked_example_gate,
    single_qubit_gate,
    synthesize_unitary,
)
from qsmatch.matcher import MatcherSpec, build_matcher
from qsmatch.protocol import (
    decomposed_step,
    expected_resources,
    gate_step,
    monte_carlo_resources,
    product_state,
    protocol_step,
    run_protocol,
    sample_resources,
    simulate_trajectory,
)
from qsmatch.qubit import overlap_sq

from .conftest import random_complex, random_map


def test_product_state():
    np.testing.assert_allclose(product_state(INF), [0, 0, 0, 1])
    np.testing.assert_allclose(product_state(0), [1, 0, 0, 0])
    np.testing.assert_allclose(product_state(1), [0.5] * 4)


def brute_step(u, z):
    """Explicit projector on B = 0 and partial trace, written out independently."""
    psi = np.array([1, z]) / np.sqrt(1 + abs(z) ** 2)
    out = (u @ np.kron(psi, psi)).reshape(2, 2)  # index [A, B]
    kept = out[:, 0]
    p = np.vdot(kept, kept).real
    return kept[1] / kept[0], p


def test_step_matches_brute_force(rng):
    gate = worked_example_gate()
    for z in random_complex(rng, 30):
        res = protocol_step(gate, z)
        z_ref, p_ref = brute_step(gate.matrix, z)
        assert res.z_out == pytest.approx(z_ref, rel=1e-12)
        assert res.success_prob == pytest.approx(p_ref, rel=1e-12)


def test_step_matches_map_for_random_gates(rng):
    for _ in range(20):
        f = random_map(rng)
        gate = synthesize_unitary(f)
        for z in random_complex(rng, 5):
            res = protocol_step(gate, z)
            assert chordal_distance(res.z_out, eval_map(f, z)) < 1e-10
            assert res.success_prob + res.discard_prob == pytest.approx(1, abs=1e-12)


def test_step_at_infinity(ex_matcher):
    res = protocol_step(worked_example_gate(), INF)
    assert chordal_distance(res.z_out, ex_matcher.f(INF)) < 1e-12


def test_impossible_post_selection():
    # swap-like gate sending |psi>|psi> for z = INF entirely to the discard branch
    m = np.eye(4)[[1, 0, 3, 2]]
    with pytest.raises(PostSelectionImpossible):
        protocol_step(TwoQubitGate(m), 0)
    with pytest.raises(PostSelectionImpossible) as info:
        simulate_trajectory(TwoQubitGate(m), 0, 3)
    assert info.value.step == 1


def test_gate_step_vectorized(rng):
    gate = worked_example_gate()
    zs = random_complex(rng, 40)
    u, v = gate_step(gate)(zs, np.ones_like(zs))
    for z, uu, vv in zip(zs, u, v):
        assert chordal_distance(uu / vv, protocol_step(gate, z).z_out) < 1e-12


def test_trajectory_follows_orbit(ex_matcher):
    traj = simulate_trajectory(worked_example_gate(), 0.3 + 0.1j, 6)
    zs, probs = traj
    assert len(zs) == 7 and len(probs) == 6
    for a, b in zip(zs, zs[1:]):
        assert chordal_distance(b, ex_matcher.f(a)) < 1e-10


def test_sampling_mode_aborts():
    rng = np.random.default_rng(1)
    aborted = [simulate_trajectory(worked_example_gate(), 0.5, 5, rng).aborted_at for _ in range(50)]
    assert any(a is not None for a in aborted)
    assert all(a is None or 1 <= a <= 5 for a in aborted)


def test_run_protocol_domain():
    with pytest.raises(DomainError):
        run_protocol(lambda z: None, 0, 0)


def test_expected_resources():
    assert expected_resources([1, 1, 1], 3) == 8
    assert expected_resources([0.5, 0.25], 2) == pytest.approx(4 * 8)
    with pytest.raises(DomainError):
        expected_resources([0.5], 2)
    with pytest.raises(DomainError):
        expected_resources([0], 1)


def test_sample_resources_matches_expectation():
    rng = np.random.default_rng(5)
    probs = [0.6, 0.8, 0.5]
    est = sample_resources(probs, 3, 4000, rng)
    assert est == pytest.approx(expected_resources(probs, 3), rel=0.08)


def test_monte_carlo_certain_success():
    rng = np.random.default_rng(0)
    gate = contraction_gate(0.5)
    # INF is the label of |1>: the contraction gate keeps it with probability 1
    assert protocol_step(gate, INF).success_prob == pytest.approx(1)
    assert monte_carlo_resources(gate, INF, 4, 50, rng) == 16


def test_decomposed_step_matches_direct(ex_matcher, rng):
    gate = worked_example_gate()
    eps_gate = contraction_gate(ex_matcher.epsilon)
    v = single_qubit_gate(ex_matcher.g_u)
    for z in random_complex(rng, 20):
        a = decomposed_step(eps_gate, v, z)
        b = protocol_step(gate, z)
        assert chordal_distance(a.z_out, b.z_out) < 1e-9
        assert a.success_prob == pytest.approx(b.success_prob, abs=1e-9)


def test_decomposed_step_with_phases(rng):
    m = build_matcher(MatcherSpec(0.4 + 0.7j, 0.85, alpha_u=0.6))
    eps_gate = contraction_gate(m.epsilon)
    v = single_qubit_gate(m.g_u)
    for z in random_complex(rng, 10):
        assert chordal_distance(decomposed_step(eps_gate, v, z).z_out, m.f(z)) < 1e-9


def haar_unitary(rng):
    q, r = np.linalg.qr(random_complex(rng, (4, 4)))
    return q * (np.diag(r) / np.abs(np.diag(r)))


def test_random_unitaries_match_their_maps(rng):
    for _ in range(20):
        gate = TwoQubitGate(haar_unitary(rng))
        f = induced_map(gate)
        for z in random_complex(rng, 5):
            assert chordal_distance(protocol_step(gate, z).z_out, eval_map(f, z)) < 1e-10


def test_fixed_points_survive_the_step():
    res = protocol_step(worked_example_gate(), 1j)
    assert res.z_out == pytest.approx(1j)
    assert 0 < res.success_prob <= 1
    assert protocol_step(contraction_gate(1 / 3), 0).z_out == 0
    zs, _ = simulate_trajectory(contraction_gate(1 / 3), INF, 3)
    assert all(z is INF for z in zs)


def test_example_trajectory_reaches_threshold():
    zs, probs = simulate_trajectory(worked_example_gate(), 0.9j, 8)
    assert any(overlap_sq(1j, z) > 0.994 for z in zs[1:])
    assert expected_resources(probs, 8) >= 2**8


def test_decomposition_examples(ex_matcher):
    eps_gate = contraction_gate(1 / 3)
    v = single_qubit_gate(ex_matcher.g_u)
    assert decomposed_step(eps_gate, v, 1j).z_out == pytest.approx(1j)
    plain = single_qubit_gate(build_matcher(MatcherSpec(0, 0.9)).g_u)
    for z in [0.3, 2j, -1 + 1j]:
        a = decomposed_step(eps_gate, plain, z)
        b = protocol_step(eps_gate, z)
        assert a.z_out == pytest.approx(b.z_out)
