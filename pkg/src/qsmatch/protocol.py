"""
State-vector simulation of the pairwise post-selection protocol.

One step takes two copies of ``psi_z``, applies a two-qubit gate, measures
qubit B and keeps qubit A when B reads 0. Post-selection is treated as
conditioning by default; passing a random generator turns each step into a
coin flip that aborts the run when the discard branch comes up.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, PostSelectionImpossible
from .extcomplex import as_ext
from .gates import SingleQubitGate, TwoQubitGate
from .qubit import PureState, state_from_z, z_from_state

MIN_SUCCESS_PROB = 1e-14


@dataclass(frozen=True)
class StepResult:
    post_state: PureState
    z_out: complex
    success_prob: float
    discard_prob: float


def product_state(z) -> np.ndarray:
    """``|psi_z> (x) |psi_z>``; for INF this is |11>."""
    s = state_from_z(z).vector
    return np.kron(s, s)


def output_amplitudes(gate: TwoQubitGate, z) -> np.ndarray:
    return gate.matrix @ product_state(z)


def protocol_step(gate: TwoQubitGate, z) -> StepResult:
    out = output_amplitudes(gate, z)
    kept = out[[0, 2]]  # |00>, |10>: qubit B reads 0
    p_keep = float(np.sum(np.abs(kept) ** 2))
    p_drop = float(abs(out[1]) ** 2 + abs(out[3]) ** 2)
    if p_keep < MIN_SUCCESS_PROB:
        raise PostSelectionImpossible(
            f"kept branch vanishes at z = {as_ext(z)!r} (probability {p_keep:.3e})"
        )
    post = PureState(kept[0], kept[1])
    return StepResult(post, z_from_state(post), p_keep, p_drop)


def gate_step(gate: TwoQubitGate):
    """Vectorized protocol step on homogeneous coordinates ``(u, v)``.

    The state ``psi_{u/v}`` is proportional to ``(v, u)``, so the product
    state is ``(v^2, u v, u v, u^2)``; the kept amplitudes give the new pair
    ``(alpha_10, alpha_00)``.
    """
    m = gate.matrix

    def step(u, v):
        vec = np.stack([v * v, u * v, u * v, u * u])
        out = m[[0, 2]] @ vec
        a00, a10 = out[0], out[1]
        s = np.maximum(np.abs(a00), np.abs(a10))
        return a10 / s, a00 / s

    return step


@dataclass
class Trajectory:
    zs: list
    probs: list
    aborted_at: int | None = field(default=None)

    def __iter__(self):
        return iter((self.zs, self.probs))


def run_protocol(step, z0, n: int, rng=None) -> Trajectory:
    """Iterate any ``z -> StepResult`` function; see :func:`simulate_trajectory`."""
    if n < 1:
        raise DomainError("n must be at least 1")
    zs, probs = [as_ext(z0)], []
    for k in range(1, n + 1):
        try:
            res = step(zs[-1])
        except PostSelectionImpossible as exc:
            raise PostSelectionImpossible(f"step {k}: {exc}", step=k) from exc
        probs.append(res.success_prob)
        if rng is not None and rng.random() >= res.success_prob:
            return Trajectory(zs, probs, aborted_at=k)
        zs.append(res.z_out)
    return Trajectory(zs, probs)


def simulate_trajectory(gate: TwoQubitGate, z0, n: int, rng=None) -> Trajectory:
    """Run ``n`` protocol steps from ``z0``.

    With ``rng`` (a ``numpy.random.Generator``) each step survives with its
    success probability; on failure the trajectory stops and ``aborted_at``
    holds the 1-based index of the failed step.
    """
    return run_protocol(lambda z: protocol_step(gate, z), z0, n, rng)


def expected_resources(probs, n: int) -> float:
    """Expected level-0 qubits consumed per surviving level-n qubit, ``prod 2/p_k``."""
    probs = [float(p) for p in probs]
    if len(probs) != n:
        raise DomainError(f"expected {n} probabilities, got {len(probs)}")
    for p in probs:
        if not 0 < p <= 1:
            raise DomainError(f"success probabilities must lie in (0, 1], got {p!r}")
    total = 1.0
    for p in probs:
        total *= 2.0 / p
    return total


def sample_resources(probs, n: int, trials: int, rng) -> float:
    """Monte Carlo estimate of :func:`expected_resources`.

    Each trial builds one level-``n`` qubit. A level-``k`` attempt pairs two
    level-``k-1`` qubits and survives a coin flip with probability
    ``probs[k-1]``; failed attempts are discarded and retried. Returns the
    mean number of level-0 qubits used. The flips are drawn in bulk: ``m``
    successes at level ``k`` take ``m`` plus a negative binomial number of
    attempts, which is the exact distribution of repeated coin flips.
    """
    probs = [float(p) for p in probs]
    if len(probs) != n:
        raise DomainError(f"expected {n} probabilities, got {len(probs)}")
    for p in probs:
        if not 0 < p <= 1:
            raise DomainError(f"success probabilities must lie in (0, 1], got {p!r}")
    if trials < 1:
        raise DomainError("trials must be at least 1")
    needed = np.ones(trials, dtype=np.int64)
    for p in reversed(probs):
        attempts = needed + (rng.negative_binomial(needed, p) if p < 1 else 0)
        needed = 2 * attempts
    return float(np.mean(needed))


def monte_carlo_resources(step, z0, n: int, trials: int, rng) -> float:
    """Sampled resource count for the protocol started at ``z0``.

    The per-level success probabilities come from the conditioned trajectory
    (every level-``k`` qubit is in the same state), then the coin-flip
    pairing process is sampled with :func:`sample_resources`. ``step`` is a
    gate or any ``z -> StepResult`` function.
    """
    if isinstance(step, TwoQubitGate):
        gate = step
        step = lambda z: protocol_step(gate, z)  # noqa: E731
    probs = run_protocol(step, z0, n).probs
    return sample_resources(probs, n, trials, rng)


def apply_single(gate: SingleQubitGate, z):
    s = state_from_z(z).vector
    out = gate.matrix @ s
    return z_from_state(PureState(out[0], out[1]))


def decomposed_step(eps_gate: TwoQubitGate, v: SingleQubitGate, z) -> StepResult:
    """Rotate by ``v^H``, run the contraction step, rotate back by ``v``."""
    inner = protocol_step(eps_gate, apply_single(v.dagger, z))
    out = v.matrix @ inner.post_state.vector
    post = PureState(out[0], out[1])
    return StepResult(post, z_from_state(post), inner.success_prob, inner.discard_prob)
