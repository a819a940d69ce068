"""
Two-qubit gates realizing quadratic rational maps by post-selection.

Protocol: prepare ``|psi_z>_A |psi_z>_B``, apply ``U`` (basis |00>, |01>,
|10>, |11>, qubit A first), measure B, keep A only on outcome 0. Then A ends
up in ``|0> + f(z) |1>`` with

    f(z) = (u31 + (u32 + u33) z + u34 z^2) / (u11 + (u12 + u13) z + u14 z^2),

so rows 1 and 3 of ``U`` fix the map and rows 2 and 4 are free.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .dynamics import QuadraticRationalMap
from .errors import DegenerateError, DomainError
from .moebius import UnitaryMoebius

UNITARY_TOL = 1e-12

BASIS = ("00", "01", "10", "11")


def unitarity_error(m) -> float:
    m = np.asarray(m, dtype=complex)
    return float(np.max(np.abs(m.conj().T @ m - np.eye(m.shape[0]))))


@dataclass(frozen=True, eq=False)
class TwoQubitGate:
    matrix: np.ndarray

    def __post_init__(self):
        m = np.array(self.matrix, dtype=complex)
        if m.shape != (4, 4):
            raise DomainError(f"two-qubit gate must be 4x4, got {m.shape}")
        err = unitarity_error(m)
        if not err < UNITARY_TOL:
            raise DomainError(f"matrix is not unitary: max|U^H U - I| = {err:.3e}")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)


@dataclass(frozen=True, eq=False)
class SingleQubitGate:
    matrix: np.ndarray

    def __post_init__(self):
        m = np.array(self.matrix, dtype=complex)
        if m.shape != (2, 2):
            raise DomainError(f"single-qubit gate must be 2x2, got {m.shape}")
        err = unitarity_error(m)
        if not err < UNITARY_TOL:
            raise DomainError(f"matrix is not unitary: max|U^H U - I| = {err:.3e}")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @property
    def dagger(self) -> "SingleQubitGate":
        return SingleQubitGate(self.matrix.conj().T)


def worked_example_gate() -> TwoQubitGate:
    """Gate for reference (|0> + i|1>)/sqrt(2), squared overlap threshold 0.9."""
    m = np.array(
        [
            [1 - 3j, 7 - 1j, -1 - 1j, -1 + 3j],
            [6, 0, 0, 6],
            [-3 + 1j, 1 + 1j, 1 - 7j, 3 - 1j],
            [-4, 2 + 4j, -2 + 4j, 4],
        ]
    )
    return TwoQubitGate(m / (6 * math.sqrt(2)))


def induced_map(gate: TwoQubitGate) -> QuadraticRationalMap:
    """The map realized by ``gate`` under the keep-if-B-is-0 protocol."""
    u = gate.matrix
    try:
        return QuadraticRationalMap(
            u[2, 3], u[2, 1] + u[2, 2], u[2, 0], u[0, 3], u[0, 1] + u[0, 2], u[0, 0]
        )
    except DegenerateError as exc:
        raise DegenerateError(f"gate does not induce a quadratic rational map: {exc}") from exc


def _solve_differences(f: QuadraticRationalMap):
    """Solve for ``at = u32 - u33`` and ``bt = u12 - u13``.

    Orthogonality and equal norms of rows 1 and 3 require
    ``|at|^2 - |bt|^2 = D`` and ``conj(at) bt = w``. We take ``at`` real and
    non-negative, so ``bt = w / at``.
    """
    a0, a1, a2, b0, b1, b2 = f.coefficients
    sq = lambda x: abs(x) ** 2  # noqa: E731
    big_d = 2 * (sq(b2) + sq(b1) / 2 + sq(b0) - sq(a2) - sq(a1) / 2 - sq(a0))
    w = -2 * (np.conj(a2) * b2 + np.conj(a1) * b1 / 2 + np.conj(a0) * b0)
    at_sq = (big_d + math.sqrt(big_d**2 + 4 * abs(w) ** 2)) / 2
    at = math.sqrt(max(at_sq, 0.0))
    if at > 0:
        bt = w / at
    else:
        # at = 0 forces w = 0, and then |bt|^2 = -D
        bt = complex(math.sqrt(max(-big_d, 0.0)))
    return complex(at), complex(bt)


def _complete_rows(rows: np.ndarray, count: int) -> list:
    """``count`` orthonormal vectors orthogonal to the orthonormal ``rows``.

    Gram-Schmidt (applied twice) on standard basis vectors, taking at each
    stage the candidate with the largest residual; each vector's largest
    entry is then made real and positive.
    """
    basis = [r for r in rows]
    extra = []
    for _ in range(count):
        best, best_norm = None, -1.0
        for e in np.eye(4, dtype=complex):
            r = e.copy()
            for _ in range(2):
                for b in basis:
                    r -= np.vdot(b, r) * b
            n = np.linalg.norm(r)
            if n > best_norm:
                best, best_norm = r, n
        vec = best / best_norm
        k = int(np.argmax(np.abs(vec)))
        vec = vec * (abs(vec[k]) / vec[k])
        basis.append(vec)
        extra.append(vec)
    return extra


def synthesize_unitary(f: QuadraticRationalMap) -> TwoQubitGate:
    """A two-qubit unitary whose post-selected action on ``psi_z`` is ``f``."""
    a0, a1, a2, b0, b1, b2 = f.coefficients
    at, bt = _solve_differences(f)
    row1 = np.array([b2, (b1 + bt) / 2, (b1 - bt) / 2, b0], dtype=complex)
    row3 = np.array([a2, (a1 + at) / 2, (a1 - at) / 2, a0], dtype=complex)
    n1, n3 = np.linalg.norm(row1), np.linalg.norm(row3)
    cross = abs(np.vdot(row3, row1))
    if abs(n1 - n3) > 1e-10 * n1 or cross > 1e-10 * n1 * n3:
        raise DegenerateError(
            f"row constraints failed: |row1| = {n1:.6g}, |row3| = {n3:.6g}, "
            f"|<row3|row1>| = {cross:.3e}"
        )
    row1, row3 = row1 / n1, row3 / n1
    # remove the residual overlap left by rounding before completing the basis
    row3 = row3 - np.vdot(row1, row3) * row1
    row3 /= np.linalg.norm(row3)
    row2, row4 = _complete_rows(np.array([row1, row3]), 2)
    return TwoQubitGate(np.array([row1, row2, row3, row4]))


def contraction_gate(epsilon: float) -> TwoQubitGate:
    """The gate realizing ``z^2 / eps`` for ``0 < eps < 1``."""
    e = float(epsilon)
    if not 0 < e < 1:
        raise DomainError(f"epsilon must lie in (0, 1), got {epsilon!r}")
    s = math.sqrt(1 - e * e)
    h = 1 / math.sqrt(2)
    return TwoQubitGate(
        np.array(
            [
                [e, s * h, -s * h, 0],
                [0, h, h, 0],
                [0, 0, 0, 1],
                [s, -e * h, e * h, 0],
            ],
            dtype=complex,
        )
    )


def single_qubit_gate(g: UnitaryMoebius) -> SingleQubitGate:
    """``[[p*, -q*], [q, p]]``: maps ``psi_z`` to ``psi_{g(z)}`` up to phase."""
    p, q = g.p, g.q
    return SingleQubitGate(np.array([[p.conjugate(), -q.conjugate()], [q, p]]))
