"""
Pure qubit states labelled by a point of the extended plane,

    |psi_z> = (|0> + z |1>) / sqrt(1 + |z|^2),   |psi_INF> = |1>,

with scalar products, orthogonal partners, Bloch vectors and the circles of
constant overlap with a reference state.
"""
from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .extcomplex import INF, GeneralizedCircle, as_ext


@dataclass(frozen=True)
class PureState:
    """Normalized amplitudes, global phase fixed so the first nonzero one is real >= 0."""

    amplitude0: complex
    amplitude1: complex

    def __post_init__(self):
        a0, a1 = complex(self.amplitude0), complex(self.amplitude1)
        norm = math.hypot(abs(a0), abs(a1))
        if norm == 0 or not math.isfinite(norm):
            raise DomainError("state vector must be nonzero and finite")
        a0, a1 = a0 / norm, a1 / norm
        lead = a0 if abs(a0) > 0 else a1
        phase = lead / abs(lead)
        a0, a1 = a0 / phase, a1 / phase
        if abs(a0) > 0:
            a0 = complex(a0.real, 0.0)
        else:
            a1 = complex(a1.real, 0.0)
        object.__setattr__(self, "amplitude0", a0)
        object.__setattr__(self, "amplitude1", a1)

    @property
    def vector(self) -> np.ndarray:
        return np.array([self.amplitude0, self.amplitude1], dtype=complex)


@dataclass(frozen=True)
class BlochVector:
    x: float
    y: float
    z: float

    @property
    def array(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z])

    def dot(self, other: "BlochVector") -> float:
        return float(self.array @ other.array)


def state_from_z(z) -> PureState:
    z = as_ext(z)
    if z is INF:
        return PureState(0j, 1 + 0j)
    r = abs(z)
    if r <= 1:
        n = math.sqrt(1 + r * r)
        return PureState(1 / n, z / n)
    # divide through by |z| to keep large z finite
    n = math.sqrt(1 + 1 / (r * r))
    return PureState(1 / (r * n), (z / r) / n)


def z_from_state(s: PureState):
    if s.amplitude0 == 0:
        return INF
    w = s.amplitude1 / s.amplitude0
    return INF if cmath.isinf(w) else w


def overlap(z1, z2) -> complex:
    """Scalar product ``<psi_z1 | psi_z2>`` of the canonical states."""
    s1, s2 = state_from_z(z1), state_from_z(z2)
    return complex(np.vdot(s1.vector, s2.vector))


def overlap_sq(z1, z2) -> float:
    return abs(overlap(z1, z2)) ** 2


def orthogonal_partner(z):
    """``-1/z*``, the label of the state orthogonal to ``psi_z``."""
    z = as_ext(z)
    if z is INF:
        return 0j
    if z == 0:
        return INF
    return -1 / z.conjugate()


def bloch_vector(z) -> BlochVector:
    """Bloch vector with |0> at +z and <sigma_y> = 2 Im(z) / (1 + |z|^2)."""
    s = state_from_z(z)
    cross = s.amplitude0.conjugate() * s.amplitude1
    return BlochVector(
        2 * cross.real, 2 * cross.imag, abs(s.amplitude0) ** 2 - abs(s.amplitude1) ** 2
    )


def _check_overlap(s_abs):
    s_abs = float(s_abs)
    if not 0 < s_abs < 1:
        raise DomainError(f"overlap must lie in (0, 1), got {s_abs!r}")
    return s_abs


def overlap_circle(z1, s_abs) -> GeneralizedCircle:
    """Locus of ``z`` with ``|<psi_z1|psi_z>| = s_abs``.

    Expanding ``|1 + z1* z|^2 = S (1 + |z|^2)`` with ``S = s^2 (1 + |z1|^2)``
    gives the form with ``A = |z1|^2 - S``, ``B = z1``, ``C = 1 - S``. Its
    center is ``z1 / (S - |z1|^2)`` and radius
    ``s (1 + |z1|^2) sqrt(1 - s^2) / |S - |z1|^2|``; when ``S = |z1|^2`` the
    locus is the line ``2 Re(z1* z) = |z1|^2 - 1``.

    For ``z1 = INF`` the circle of overlap ``s`` with |1> is the circle of
    overlap ``sqrt(1 - s^2)`` with |0>.
    """
    s_abs = _check_overlap(s_abs)
    z1 = as_ext(z1)
    if z1 is INF:
        return overlap_circle(0j, math.sqrt(1 - s_abs * s_abs))
    n1 = abs(z1) ** 2
    big_s = s_abs * s_abs * (1 + n1)
    return GeneralizedCircle(n1 - big_s, z1, 1 - big_s)


class ReferenceSide(enum.Enum):
    REFERENCE_INSIDE = "reference-inside"
    LINE = "line"
    PARTNER_INSIDE = "partner-inside"


def reference_inside(z1, s_abs, tol: float = 1e-12) -> ReferenceSide:
    """Which of ``z1`` and ``-1/z1*`` the overlap circle encloses on the plane.

    Compares ``s^2`` with ``|z1|^2 / (1 + |z1|^2)``; within ``tol`` the locus
    is a line.
    """
    s_abs = _check_overlap(s_abs)
    z1 = as_ext(z1)
    if z1 is INF or z1 == 0:
        raise DomainError("reference_inside needs a finite nonzero reference")
    s0_sq = abs(z1) ** 2 / (1 + abs(z1) ** 2)
    diff = s_abs * s_abs - s0_sq
    if abs(diff) <= tol:
        return ReferenceSide.LINE
    return ReferenceSide.REFERENCE_INSIDE if diff > 0 else ReferenceSide.PARTNER_INSIDE
