"""
Moebius transformations ``g(z) = (a z + b) / (c z + d)`` of the Riemann sphere.

Transforms are stored projectively, scaled so the largest coefficient has
modulus one. Unitary transforms ``(p z + q) / (-q* z + p*)`` with
``|p|^2 + |q|^2 = 1`` get their own type because they correspond to
single-qubit gates; every function here accepts either kind.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import NamedTuple, Union

import numpy as np

from .errors import DegenerateError, DomainError
from .extcomplex import (
    INF,
    GeneralizedCircle,
    as_ext,
    from_pair,
    projective_distance,
    to_pair,
)


@dataclass(frozen=True)
class Moebius:
    a: complex
    b: complex
    c: complex
    d: complex

    def __post_init__(self):
        coeffs = [complex(x) for x in (self.a, self.b, self.c, self.d)]
        if not all(cmath.isfinite(x) for x in coeffs):
            raise DomainError("Moebius coefficients must be finite")
        scale = max(abs(x) for x in coeffs)
        if scale == 0:
            raise DomainError("all-zero Moebius coefficients")
        a, b, c, d = (x / scale for x in coeffs)
        if abs(a * d - b * c) <= 1e-14:
            raise DomainError(f"singular Moebius transformation: ad - bc = {a * d - b * c:.3e}")
        for name, value in zip("abcd", (a, b, c, d)):
            object.__setattr__(self, name, value)

    @classmethod
    def from_matrix(cls, m) -> "Moebius":
        m = np.asarray(m, dtype=complex)
        return cls(m[0, 0], m[0, 1], m[1, 0], m[1, 1])

    @property
    def matrix(self) -> np.ndarray:
        return np.array([[self.a, self.b], [self.c, self.d]], dtype=complex)

    @property
    def determinant(self) -> complex:
        return self.a * self.d - self.b * self.c

    def __call__(self, z):
        return apply(self, z)


@dataclass(frozen=True)
class UnitaryMoebius:
    """``g_U(z) = (p z + q) / (-q* z + p*)`` with ``|p|^2 + |q|^2 = 1``."""

    p: complex
    q: complex

    def __post_init__(self):
        p, q = complex(self.p), complex(self.q)
        if abs(abs(p) ** 2 + abs(q) ** 2 - 1.0) > 1e-12:
            raise DomainError(f"|p|^2 + |q|^2 = {abs(p) ** 2 + abs(q) ** 2!r}, expected 1")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    @property
    def moebius(self) -> Moebius:
        return Moebius(self.p, self.q, -self.q.conjugate(), self.p.conjugate())

    @property
    def matrix(self) -> np.ndarray:
        return self.moebius.matrix

    def __call__(self, z):
        return apply(self, z)


AnyMoebius = Union[Moebius, UnitaryMoebius]


def _m(g: AnyMoebius) -> Moebius:
    if isinstance(g, UnitaryMoebius):
        return g.moebius
    if isinstance(g, Moebius):
        return g
    raise TypeError(f"expected a Moebius transformation, got {type(g).__name__}")


def identity() -> Moebius:
    return Moebius(1, 0, 0, 1)


def apply(g: AnyMoebius, z):
    """Evaluate ``g`` at a point of the extended plane.

    ``g(INF) = a/c`` (INF when c = 0) and ``g(-d/c) = INF``.
    """
    g = _m(g)
    u, v = to_pair(z)
    return from_pair(g.a * u + g.b * v, g.c * u + g.d * v)


def compose(g2: AnyMoebius, g1: AnyMoebius) -> Moebius:
    """``g2 o g1``: apply ``g1`` first."""
    return Moebius.from_matrix(_m(g2).matrix @ _m(g1).matrix)


def inverse(g: AnyMoebius) -> Moebius:
    g = _m(g)
    return Moebius(g.d, -g.b, -g.c, g.a)


def equivalent(g1: AnyMoebius, g2: AnyMoebius, tol: float = 1e-10) -> bool:
    """True if the two transforms agree up to a common scalar factor."""
    return projective_distance(_m(g1).matrix, _m(g2).matrix) <= tol


class Decomposition(NamedTuple):
    kind: str
    factors: tuple


def decompose_elementary(g: AnyMoebius) -> Decomposition:
    """Split ``g`` into elementary factors, listed in order of application.

    For ``c != 0`` the factors are translate by d/c, invert, scale by
    ``(bc - ad)/c^2``, translate by a/c (``kind == "general"``). For an affine
    ``g`` (``c == 0``) they are scale by a/d then translate by b/d
    (``kind == "affine"``). Raises :class:`DegenerateError` when a factor is
    too extreme to represent (e.g. ``|d/c| > 1e7``).
    """
    g = _m(g)
    a, b, c, d = g.a, g.b, g.c, g.d
    try:
        if abs(c) <= 1e-15:
            return Decomposition("affine", (Moebius(a / d, 0, 0, 1), Moebius(1, b / d, 0, 1)))
        return Decomposition(
            "general",
            (
                Moebius(1, d / c, 0, 1),
                Moebius(0, 1, 1, 0),
                Moebius((b * c - a * d) / c**2, 0, 0, 1),
                Moebius(1, a / c, 0, 1),
            ),
        )
    except DomainError as exc:
        # a translation by t or scaling by k has normalized determinant
        # 1/|t|^2 or min(|k|, 1/|k|), so extreme factors look singular
        raise DegenerateError(f"elementary factors of {g} are numerically singular: {exc}") from exc


def recompose(factors) -> Moebius:
    out = identity()
    for h in factors:
        out = compose(h, out)
    return out


def transport_fixed_points(g: AnyMoebius, fps) -> list:
    """Images of fixed points of ``f`` under ``g``: the fixed points of ``g o f o g^-1``."""
    return [apply(g, z) for z in fps]


def map_circle(g: AnyMoebius, gc: GeneralizedCircle) -> GeneralizedCircle:
    """Image of a generalized circle, via congruence of its Hermitian form."""
    g = _m(g)
    adj = inverse(g).matrix
    h = adj.conj().T @ gc.hermitian() @ adj
    A, B, C = h[0, 0].real, h[0, 1], h[1, 1].real
    try:
        return GeneralizedCircle(A, B, C)
    except DomainError as exc:
        raise DegenerateError(
            f"image of {gc} under {g} is degenerate (A={A:.3e}, |B|={abs(B):.3e}, C={C:.3e})"
        ) from exc


def circle_through(z1, z2, z3) -> GeneralizedCircle:
    """Generalized circle through three distinct points (INF allowed)."""
    pts = [as_ext(z) for z in (z1, z2, z3)]
    rows = []
    for z in pts:
        if z is INF:
            rows.append([1.0, 0.0, 0.0, 0.0])
        else:
            rows.append([abs(z) ** 2, 2 * z.real, 2 * z.imag, 1.0])
    # null vector of the 3x4 system [A, Re B, Im B, C]
    _, _, vh = np.linalg.svd(np.array(rows))
    A, br, bi, C = vh[-1]
    return GeneralizedCircle(A, complex(br, bi), C)


def unitary_from_reference(z1, alpha_u: float = 0.0) -> UnitaryMoebius:
    """The unitary transform sending 0 to ``z1`` and INF to ``-1/z1*``."""
    z1 = as_ext(z1)
    if z1 is INF:
        return UnitaryMoebius(0j, cmath.exp(-1j * alpha_u))
    norm = math.sqrt(1.0 + abs(z1) ** 2)
    return UnitaryMoebius(cmath.exp(1j * alpha_u) / norm, z1 * cmath.exp(-1j * alpha_u) / norm)


def scaling(epsilon) -> Moebius:
    epsilon = complex(epsilon)
    if epsilon == 0 or not cmath.isfinite(epsilon):
        raise DomainError(f"scaling factor must be finite and nonzero, got {epsilon!r}")
    return Moebius(epsilon, 0, 0, 1)
