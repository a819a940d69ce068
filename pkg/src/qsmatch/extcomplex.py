"""
Points of the Riemann sphere and generalized circles (circles or lines).

A finite point is an ordinary Python ``complex``; the point at infinity is
the singleton :data:`INF`. Every routine that accepts a point goes through
:func:`as_ext`, so ints, floats, numpy scalars and ``INF`` are all fine.
"""
from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from .errors import DomainError


class _Infinity:
    """The single point at infinity."""

    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()

ExtComplex = Union[complex, _Infinity]


def is_inf(z) -> bool:
    return z is INF


def as_ext(z) -> ExtComplex:
    """Coerce ``z`` to a point of the extended plane.

    Any complex value with an infinite component is the point at infinity
    (there is only one). NaN is rejected.
    """
    if z is INF:
        return INF
    try:
        w = complex(z)
    except (TypeError, ValueError) as exc:
        raise DomainError(f"not a complex number: {z!r}") from exc
    if cmath.isnan(w):
        raise DomainError(f"NaN is not a point of the extended plane: {z!r}")
    if cmath.isinf(w):
        return INF
    return w


def to_pair(z) -> tuple[complex, complex]:
    """Homogeneous coordinates ``(u, v)`` with ``z = u/v`` and max(|u|,|v|) = 1."""
    z = as_ext(z)
    if z is INF:
        return 1.0 + 0j, 0j
    if abs(z) <= 1.0:
        return z, 1.0 + 0j
    return 1.0 + 0j, 1.0 / z


def from_pair(u: complex, v: complex) -> ExtComplex:
    if u == 0 and v == 0:
        raise DomainError("(0:0) is not a point of the projective line")
    if v == 0:
        return INF
    with np.errstate(over="ignore"):
        w = complex(u) / complex(v)
    if cmath.isinf(w) or cmath.isnan(w):
        return INF
    return w


def chordal_distance(z, w) -> float:
    """Chordal distance on the Riemann sphere, in [0, 2]."""
    u1, v1 = to_pair(z)
    u2, v2 = to_pair(w)
    num = abs(u1 * v2 - u2 * v1)
    den = math.sqrt((abs(u1) ** 2 + abs(v1) ** 2) * (abs(u2) ** 2 + abs(v2) ** 2))
    return 2.0 * num / den


def projective_distance(x, y) -> float:
    """Distance between two coefficient vectors up to a common complex factor.

    Both vectors are scaled to unit norm, ``y`` is phase-aligned to ``x`` and
    the max-norm of the difference is returned. Zero means proportional.
    """
    x = np.asarray(x, dtype=complex).ravel()
    y = np.asarray(y, dtype=complex).ravel()
    nx, ny = np.linalg.norm(x), np.linalg.norm(y)
    if nx == 0 or ny == 0:
        raise DomainError("zero coefficient vector has no projective class")
    x, y = x / nx, y / ny
    ip = np.vdot(y, x)
    phase = ip / abs(ip) if abs(ip) > 0 else 1.0
    return float(np.max(np.abs(x - phase * y)))


class Location(enum.Enum):
    INSIDE = "inside"
    ON = "on"
    OUTSIDE = "outside"


_LINE_TOL = 1e-13
_DEGENERATE_TOL = 1e-14


@dataclass(frozen=True)
class GeneralizedCircle:
    """The locus ``A|z|^2 + 2 Re(conj(B) z) + C = 0``.

    Coefficients are canonicalized on construction: ``A = 1`` for a circle,
    ``A = 0`` and ``|B| = 1`` for a line. A line always passes through
    :data:`INF`.
    """

    A: float
    B: complex
    C: float

    def __post_init__(self):
        A, B, C = float(self.A), complex(self.B), float(self.C)
        if not all(map(math.isfinite, (A, B.real, B.imag, C))):
            raise DomainError("circle coefficients must be finite")
        scale = max(abs(A), abs(B), abs(C))
        if scale == 0:
            raise DomainError("all-zero circle coefficients")
        A, B, C = A / scale, B / scale, C / scale
        if abs(B) ** 2 - A * C <= _DEGENERATE_TOL:
            raise DomainError(
                f"degenerate generalized circle: |B|^2 - AC = {abs(B) ** 2 - A * C:.3e}"
            )
        if abs(A) <= _LINE_TOL:
            A, B, C = 0.0, B / abs(B), C / abs(B)
        else:
            A, B, C = 1.0, B / A, C / A
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "B", B)
        object.__setattr__(self, "C", C)

    @property
    def is_line(self) -> bool:
        return self.A == 0.0

    @property
    def center(self) -> complex:
        if self.is_line:
            raise DomainError("a line has no center")
        return -self.B / self.A

    @property
    def radius(self) -> float:
        if self.is_line:
            raise DomainError("a line has no radius")
        return math.sqrt(abs(self.B) ** 2 / self.A**2 - self.C / self.A)

    def hermitian(self) -> np.ndarray:
        """Matrix ``H`` with ``form(z) = v^H H v`` for ``v = (z, 1)``."""
        return np.array([[self.A, self.B], [np.conj(self.B), self.C]], dtype=complex)

    def form(self, z) -> float:
        z = as_ext(z)
        if z is INF:
            return math.inf if self.A > 0 else 0.0
        return self.A * abs(z) ** 2 + 2.0 * (self.B.conjugate() * z).real + self.C


def circle_from_center_radius(center, radius) -> GeneralizedCircle:
    center = complex(center)
    radius = float(radius)
    if not math.isfinite(radius) or radius <= 0:
        raise DomainError(f"radius must be positive and finite, got {radius!r}")
    if cmath.isinf(center) or cmath.isnan(center):
        raise DomainError(f"center must be finite, got {center!r}")
    return GeneralizedCircle(1.0, -center, abs(center) ** 2 - radius**2)


def unit_circle() -> GeneralizedCircle:
    return GeneralizedCircle(1.0, 0j, -1.0)


def classify_point(gc: GeneralizedCircle, z, tol: float = 1e-12) -> Location:
    """Inside/On/Outside from the sign of the defining form.

    The On band is ``|form(z)| <= tol * (1 + |z|^2)``. For a line, Inside is
    the side where the form is negative, and INF lies On it.
    """
    if tol < 0:
        raise DomainError("tol must be non-negative")
    z = as_ext(z)
    if z is INF:
        return Location.ON if gc.is_line else Location.OUTSIDE
    value = gc.form(z)
    if abs(value) <= tol * (1.0 + abs(z) ** 2):
        return Location.ON
    return Location.INSIDE if value < 0 else Location.OUTSIDE


def sample_circle(gc: GeneralizedCircle, n: int) -> np.ndarray:
    """``n`` equally spaced points ``c + r exp(2 pi i k / n)``."""
    if gc.is_line:
        raise DomainError("sample_circle does not support lines")
    if n < 1:
        raise DomainError("n must be at least 1")
    phi = 2.0 * np.pi * np.arange(n) / n
    return gc.center + gc.radius * np.exp(1j * phi)
