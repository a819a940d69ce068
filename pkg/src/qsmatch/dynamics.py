"""
Quadratic rational maps

    f(z) = (a0 z^2 + a1 z + a2) / (b0 z^2 + b1 z + b2)

on the Riemann sphere: evaluation, fixed points and multipliers, the
fixed-point normal form, conjugation by Moebius transformations and iteration.

All evaluation is done in homogeneous coordinates ``(u : v)``, so poles and
the point at infinity need no special casing.
"""
from __future__ import annotations

import cmath
import itertools
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateError, DomainError
from .extcomplex import INF, as_ext, chordal_distance, from_pair, projective_distance, to_pair
from .moebius import AnyMoebius, _m

RESULTANT_TOL = 1e-10


def _resultant(num, den) -> complex:
    """Resultant of the two binary quadratic forms (vanishes iff they share a root)."""
    a0, a1, a2 = num
    b0, b1, b2 = den
    sylvester = np.array(
        [[a0, a1, a2, 0], [0, a0, a1, a2], [b0, b1, b2, 0], [0, b0, b1, b2]], dtype=complex
    )
    return complex(np.linalg.det(sylvester))


class QuadraticRationalMap:
    """Coefficients ``(a0, a1, a2, b0, b1, b2)``, stored scaled to max modulus 1.

    Raises :class:`DegenerateError` if numerator and denominator share a root
    (this includes ``a0 = b0 = 0``, a common root at infinity).
    """

    __slots__ = ("_coeffs",)

    def __init__(self, a0, a1, a2, b0, b1, b2):
        coeffs = np.array([a0, a1, a2, b0, b1, b2], dtype=complex)
        if not np.all(np.isfinite(coeffs)):
            raise DomainError("map coefficients must be finite")
        scale = np.max(np.abs(coeffs))
        if scale == 0:
            raise DegenerateError("all-zero map coefficients")
        coeffs = coeffs / scale
        res = _resultant(coeffs[:3], coeffs[3:])
        if abs(res) <= RESULTANT_TOL:
            raise DegenerateError(
                "numerator and denominator share a root, so the map is not a genuine "
                f"quadratic rational map (|resultant| = {abs(res):.3e} at unit coefficient scale)"
            )
        coeffs.setflags(write=False)
        self._coeffs = coeffs

    @classmethod
    def from_polys(cls, num, den) -> "QuadraticRationalMap":
        return cls(*num, *den)

    @property
    def coefficients(self) -> np.ndarray:
        return self._coeffs

    @property
    def numerator(self) -> np.ndarray:
        return self._coeffs[:3]

    @property
    def denominator(self) -> np.ndarray:
        return self._coeffs[3:]

    a0 = property(lambda self: self._coeffs[0])
    a1 = property(lambda self: self._coeffs[1])
    a2 = property(lambda self: self._coeffs[2])
    b0 = property(lambda self: self._coeffs[3])
    b1 = property(lambda self: self._coeffs[4])
    b2 = property(lambda self: self._coeffs[5])

    @property
    def resultant(self) -> complex:
        return _resultant(self.numerator, self.denominator)

    def __call__(self, z):
        return eval_map(self, z)

    def __repr__(self):
        a0, a1, a2, b0, b1, b2 = (complex(c) for c in self._coeffs)
        return (
            f"QuadraticRationalMap(({a0:.6g}) z^2 + ({a1:.6g}) z + ({a2:.6g}) / "
            f"({b0:.6g}) z^2 + ({b1:.6g}) z + ({b2:.6g}))"
        )


def same_map(f: QuadraticRationalMap, h: QuadraticRationalMap, tol: float = 1e-10) -> bool:
    """Projective coefficient equality."""
    return projective_distance(f.coefficients, h.coefficients) <= tol


def eval_pairs(f: QuadraticRationalMap, u, v):
    """Apply ``f`` to homogeneous coordinates (scalars or arrays).

    Returns ``(P(u, v), Q(u, v))`` rescaled so that max(|P|, |Q|) = 1.
    """
    a0, a1, a2, b0, b1, b2 = f.coefficients
    uu, uv, vv = u * u, u * v, v * v
    p = a0 * uu + a1 * uv + a2 * vv
    q = b0 * uu + b1 * uv + b2 * vv
    s = np.maximum(np.abs(p), np.abs(q))
    return p / s, q / s


def eval_map(f: QuadraticRationalMap, z):
    u, v = to_pair(z)
    p, q = eval_pairs(f, u, v)
    return from_pair(complex(p), complex(q))


def iterate(f: QuadraticRationalMap, z0, n: int) -> list:
    """Orbit ``[z0, f(z0), ..., f^n(z0)]``."""
    if n < 0:
        raise DomainError("n must be non-negative")
    traj = [as_ext(z0)]
    for _ in range(n):
        traj.append(eval_map(f, traj[-1]))
    return traj


# -- fixed points -----------------------------------------------------------


def _cardano(c3, c2, c1, c0):
    """Roots of c3 z^3 + c2 z^2 + c1 z + c0 (c3 != 0), closed form."""
    B, C, D = c2 / c3, c1 / c3, c0 / c3
    d0 = B * B - 3 * C
    d1 = 2 * B**3 - 9 * B * C + 27 * D
    sq = cmath.sqrt(d1 * d1 - 4 * d0**3)
    big = d1 + sq if abs(d1 + sq) >= abs(d1 - sq) else d1 - sq
    if big == 0:
        # d0 == d1 == 0: triple root
        return [-B / 3] * 3
    cc = (big / 2) ** (1 / 3)
    xi = complex(-0.5, 3**0.5 / 2)
    roots = []
    for k in range(3):
        ck = cc * xi**k
        roots.append(-(B + ck + d0 / ck) / 3)
    return roots


def _horner(coeffs, z):
    """Value and derivative of a polynomial, highest degree first."""
    p, dp = 0j, 0j
    for c in coeffs:
        dp = dp * z + p
        p = p * z + c
    return p, dp


def _polish(coeffs, z, steps=4):
    """Newton steps on ``coeffs`` (highest first), keeping only improvements."""
    best, best_res = z, abs(_horner(coeffs, z)[0])
    for _ in range(steps):
        p, dp = _horner(coeffs, best)
        if dp == 0 or best_res == 0:
            break
        cand = best - p / dp
        res = abs(_horner(coeffs, cand)[0])
        if res >= best_res:
            break
        best, best_res = cand, res
    return best


def _polish_root(cubic, z):
    """Polish a root of the cubic in whichever chart keeps |z| <= 1."""
    if z is INF:
        return INF
    if abs(z) <= 1:
        return _polish(cubic, z)
    w = _polish(cubic[::-1], 1 / z)
    return INF if w == 0 else 1 / w


def fixed_point_cubic(f: QuadraticRationalMap) -> np.ndarray:
    """Coefficients (highest first) of b0 z^3 + (b1-a0) z^2 + (b2-a1) z - a2."""
    a0, a1, a2, b0, b1, b2 = f.coefficients
    return np.array([b0, b1 - a0, b2 - a1, -a2], dtype=complex)


def _raw_fixed_points(f: QuadraticRationalMap) -> list:
    cubic = fixed_point_cubic(f)
    c3, c2, c1, c0 = cubic
    scale = np.max(np.abs(cubic))
    if abs(c3) <= 1e-14 * scale:
        # degree drop: INF is fixed, the rest solve the quadratic
        if abs(c2) <= 1e-14 * scale:
            raise DegenerateError("INF is a multiple fixed point (parabolic)")
        disc = cmath.sqrt(c1 * c1 - 4 * c2 * c0)
        big = -c1 - disc if abs(-c1 - disc) >= abs(-c1 + disc) else -c1 + disc
        if big == 0:
            roots = [0j, 0j]
        else:
            roots = [big / (2 * c2), 2 * c0 / big]
        return [INF] + [_polish_root(cubic, as_ext(r)) for r in roots]
    return [_polish_root(cubic, as_ext(r)) for r in _cardano(c3, c2, c1, c0)]


def multiplier(f: QuadraticRationalMap, z) -> complex:
    """``f'(z)`` at a fixed point ``z`` (chart-independent).

    For |z| > 1 and at INF the derivative is taken in the chart w = 1/z,
    i.e. of ``1 / f(1 / w)``.
    """
    z = as_ext(z)
    a0, a1, a2, b0, b1, b2 = f.coefficients
    if z is not INF and abs(z) <= 1:
        p, dp = _horner((a0, a1, a2), z)
        q, dq = _horner((b0, b1, b2), z)
        return (dp * q - p * dq) / (q * q)
    w = 0j if z is INF else 1 / z
    # 1/f(1/w) = (b2 w^2 + b1 w + b0) / (a2 w^2 + a1 w + a0)
    p, dp = _horner((b2, b1, b0), w)
    q, dq = _horner((a2, a1, a0), w)
    return (dp * q - p * dq) / (q * q)


def _point_key(z):
    return (np.inf, np.inf) if z is INF else (z.real, z.imag)


@dataclass(frozen=True)
class FixedPointData:
    """Fixed points ``z_i`` and multipliers ``mu_i = f'(z_i)``.

    Sorted by ascending ``|mu|`` (compared to 1e-9), ties broken by
    ``(re, im)`` of the point with INF last.
    """

    points: tuple
    multipliers: tuple

    def __iter__(self):
        return iter(zip(self.points, self.multipliers))


def fixed_points(f: QuadraticRationalMap, separation: float = 1e-6) -> FixedPointData:
    """The three fixed points of ``f`` with their multipliers.

    Roots come from Cardano's formula (or the quadratic when INF is fixed) and
    are Newton-polished. Raises :class:`DegenerateError` when two fixed points
    are closer than ``separation`` in chordal distance, i.e. a parabolic
    (multiplier 1) fixed point.
    """
    pts = _raw_fixed_points(f)
    for z, w in itertools.combinations(pts, 2):
        if chordal_distance(z, w) < separation:
            raise DegenerateError(
                f"multiple fixed point near {z!r} (chordal separation "
                f"{chordal_distance(z, w):.2e}); the map has a parabolic fixed point"
            )
    pts = [z if z is INF else complex(z) for z in pts]
    data = [(z, complex(multiplier(f, z))) for z in pts]
    data.sort(key=lambda zm: (round(abs(zm[1]), 9), *_point_key(zm[0])))
    return FixedPointData(tuple(z for z, _ in data), tuple(m for _, m in data))


def normal_form(mu1, mu2) -> QuadraticRationalMap:
    """``z (z + mu1) / (mu2 z + 1)``: fixed points 0 and INF with multipliers mu1, mu2."""
    mu1, mu2 = complex(mu1), complex(mu2)
    if abs(mu1 * mu2 - 1) <= 1e-12:
        raise DomainError("normal form requires mu1 * mu2 != 1")
    return QuadraticRationalMap(1, mu1, 0, 0, mu2, 1)


def basic_map() -> QuadraticRationalMap:
    """``f0(z) = z^2``."""
    return QuadraticRationalMap(1, 0, 0, 0, 0, 1)


# -- conjugation ------------------------------------------------------------


def _substitute(form, lin) -> np.ndarray:
    """Coefficients of ``c0 u^2 + c1 u v + c2 v^2`` after ``(u, v) = lin @ (U, V)``."""
    (al, be), (ga, de) = lin
    sym = np.array(
        [
            [al * al, 2 * al * be, be * be],
            [al * ga, al * de + be * ga, be * de],
            [ga * ga, 2 * ga * de, de * de],
        ]
    )
    return np.asarray(form) @ sym


def conjugate(f: QuadraticRationalMap, g: AnyMoebius) -> QuadraticRationalMap:
    """``g o f o g^-1`` computed on the coefficients."""
    g = _m(g)
    adj = np.array([[g.d, -g.b], [-g.c, g.a]])
    p = _substitute(f.numerator, adj)
    q = _substitute(f.denominator, adj)
    num = g.a * p + g.b * q
    den = g.c * p + g.d * q
    try:
        return QuadraticRationalMap.from_polys(num, den)
    except DegenerateError as exc:
        raise DegenerateError(f"conjugation by {g} produced a degenerate map: {exc}") from exc
