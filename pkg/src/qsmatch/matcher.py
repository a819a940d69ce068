"""
State matching with orthogonalizing superattractive maps.

Given a reference label ``z1`` and a minimum accepted overlap ``s_eps``, the
map

    f = g o f0 o g^-1,   g = g_U(z1) o g_eps,   f0(z) = z^2,

has superattractive fixed points at ``z1`` and ``-1/z1*`` and its Julia set is
exactly the circle of states with overlap ``s_eps`` with ``psi_z1``. Iterating
``f`` drives every state with larger overlap to ``psi_z1`` and every state
with smaller overlap to the orthogonal state.
"""
from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass
from typing import Callable, NamedTuple

import numpy as np

from .dynamics import QuadraticRationalMap, basic_map, conjugate, eval_pairs
from .errors import DegenerateError, DomainError
from .extcomplex import INF, GeneralizedCircle, as_ext, projective_distance, to_pair, unit_circle
from .moebius import Moebius, UnitaryMoebius, compose, map_circle, scaling, unitary_from_reference
from .qubit import orthogonal_partner, overlap

DEFAULT_TARGET_SQ = 0.994
DEFAULT_MAX_ITER = 30


@dataclass(frozen=True)
class MatcherSpec:
    """Reference ``z1``, minimum overlap ``s_eps`` and the two free phases."""

    z1: complex
    s_eps: float
    alpha_u: float = 0.0
    alpha_eps: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "z1", as_ext(self.z1))
        s = float(self.s_eps)
        if not 0 < s < 1:
            raise DomainError(f"s_eps must lie in (0, 1), got {s!r}")
        object.__setattr__(self, "s_eps", s)
        object.__setattr__(self, "alpha_u", float(self.alpha_u))
        object.__setattr__(self, "alpha_eps", float(self.alpha_eps))

    @classmethod
    def from_overlap_sq(cls, z1, s_eps_sq, **phases) -> "MatcherSpec":
        if not 0 < s_eps_sq < 1:
            raise DomainError(f"squared overlap must lie in (0, 1), got {s_eps_sq!r}")
        return cls(z1, math.sqrt(s_eps_sq), **phases)

    @property
    def epsilon(self) -> float:
        """``|eps| = sqrt(1 - s_eps^2) / s_eps``."""
        return math.sqrt(1 - self.s_eps**2) / self.s_eps

    @property
    def epsilon_complex(self) -> complex:
        return self.epsilon * cmath.exp(1j * self.alpha_eps)


def direct_map(z1, epsilon) -> QuadraticRationalMap:
    """The conjugated map written out in closed form (phases folded into ``epsilon``)."""
    z1, e = complex(z1), complex(epsilon)
    c = z1.conjugate()
    n1 = abs(z1) ** 2
    return QuadraticRationalMap(
        e * c * n1 + 1,
        2 * z1 * (e * c - 1),
        z1 * (e + z1),
        c * (e * c - 1),
        2 * c * (e + z1),
        e - z1 * n1,
    )


@dataclass(frozen=True, eq=False)
class Matcher:
    spec: MatcherSpec
    f: QuadraticRationalMap
    g: Moebius
    g_u: UnitaryMoebius
    julia: GeneralizedCircle
    partner: complex

    @property
    def z1(self):
        return self.spec.z1

    @property
    def epsilon(self) -> float:
        return self.spec.epsilon


def build_matcher(spec: MatcherSpec, check: bool = True) -> Matcher:
    """Construct ``f`` by conjugating ``z^2`` with ``g_U(z1) o g_eps``.

    With ``check`` the result is compared against the closed-form expansion
    of the same map; a mismatch raises :class:`DegenerateError`.
    """
    g_eps = scaling(spec.epsilon_complex)
    g_u = unitary_from_reference(spec.z1, spec.alpha_u)
    g = compose(g_u, g_eps)
    f = conjugate(basic_map(), g)
    if check and spec.z1 is not INF:
        # g_U with phase alpha_u equals the alpha_u = 0 transform after a
        # rotation by 2 alpha_u, which folds into eps
        eff = spec.epsilon_complex * cmath.exp(2j * spec.alpha_u)
        dist = projective_distance(f.coefficients, direct_map(spec.z1, eff).coefficients)
        if dist > 1e-9:
            raise DegenerateError(
                f"conjugated map disagrees with closed form (projective distance {dist:.2e})"
            )
    julia = map_circle(g, unit_circle())
    return Matcher(spec, f, g, g_u, julia, orthogonal_partner(spec.z1))


def julia_circle(m: Matcher) -> GeneralizedCircle:
    return m.julia


class InitialClass(enum.Enum):
    MATCH = "match"
    NO_MATCH = "no-match"
    BOUNDARY = "boundary"


def classify_initial(m: Matcher, z, tol: float = 1e-9) -> InitialClass:
    """Which basin ``z`` starts in, judged by its overlap with the reference."""
    s = abs(overlap(m.z1, z))
    if s > m.spec.s_eps + tol:
        return InitialClass.MATCH
    if s < m.spec.s_eps - tol:
        return InitialClass.NO_MATCH
    return InitialClass.BOUNDARY


class Outcome(enum.IntEnum):
    PARTNER = -1
    UNDECIDED = 0
    REFERENCE = 1


class MatchVerdict(NamedTuple):
    outcome: Outcome
    iterations: int


def _overlap_sq_pairs(ru, rv, u, v):
    num = np.abs(np.conj(rv) * v + np.conj(ru) * u) ** 2
    return num / ((abs(ru) ** 2 + abs(rv) ** 2) * (np.abs(u) ** 2 + np.abs(v) ** 2))


def pairs_from_points(zs):
    """Vectorized :func:`~qsmatch.extcomplex.to_pair` for finite points."""
    zs = np.asarray(zs, dtype=complex)
    big = np.abs(zs) > 1
    with np.errstate(divide="ignore", invalid="ignore"):
        inv = np.where(big, 1 / np.where(big, zs, 1), 1)
    return np.where(big, 1 + 0j, zs), inv.astype(complex)


StepFn = Callable[[np.ndarray, np.ndarray], tuple]


def decide(reference, u, v, target_sq, max_iter, step: StepFn):
    """Iterate ``step`` on homogeneous coordinates until each point is matched.

    Returns ``(region, iterations)`` arrays: region +1 when the squared overlap
    with ``reference`` reaches ``target_sq``, -1 for the orthogonal partner, 0
    when neither happens within ``max_iter`` steps (iterations = max_iter).
    """
    ru, rv = to_pair(reference)
    pu, pv = -np.conj(rv), np.conj(ru)
    u = np.array(u, dtype=complex, copy=True)
    v = np.array(v, dtype=complex, copy=True)
    region = np.zeros(u.shape, dtype=np.int8)
    iters = np.full(u.shape, max_iter, dtype=np.int64)
    active = np.ones(u.shape, dtype=bool)
    for k in range(max_iter + 1):
        ref_hit = active & (_overlap_sq_pairs(ru, rv, u, v) >= target_sq)
        par_hit = active & ~ref_hit & (_overlap_sq_pairs(pu, pv, u, v) >= target_sq)
        region[ref_hit] = Outcome.REFERENCE
        region[par_hit] = Outcome.PARTNER
        done = ref_hit | par_hit
        iters[done] = k
        active &= ~done
        if k == max_iter or not active.any():
            break
        u[active], v[active] = step(u[active], v[active])
    return region, iters


def map_step(f: QuadraticRationalMap) -> StepFn:
    return lambda u, v: eval_pairs(f, u, v)


def _check_target(m: Matcher, target_overlap, max_iter):
    if not m.spec.s_eps < target_overlap < 1:
        raise DomainError(
            f"target overlap must lie in (s_eps, 1) = ({m.spec.s_eps}, 1), got {target_overlap!r}"
        )
    if max_iter < 1:
        raise DomainError("max_iter must be at least 1")


def match_state(
    m: Matcher,
    z,
    target_overlap: float = math.sqrt(DEFAULT_TARGET_SQ),
    max_iter: int = DEFAULT_MAX_ITER,
) -> MatchVerdict:
    """Iterate ``f`` from ``z`` until it is within ``target_overlap`` of either attractor."""
    _check_target(m, target_overlap, max_iter)
    u, v = to_pair(z)
    region, iters = decide(
        m.z1, np.array([u]), np.array([v]), target_overlap**2, max_iter, map_step(m.f)
    )
    return MatchVerdict(Outcome(int(region[0])), int(iters[0]))


def match_points(
    m: Matcher,
    zs,
    target_overlap: float = math.sqrt(DEFAULT_TARGET_SQ),
    max_iter: int = DEFAULT_MAX_ITER,
    step: StepFn | None = None,
):
    """:func:`match_state` over an array of finite points; returns (region, iterations)."""
    _check_target(m, target_overlap, max_iter)
    u, v = pairs_from_points(zs)
    return decide(m.z1, u, v, target_overlap**2, max_iter, step or map_step(m.f))
