import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qsmatch.errors import DomainError
from qsmatch.extcomplex import INF, Location, classify_point, sample_circle
from qsmatch.qubit import (
    PureState,
    ReferenceSide,
    bloch_vector,
    orthogonal_partner,
    overlap,
    overlap_circle,
    overlap_sq,
    reference_inside,
    state_from_z,
    z_from_state,
)

from .conftest import random_complex

finite = st.complex_numbers(max_magnitude=1e6, allow_nan=False, allow_infinity=False)


def brute_overlap(z1, z2):
    def vec(z):
        if z is INF:
            return np.array([0, 1], dtype=complex)
        v = np.array([1, z], dtype=complex)
        return v / np.linalg.norm(v)

    return abs(np.vdot(vec(z1), vec(z2)))


def test_basis_states():
    assert state_from_z(0).vector == pytest.approx([1, 0])
    assert state_from_z(INF).vector == pytest.approx([0, 1])
    assert z_from_state(PureState(0, 1j)) is INF


def test_phase_canonical():
    s = PureState(1j, -1)
    assert s.amplitude0 == pytest.approx(1 / math.sqrt(2))
    assert s.amplitude1 == pytest.approx(1j / math.sqrt(2))


def test_zero_state_rejected():
    with pytest.raises(DomainError):
        PureState(0, 0)


def test_large_labels_stay_finite():
    s = state_from_z(1e300 + 1e300j)
    assert np.all(np.isfinite(s.vector))
    assert np.linalg.norm(s.vector) == pytest.approx(1)


@settings(max_examples=100, deadline=None)
@given(finite)
def test_state_round_trip(z):
    w = z_from_state(state_from_z(z))
    assert w == pytest.approx(z, rel=1e-12, abs=1e-300)


@settings(max_examples=100, deadline=None)
@given(finite, finite)
def test_overlap_against_brute_force(z1, z2):
    assert abs(overlap(z1, z2)) == pytest.approx(brute_overlap(z1, z2), abs=1e-12)


@settings(max_examples=100, deadline=None)
@given(finite)
def test_partner_is_orthogonal(z):
    assert abs(overlap(z, orthogonal_partner(z))) < 1e-12


def test_partner_special_points():
    assert orthogonal_partner(0) is INF
    assert orthogonal_partner(INF) == 0
    assert orthogonal_partner(1j) == pytest.approx(-1j)


def test_bloch_vectors():
    assert bloch_vector(0).array == pytest.approx([0, 0, 1])
    assert bloch_vector(INF).array == pytest.approx([0, 0, -1])
    assert bloch_vector(1).array == pytest.approx([1, 0, 0])
    assert bloch_vector(1j).array == pytest.approx([0, 1, 0])


def test_bloch_dot_product_gives_overlap(rng):
    # |<a|b>|^2 = (1 + n_a . n_b) / 2
    for z1, z2 in random_complex(rng, (30, 2), scale=2):
        lhs = overlap_sq(z1, z2)
        rhs = (1 + bloch_vector(z1).dot(bloch_vector(z2))) / 2
        assert lhs == pytest.approx(rhs, abs=1e-12)


@pytest.mark.parametrize("s", [0.1, 0.5, 0.9, 0.999])
def test_overlap_circle_about_zero(s):
    gc = overlap_circle(0, s)
    assert gc.center == pytest.approx(0, abs=1e-15)
    assert gc.radius == pytest.approx(math.sqrt(1 - s * s) / s, rel=1e-12)


def test_overlap_circle_points_have_overlap(rng):
    for _ in range(30):
        z1 = complex(random_complex(rng))
        s = rng.uniform(0.05, 0.99)
        gc = overlap_circle(z1, s)
        if gc.is_line:
            continue
        for z in sample_circle(gc, 16):
            assert brute_overlap(z1, z) == pytest.approx(s, abs=1e-9)
        # reference side: larger overlap on the same side as z1
        inside_ref = classify_point(gc, z1) is Location.INSIDE
        inside_partner = classify_point(gc, orthogonal_partner(z1)) is Location.INSIDE
        assert inside_ref != inside_partner


def test_overlap_circle_about_infinity():
    gc = overlap_circle(INF, 0.6)
    for z in sample_circle(gc, 8):
        assert brute_overlap(INF, z) == pytest.approx(0.6, abs=1e-12)


def test_equality_case_is_a_line():
    gc = overlap_circle(1j, math.sqrt(0.5))
    assert gc.is_line
    for x in np.linspace(-3, 3, 7):
        z = complex(x, 0)  # 2 Re(conj(i) z) = 0 is the real axis
        assert classify_point(gc, z) is Location.ON
        assert brute_overlap(1j, z) == pytest.approx(math.sqrt(0.5))


def test_equality_line_off_origin():
    # |z1| != 1: the line 2 Re(z1* z) = |z1|^2 - 1 misses the origin
    z1 = 2 + 0j
    s = math.sqrt(4 / 5)
    gc = overlap_circle(z1, s)
    assert gc.is_line
    assert classify_point(gc, 0.75) is Location.ON
    assert classify_point(gc, 0) is not Location.ON
    assert brute_overlap(z1, 0.75 + 5j) == pytest.approx(s)


def test_reference_inside_crossover(rng):
    for z1 in random_complex(rng, 10):
        s0_sq = abs(z1) ** 2 / (1 + abs(z1) ** 2)
        above = reference_inside(z1, math.sqrt(s0_sq + 1e-6))
        below = reference_inside(z1, math.sqrt(s0_sq - 1e-6))
        assert above is ReferenceSide.REFERENCE_INSIDE
        assert below is ReferenceSide.PARTNER_INSIDE
        # oracle: does the circle enclose z1?
        gc = overlap_circle(z1, math.sqrt(s0_sq + 1e-6))
        assert classify_point(gc, z1) is Location.INSIDE


def test_overlap_domain():
    with pytest.raises(DomainError):
        overlap_circle(1, 1.0)
    with pytest.raises(DomainError):
        reference_inside(0, 0.5)
