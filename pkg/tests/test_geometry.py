import math

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from bentguide import DomainError, ModeIndex, UnitSystem, WaveguideGeometry, make_geometry
from bentguide.geometry import (
    PotentialProfile,
    curvature_potential,
    effective_potential,
    effective_profile,
    from_mu,
    lame_coefficients,
    to_mu,
)


def test_make_geometry_derived_fields():
    g = make_geometry(2, 1)
    assert g.curvature == 0.5
    assert g.half_width == 0.5
    assert g.height == 1.0
    g = make_geometry(10, 1)
    assert g.curvature == pytest.approx(0.1, rel=1e-15)
    assert g.half_width == 0.5


@pytest.mark.parametrize("R, a", [(1, 2), (1, 3), (0, 1), (-1, 1), (2, 0), (2, -1), (math.nan, 1)])
def test_make_geometry_rejects(R, a):
    with pytest.raises(DomainError):
        make_geometry(R, a)


def test_straight_guide_allowed():
    g = make_geometry(math.inf, 1.0)
    assert g.curvature == 0.0
    assert effective_potential(g, 1, 0.0) == pytest.approx(math.pi**2, rel=1e-15)


def test_lame_coefficients():
    g = make_geometry(2, 1)
    assert lame_coefficients(g, 0.0) == (1.0, 1.0, 1.0)
    assert lame_coefficients(g, 0.5) == (1.0, 1.0, 0.75)
    assert lame_coefficients(g, -0.5) == (1.0, 1.0, 1.25)
    with pytest.raises(DomainError):
        lame_coefficients(g, 0.6)


def test_effective_potential_examples():
    # kappa = 2 with z-extent pi: pi^2/pi^2 - 4/4 = 0 on the axis.  A square
    # a = pi section would not fit inside R = 0.5, so only the height is pi.
    g = WaveguideGeometry(0.5, 0.5, math.pi)
    assert effective_potential(g, 1, 0.0) == pytest.approx(0.0, abs=1e-15)

    g = make_geometry(2, 1)
    expected = math.pi**2 - 0.25 / (4 * 0.5625)
    assert effective_potential(g, 1, 0.5) == pytest.approx(expected, rel=1e-15)
    assert expected == pytest.approx(9.8696 - 0.1111, abs=1e-4)


def test_effective_potential_domain():
    g = make_geometry(2, 1)
    with pytest.raises(DomainError):
        effective_potential(g, 1, 0.51)
    with pytest.raises(DomainError):
        effective_potential(g, 0, 0.0)


def test_to_mu_examples():
    assert to_mu(make_geometry(2, 1), 0.0) == 1.0
    assert to_mu(make_geometry(2, 1), 0.5) == 0.75
    assert to_mu(make_geometry(10, 1), -0.5) == pytest.approx(1.05, rel=1e-15)
    with pytest.raises(DomainError):
        to_mu(make_geometry(2, 1), -0.7)


geometries = st.builds(
    make_geometry,
    st.floats(0.6, 1e3),
    st.just(1.0),
)


@given(geometries, st.integers(1, 5), st.floats(-1.0, 1.0))
def test_potential_below_threshold(g, n, t):
    xi = t * g.half_width
    assert effective_potential(g, n, xi) < g.z_energy(n)


@given(geometries, st.floats(-1.0, 1.0), st.floats(-1.0, 1.0))
def test_potential_decreasing_towards_inner_wall(g, s, t):
    x1, x2 = sorted((s * g.half_width, t * g.half_width))
    assume(x2 - x1 > 1e-9)
    assert curvature_potential(g, x1) > curvature_potential(g, x2)


@given(geometries, st.floats(-1.0, 1.0))
def test_mu_round_trip(g, t):
    xi = t * g.half_width
    assert from_mu(g, to_mu(g, xi)) == pytest.approx(xi, abs=1e-15 * g.bend_radius)


@given(geometries, st.floats(-1.0, 1.0), st.floats(-1.0, 1.0))
def test_mu_order_reversing(g, s, t):
    x1, x2 = sorted((s * g.half_width, t * g.half_width))
    assume(x2 - x1 > 1e-12)
    assert to_mu(g, x1) > to_mu(g, x2)


def test_mode_index_validation():
    ModeIndex(1, 1, 1)
    for bad in [(0, 1, 1), (1, 0, 1), (1, 1, 0)]:
        with pytest.raises(DomainError):
            ModeIndex(*bad)
    with pytest.raises(DomainError):
        ModeIndex(1, 1, 1, m=1)


def test_unit_system():
    assert UnitSystem().energy_scale == 1.0
    assert UnitSystem(hbar=2.0, mass=1.0).energy_scale == 2.0
    with pytest.raises(DomainError):
        UnitSystem(hbar=0.0)


def test_profile_invariants():
    g = make_geometry(2, 1)
    p = effective_profile(g, 1, 11)
    assert len(p) == 11
    assert p.xi_samples[0] == -0.5 and p.xi_samples[-1] == 0.5
    with pytest.raises(DomainError):
        PotentialProfile((0.0, 0.0), (1.0, 1.0), "effective", 0.5)
    with pytest.raises(DomainError):
        PotentialProfile((0.0, 0.6), (1.0, 1.0), "effective", 0.5)
    with pytest.raises(DomainError):
        PotentialProfile((0.0,), (math.inf,), "bohm", 0.5)
    with pytest.raises(DomainError):
        PotentialProfile((0.0,), (1.0,), "other", 0.5)
