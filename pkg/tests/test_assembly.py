import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from blowup_series.assembly import (
    BaseSeries,
    UnsupportedSpecialization,
    apply_blowup,
    check_eq312,
    check_eq429,
    gieseker_ZZ_closed,
    gieseker_ZZ_euler,
    universal_factor,
    uhlenbeck_Z,
    uhlenbeck_Z_closed_11,
)
from blowup_series.blowup import specialize_11, universal_B
from blowup_series.finite_field import identity_524_rhs, specialize_s
from blowup_series.hodge import HODGE, ONE, XY
from blowup_series.series import GRID, INTEGERS, QSeries, compare
from blowup_series.special import K3, P2, blown_up, eta_pow, registry, theta

from oracles import bipartitions


def test_gieseker_euler_leading_terms():
    ZZ0 = gieseker_ZZ_euler(0, 3)
    assert ZZ0.valuation() == -2
    assert [ZZ0[-2 + 24 * n] for n in range(3)] == [1, 4, 9]
    # theta_0 / eta^2 from an independent convolution
    b = bipartitions(3)
    assert [ZZ0[-2 + 24 * n] for n in range(3)] == [b[n] + 2 * (b[n - 1] if n >= 1 else 0) for n in range(3)]


def test_uhlenbeck_leading_terms():
    Z1 = uhlenbeck_Z(1, 2)
    assert Z1.valuation() == 4
    assert Z1[4] == ONE + XY
    Z0 = uhlenbeck_Z(0, 3)
    assert Z0[-2] == ONE
    assert Z0[22] == XY + XY**2 * (ONE + XY)


@pytest.mark.parametrize("a", [0, 1])
def test_assembled_series_match_closed_forms(a):
    assert compare(specialize_11(uhlenbeck_Z(a, 25)), uhlenbeck_Z_closed_11(a, 25)) is None
    assert compare(gieseker_ZZ_euler(a, 25), gieseker_ZZ_closed(a, 25)) is None
    assert check_eq429(a, 20).passed
    assert check_eq312(a, 20).passed


def test_base_series_validation():
    with pytest.raises(ValueError):
        BaseSeries("b", QSeries(INTEGERS, {0: 1}), 4)
    with pytest.raises(ValueError):
        BaseSeries("b", QSeries(INTEGERS, {6: 1}), 0)


def test_identity_base_gives_the_universal_factor():
    base = BaseSeries("one", QSeries.one(HODGE))
    for a in (0, 1):
        assert apply_blowup("mumford_takemoto", a, base, order=6) == universal_factor("mumford_takemoto", a, 7).truncate(6)
    assert apply_blowup("mumford_takemoto", 0, base, order=6) == universal_B(0, 6)


def test_c1_offset_shifts_by_a_quarter():
    base0 = BaseSeries("b", QSeries(HODGE, {0: ONE, 24: XY}), 0)
    base1 = BaseSeries("b", QSeries(HODGE, {0: ONE, 24: XY}), 1)
    out0 = apply_blowup("mumford_takemoto", 1, base0, order=5)
    out1 = apply_blowup("mumford_takemoto", 1, base1, order=5)
    assert compare(out1, out0.shift(-6)) is None
    assert out0.valuation() == 6


def test_blowing_up_twice_composes():
    base = BaseSeries("b", QSeries(HODGE, {0: ONE, 24: 2 * XY}, 10 * GRID))
    once = apply_blowup("mumford_takemoto", 0, base, order=8)
    twice = apply_blowup("mumford_takemoto", 0, BaseSeries("b1", once), blown_up(P2), order=8)
    assert twice == (universal_B(0, 8) ** 2 * base.series).truncate(8)


@pytest.mark.parametrize("X", [P2, K3, registry()["P2_5"]], ids=lambda X: X.name)
def test_uhlenbeck_factor_is_independent_of_the_surface(X):
    factor = universal_factor("uhlenbeck", 0, 10, X)
    geo = QSeries(HODGE, {n * GRID: XY**n for n in range(10)}, 10 * GRID)
    assert factor == (universal_B(0, 10) * geo).truncate(10)


def test_gieseker_refuses_hodge_bases():
    base = BaseSeries("b", QSeries.one(HODGE))
    with pytest.raises(UnsupportedSpecialization):
        apply_blowup("gieseker", 0, base, order=5)
    with pytest.raises(ValueError):
        apply_blowup("nonsense", 0, base, order=5)


@settings(max_examples=40, deadline=None)
@given(st.dictionaries(st.integers(0, 12), st.integers(-50, 50), min_size=1, max_size=6), st.integers(0, 3))
def test_gieseker_ratio_is_the_euler_specialization_of_the_symbolic_side(coeffs, c1sq):
    order = 12
    base = BaseSeries("b", QSeries(INTEGERS, {n * GRID: c for n, c in coeffs.items()}, order * GRID), c1sq)
    out = apply_blowup("gieseker", 0, base, order=order)
    rhs = specialize_s(identity_524_rhs(order), 1) * base.graded()
    assert compare(out, rhs) is None
    assert out.prec == rhs.prec


def test_gieseker_class_one_uses_theta_one():
    base = BaseSeries("one", QSeries.one(INTEGERS))
    out = apply_blowup("gieseker", 1, base, order=10)
    closed = (theta(1, 11) * eta_pow(-2, 11)).shift(2)
    assert compare(out, closed) is None
