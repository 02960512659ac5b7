import pytest

from blowup_series.blowup import (
    StratumTable,
    check_lemma_4_13,
    specialize_11,
    stratum_series,
    theta_exponent_sum,
    universal_B,
    universal_B_11,
)
from blowup_series.hodge import HODGE, ONE, XY, e_coprime, evaluate_11
from blowup_series.series import GRID, INTEGERS, QSeries, compare

from oracles import chain_coefficient, chain_sequences, theta_exponents


def test_low_strata():
    assert stratum_series(0, 0, 4) == QSeries.one(HODGE, 96)
    assert stratum_series(1, 0, 4).coeffs == {0: ONE + XY}
    w01 = stratum_series(0, 1, 4)
    assert w01.valuation() == GRID
    assert w01[GRID] == XY**2 * (ONE + XY)


def test_strata_vanish_below_q_to_the_d():
    for a in (0, 1):
        for d in range(1, 6):
            w = stratum_series(a, d, 8)
            assert w.valuation() is None or w.valuation() >= d * GRID


def test_invalid_arguments():
    with pytest.raises(ValueError):
        universal_B(2, 3)
    with pytest.raises(ValueError):
        stratum_series(0, -1, 3)


def test_low_coefficients_of_B0():
    B = universal_B(0, 3)
    assert B[0] == ONE
    assert B[GRID] == XY**2 * (ONE + XY)
    assert B[2 * GRID] == -(XY**2) * (ONE + XY) * (ONE - XY**2)


def test_low_coefficients_of_B1():
    B = universal_B(1, 2)
    assert B[0] == ONE + XY


@pytest.mark.parametrize("n", range(11))
def test_chain_enumeration_reproduces_B0(n):
    B = universal_B(0, 11)
    assert chain_coefficient(n, e_coprime, ONE) == B[n * GRID]


def test_chain_enumeration_counts():
    assert list(chain_sequences(0)) == [(0,)]
    assert list(chain_sequences(1)) == [(1, 0, 0)]
    assert sorted(chain_sequences(3)) == [(2, 1, 0), (3, 0, 0)]


def test_all_coefficients_are_polynomials_in_xy():
    for a in (0, 1):
        B = universal_B(a, 20)
        assert all(c.is_diagonal() for c in B.coeffs.values())


@pytest.mark.parametrize("a", [0, 1])
def test_euler_specialization_is_a_theta_sum(a):
    order = 40
    B = specialize_11(universal_B(a, order))
    expected = theta_exponents(a, order)
    assert {e // GRID: c for e, c in B.coeffs.items()} == expected


@pytest.mark.parametrize("a", [0, 1])
def test_integer_route_agrees_with_specialization(a):
    assert universal_B_11(a, 40) == specialize_11(universal_B(a, 40))


def test_theta_exponent_sum():
    assert theta_exponent_sum(0, 10).coeffs == {0: 1, 24: 2, 96: 2, 216: 2}
    assert theta_exponent_sum(1, 7).coeffs == {0: 2, 48: 2, 144: 2}


@pytest.mark.parametrize("a", [0, 1])
def test_lemma_check_passes(a):
    report = check_lemma_4_13(a, 30)
    assert report.passed, report.detail


def test_lemma_check_detects_a_corrupted_table():
    def corrupted(m1, m2):
        u = e_coprime(m1, m2)
        return u + XY if (m1, m2) == (1, 3) else u

    report = check_lemma_4_13(0, 12, coprime=corrupted)
    assert not report.passed
    assert report.first_mismatch is not None


def test_integer_table_matches_hodge_table_entrywise():
    hodge = StratumTable(8)
    ints = StratumTable(8, lambda m1, m2: evaluate_11(e_coprime(m1, m2)), INTEGERS)
    for a in (0, 1):
        for d in range(8):
            assert compare(specialize_11(hodge(a, d)), ints(a, d)) is None
