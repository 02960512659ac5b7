import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from blowup_series.hodge import (
    ONE,
    XY,
    HodgePolynomial,
    InvalidKey,
    e_coprime,
    e_gcd_stratum,
    e_projective,
    evaluate_11,
    evaluate_at,
)

from oracles import coprime_pair_count
from strategies import hodge_polys


def test_polynomial_basics():
    p = HodgePolynomial({(1, 0): 2, (0, 1): -1, (1, 1): 3})
    assert not p.is_diagonal()
    assert p.evaluate(2, 3) == 4 - 3 + 18
    assert evaluate_11(p) == 4
    assert evaluate_at(XY, "1/2", 2) == 1
    assert str(HodgePolynomial.from_xy([(2, -1), (4, 1)])) == "-(xy)^2 + (xy)^4"
    assert (ONE + XY) ** 2 == ONE + 2 * XY + XY**2
    assert 1 - XY == -(XY - 1)
    with pytest.raises(ValueError):
        HodgePolynomial({(-1, 0): 1})
    with pytest.raises(ValueError):
        p.xy_pairs()


def test_projective_space():
    assert e_projective(0) == ONE
    assert e_projective(2) == ONE + XY + XY**2


def test_coprime_small_values():
    assert e_coprime(0, 0) == ONE + XY
    assert e_coprime(0, 3) == XY**4
    assert e_coprime(1, 1) == XY**3 - XY
    assert e_coprime(1, 2) == XY**4 - XY**2


def test_coprime_rejects_bad_keys():
    for key in [(2, 1), (-1, 0), (0, -1)]:
        with pytest.raises(InvalidKey):
            e_coprime(*key)


@pytest.mark.parametrize("p", [2, 3])
def test_coprime_matches_point_count_of_binary_form_pairs(p):
    bound = 7 if p == 2 else 5
    for m2 in range(bound + 1):
        for m1 in range(min(m2, bound - m2) + 1):
            assert e_coprime(m1, m2).evaluate(p, 1) == coprime_pair_count(m1, m2, p), (m1, m2)


def test_coprime_euler_table():
    for m2 in range(31):
        for m1 in range(m2 + 1):
            want = 0 if m1 > 0 else (2 if m2 == 0 else 1)
            assert evaluate_11(e_coprime(m1, m2)) == want


def test_coprime_diagonal_with_unit_leading_term():
    for m2 in range(31):
        for m1 in range(m2 + 1):
            u = e_coprime(m1, m2)
            assert u.is_diagonal()
            assert u.degree_xy() == m1 + m2 + 1
            assert u.terms[(m1 + m2 + 1, m1 + m2 + 1)] == 1


def test_strata_partition_the_ambient_space():
    for m2 in range(1, 31):
        for m1 in range(1, m2 + 1):
            pieces = e_coprime(m1, m2)
            for d in range(1, m1 + 1):
                pieces = pieces + e_gcd_stratum(m1, m2, d)
            assert pieces == e_projective(m1 + m2 + 1) - e_projective(m2)


@settings(max_examples=150)
@given(hodge_polys, hodge_polys, hodge_polys)
def test_polynomial_ring_axioms(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == HodgePolynomial()


@settings(max_examples=150)
@given(hodge_polys, hodge_polys, st.integers(-3, 3), st.integers(-3, 3))
def test_evaluation_is_a_homomorphism(a, b, x, y):
    assert (a * b).evaluate(x, y) == a.evaluate(x, y) * b.evaluate(x, y)
    assert (a + b).evaluate(x, y) == a.evaluate(x, y) + b.evaluate(x, y)


def test_hash_consistent_with_equality():
    assert hash(XY * XY) == hash(HodgePolynomial.xy_power(2))
    assert len({XY + ONE, ONE + XY}) == 1
