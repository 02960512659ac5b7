"""Universal stratum series W(a, d) and the blowup functions B_a(x, y, q).

A bundle on the blown-up surface splits on the exceptional curve as
``O(d + a) + O(-d)``. Its stratum series satisfies the two-state recursion

    W(0, 0) = 1
    W(0, d) = q^d * sum_{l < d}  e(U(d-l-1, d+l)) * W(1, l)     (d > 0)
    W(1, d) = q^d * sum_{l <= d} e(U(d-l,   d+l)) * W(0, l)     (d >= 0)

and ``B_a = sum_d W(a, d)``. W(0, d) only reaches W(1, l) with l < d, and
W(1, d) only reaches W(0, l) with l <= d, so the recursion is well founded.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable

from .checks import CheckReport, compare_report
from .hodge import HODGE, HodgePolynomial, e_coprime, evaluate_11
from .series import GRID, INTEGERS, QSeries, Ring, linear_combination


def _check_class(a: int) -> None:
    if a not in (0, 1):
        raise ValueError(f"blowup class a must be 0 or 1, got {a!r}")


class StratumTable:
    """Memoized W(a, d) truncated below ``q^order``.

    ``coprime`` supplies e(U(m1, m2)) and ``ring`` the coefficient ring; the
    defaults give the full (x, y) polynomials. Passing ``evaluate_11``-style
    values and ``INTEGERS`` runs the same recursion at x = y = 1.
    """

    def __init__(self, order: int, coprime: Callable[[int, int], object] = e_coprime, ring: Ring = HODGE):
        self.order = order
        self.prec = order * GRID
        self.coprime = coprime
        self.ring = ring
        self.entries: dict[tuple[int, int], QSeries] = {}

    def __call__(self, a: int, d: int) -> QSeries:
        _check_class(a)
        if d < 0:
            raise ValueError("stratum index d must be nonnegative")
        key = (a, d)
        hit = self.entries.get(key)
        if hit is not None:
            return hit
        if a == 0 and d == 0:
            w = QSeries.one(self.ring, self.prec)
        elif d >= self.order:
            w = QSeries.zero(self.ring, self.prec)
        else:
            if a == 0:
                terms = [(self.coprime(d - l - 1, d + l), self(1, l)) for l in range(d)]
            else:
                terms = [(self.coprime(d - l, d + l), self(0, l)) for l in range(d + 1)]
            # the q^d shift is applied first so truncation happens once
            shift = d * GRID
            w = linear_combination(
                self.ring, [(c, s.shift(shift)) for c, s in terms], self.prec
            )
        self.entries[key] = w
        return w

    def B(self, a: int) -> QSeries:
        _check_class(a)
        total = QSeries.zero(self.ring, self.prec)
        for d in range(self.order):
            total = total + self(a, d)
        return total


def stratum_series(a: int, d: int, order: int) -> QSeries:
    """W(a, d) with full (x, y) coefficients below ``q^order``."""
    return _table(order)(a, d)


@lru_cache(maxsize=None)
def _table(order: int) -> StratumTable:
    return StratumTable(order)


@lru_cache(maxsize=None)
def universal_B(a: int, order: int) -> QSeries:
    """B_a(x, y, q) below ``q^order`` over Z[x, y]."""
    return _table(order).B(a)


def _coprime_11(m1: int, m2: int) -> int:
    return evaluate_11(e_coprime(m1, m2))


@lru_cache(maxsize=None)
def universal_B_11(a: int, order: int) -> QSeries:
    """B_a(1, 1, q): the same recursion run over the integers.

    Evaluation at x = y = 1 is a ring map, so this equals specializing
    :func:`universal_B` afterwards; it is the fast route for long orders.
    """
    return StratumTable(order, _coprime_11, INTEGERS).B(a)


def specialize_11(s: QSeries) -> QSeries:
    return s.map_coefficients(evaluate_11, INTEGERS)


def theta_exponent_sum(a: int, order: int) -> QSeries:
    """``sum_{n in Z} q^{n(n+a)}`` built directly by enumerating n."""
    _check_class(a)
    prec = order * GRID
    coeffs: dict[int, int] = {}
    n = 0
    while True:
        hits = [m for m in {n, -n - a} if m * (m + a) < order]
        if not hits:
            break
        for m in hits:
            e = m * (m + a) * GRID
            coeffs[e] = coeffs.get(e, 0) + 1
        n += 1
    return QSeries(INTEGERS, coeffs, prec)


def check_lemma_4_13(a: int, order: int = 50, coprime: Callable[[int, int], object] | None = None) -> CheckReport:
    """Compare B_a(1, 1, q), obtained by specializing the (x, y) series,
    against the directly enumerated sum of ``q^{n(n+a)}``.

    ``coprime`` replaces the e(U(m1, m2)) table (negative controls).
    """
    B = universal_B(a, order) if coprime is None else StratumTable(order, coprime).B(a)
    rhs = theta_exponent_sum(a, order)
    return compare_report(f"lemma413[a={a}]", order, specialize_11(B), rhs, "B_a(1,1,q) vs sum_n q^{n(n+a)}")
