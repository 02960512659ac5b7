"""Point-count generating functions over a finite field with a symbolic
number of elements ``s``.

Zeta functions are used through their closed rational forms. For a
surface whose point counts are ``sum_k b_k s^k`` (all cohomology algebraic,
as for rational surfaces) the zeta function is ``prod_k 1/(1 - s^k q)^{b_k}``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .checks import CheckReport, compare_report
from .series import GRID, INTEGERS, QSeries, Ring, product_family


class SPolynomial:
    """Immutable univariate polynomial in ``s`` with integer (or, for the
    log/exp cross-checks, rational) coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | Iterable = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict = {}
        for k, c in items:
            if k < 0:
                raise ValueError("negative power of s")
            acc[k] = acc.get(k, 0) + c
        self.coeffs = {k: _normalize(acc[k]) for k in sorted(acc) if acc[k]}

    @classmethod
    def monomial(cls, k: int, c=1) -> "SPolynomial":
        return cls({k: c})

    @classmethod
    def from_list(cls, cs) -> "SPolynomial":
        return cls(enumerate(cs))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def degree(self) -> int:
        return max(self.coeffs, default=-1)

    def is_integral(self) -> bool:
        return all(type(c) is int for c in self.coeffs.values())

    def __call__(self, s):
        return sum(c * s**k for k, c in self.coeffs.items())

    @staticmethod
    def _lift(other):
        if isinstance(other, SPolynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return SPolynomial({0: other})
        return None

    def __eq__(self, other) -> bool:
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(self.coeffs.items()))

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return SPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return SPolynomial({k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return SPolynomial({k: c * other for k, c in self.coeffs.items()})
        other = self._lift(other)
        if other is None:
            return NotImplemented
        out: dict = {}
        for k1, c1 in self.coeffs.items():
            for k2, c2 in other.coeffs.items():
                out[k1 + k2] = out.get(k1 + k2, 0) + c1 * c2
        return SPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = SPolynomial({0: 1})
        for _ in range(n):
            result = result * self
        return result

    def __repr__(self) -> str:
        return f"SPolynomial({self})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in self.coeffs.items():
            mono = "" if k == 0 else ("s" if k == 1 else f"s^{k}")
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def _normalize(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


def _spoly_unit_inverse(p: SPolynomial):
    if len(p.coeffs) == 1 and 0 in p.coeffs:
        c = p.coeffs[0]
        if c in (1, -1):
            return p
        if isinstance(c, Fraction):
            return SPolynomial({0: 1 / c})
    return None


def _spoly_from_terms(terms: dict) -> SPolynomial:
    p = SPolynomial()
    p.coeffs = {k[0]: terms[k] for k in sorted(terms) if terms[k]}
    return p


SPOLY = Ring(
    "ZZ[s]",
    SPolynomial(),
    SPolynomial({0: 1}),
    _spoly_unit_inverse,
    lambda p: {(k,): c for k, c in p.coeffs.items()},
    _spoly_from_terms,
)

S = SPolynomial.monomial(1)


def s_power(k: int) -> SPolynomial:
    return SPolynomial.monomial(k)


def specialize_s(series: QSeries, value=1) -> QSeries:
    """Evaluate every coefficient at ``s = value`` (integer series for integer values)."""
    return series.map_coefficients(lambda p: _normalize(Fraction(p(value))), INTEGERS)


class PointCountZeta:
    """Zeta function ``prod_k 1/(1 - s^k q)`` over the multiset ``degrees``.

    ``degrees`` lists one entry per algebraic cohomology class: P2 is
    ``(0, 1, 2)`` because ``#P2(F_s) = 1 + s + s^2``.
    """

    def __init__(self, degrees: Iterable[int], name: str = ""):
        self.degrees = tuple(sorted(degrees))
        self.name = name

    def __repr__(self) -> str:
        return f"PointCountZeta({self.degrees}, {self.name!r})"

    def point_count(self, r: int = 1) -> SPolynomial:
        """``#X(F_{s^r})`` as a polynomial in s."""
        return SPolynomial((k * r, 1) for k in self.degrees)

    def blown_up(self) -> "PointCountZeta":
        """One more point blown up adds a class of degree 1."""
        return PointCountZeta(self.degrees + (1,), f"Bl({self.name})")

    def factors(self, shift: int, power: int, order) -> Iterator[QSeries]:
        """Geometric factors of ``Z(s^shift q^power)``, one per degree."""
        prec = int(Fraction(order) * GRID)
        for k in self.degrees:
            ratio = s_power(k + shift)
            terms = {}
            j = 0
            while j * power * GRID < prec:
                terms[j * power * GRID] = ratio**j
                j += 1
            yield QSeries(SPOLY, terms, prec)

    def series(self, order, shift: int = 0, power: int = 1) -> QSeries:
        """``Z(s^shift q^power)`` below ``q^order``."""
        return product_family(self.factors(shift, power, order), order, SPOLY)


P2_ZETA = PointCountZeta((0, 1, 2), "P2")


def zeta_P2(order) -> QSeries:
    """``1 / ((1 - q)(1 - s q)(1 - s^2 q))`` below ``q^order``."""
    return P2_ZETA.series(order)


def _quot_factors(zeta: PointCountZeta, order) -> Iterator[QSeries]:
    c = 1
    while c < order:
        for b in (1, 2):
            yield from zeta.factors(2 * c - b, c, order)
        c += 1


def quot_count_series(order, zeta: PointCountZeta = P2_ZETA) -> QSeries:
    """``prod_{c >= 1} prod_{b = 1, 2} Z(X, s^{2c-b} q^c)``: point counts of the
    Quot schemes of length-n quotients of ``O_X^2``."""
    return product_family(_quot_factors(zeta, order), order, SPOLY)


def _invert_product(p: QSeries) -> QSeries:
    """Inverse of a ``product_family`` result ``1 + O(q)``; at precision
    ``<= 0`` nothing is known on either side."""
    return p if p.prec is not None and p.prec <= 0 else p.invert()


def theta_s(order) -> QSeries:
    """``sum_{n in Z} s^{n(2n-1)} q^{n^2}`` below ``q^order``."""
    prec = int(Fraction(order) * GRID)
    terms = []
    n = 0
    while n * n * GRID < prec:
        for m in {n, -n}:
            terms.append((n * n * GRID, s_power(m * (2 * m - 1))))
        n += 1
    return QSeries(SPOLY, terms, prec)


def _mt_factors(order, odd_shift: int = -1) -> Iterator[QSeries]:
    prec = int(Fraction(order) * GRID)
    c = 1
    while c * GRID < prec:
        num = QSeries(SPOLY, {0: SPOLY.one, c * GRID: -s_power(2 * c + odd_shift)})
        geo = {j * c * GRID: s_power(2 * c * j) for j in range(prec // (c * GRID) + 1)}
        yield (num * QSeries(SPOLY, geo, prec)).truncate_grid(prec)
        c += 1


def mt_ratio_series(order, odd_shift: int = -1) -> QSeries:
    """``sum_n s^{n(2n-1)} q^{n^2} * prod_{c >= 1} (1 - s^{2c-1} q^c)/(1 - s^{2c} q^c)``.

    ``odd_shift`` is the offset in the numerator exponent ``2c + odd_shift``;
    anything other than -1 is a deliberately wrong series for negative controls.
    """
    return theta_s(order) * product_family(_mt_factors(order, odd_shift), order, SPOLY)


def s_euler_product(order) -> QSeries:
    """``prod_{c >= 1} (1 - s^{2c} q^c)`` below ``q^order``."""
    def factors():
        c = 1
        while True:
            yield QSeries(SPOLY, {0: SPOLY.one, c * GRID: -s_power(2 * c)})
            c += 1

    return product_family(factors(), order, SPOLY)


def identity_524_rhs(order) -> QSeries:
    """``sum_n s^{n(2n-1)} q^{n^2} / prod_{c >= 1} (1 - s^{2c} q^c)^2``."""
    return theta_s(order) * _invert_product(s_euler_product(order)) ** 2


def identity_524_lhs(order, mt_ratio: QSeries | None = None, zeta: PointCountZeta = P2_ZETA) -> QSeries:
    """Quot-count ratio of the blowup to the surface times the moduli ratio."""
    ratio = quot_count_series(order, zeta.blown_up()) * _invert_product(quot_count_series(order, zeta))
    return ratio * (mt_ratio if mt_ratio is not None else mt_ratio_series(order))


def check_identity_524(order: int = 20, mt_ratio: QSeries | None = None) -> CheckReport:
    lhs = identity_524_lhs(order, mt_ratio)
    rhs = identity_524_rhs(order)
    return compare_report(
        "eq524", order, lhs, rhs, "Quot ratio * moduli ratio vs theta_s / prod (1 - s^{2c} q^c)^2, symbolic s"
    )


def check_identity_526(order: int = 50, a: int = 0) -> CheckReport:
    """``B_a(1, 1, q) Q(1, 1, q)`` against the s = 1 value of the right side.

    For ``a = 0`` the right side is the s = 1 specialization of the symbolic
    series; for ``a = 1`` it is ``q^{-1/4} theta_1 / prod (1 - q^n)^2``.
    """
    from .assembly import gieseker_Q_euler
    from .blowup import specialize_11, universal_B
    from .special import euler_product, theta

    lhs = specialize_11(universal_B(a, order)) * gieseker_Q_euler(order)
    if a == 0:
        rhs = specialize_s(identity_524_rhs(order), 1)
    else:
        rhs = theta(1, order + 1).shift(-6) * _invert_product(euler_product(order)) ** 2
    return compare_report(f"eq526[a={a}]", order, lhs, rhs, "B_a(1,1,q) Q(1,1,q) vs s=1 right side")
