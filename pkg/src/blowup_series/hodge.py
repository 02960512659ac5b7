"""Exact bivariate integer polynomials in (x, y) and the virtual Hodge
polynomials of projective spaces and of the coprime-pair loci U(m1, m2).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from . import kernels
from .series import Ring


class InvalidKey(ValueError):
    pass


class HodgePolynomial:
    """Immutable element of Z[x, y] stored as ``{(i, j): coefficient}``."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], int] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[tuple[int, int], int] = {}
        for (i, j), c in items:
            if i < 0 or j < 0:
                raise ValueError(f"negative degree in monomial {(i, j)}")
            acc[(i, j)] = acc.get((i, j), 0) + c
        self.terms = {k: acc[k] for k in sorted(acc) if acc[k]}
        self._hash = None

    @classmethod
    def constant(cls, c: int) -> "HodgePolynomial":
        return cls({(0, 0): c})

    @classmethod
    def xy_power(cls, k: int, c: int = 1) -> "HodgePolynomial":
        return cls({(k, k): c})

    @classmethod
    def from_xy(cls, pairs: Iterable[tuple[int, int]]) -> "HodgePolynomial":
        """Build a polynomial in ``xy`` from ``(power, coefficient)`` pairs."""
        return cls(((k, k), c) for k, c in pairs)

    # predicates and accessors

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_diagonal(self) -> bool:
        return all(i == j for i, j in self.terms)

    def xy_pairs(self) -> list[tuple[int, int]]:
        if not self.is_diagonal():
            raise ValueError("polynomial is not a polynomial in xy")
        return [(i, c) for (i, _), c in self.terms.items()]

    def degree_xy(self) -> int:
        return max((i for i, _ in self.terms), default=-1)

    def evaluate(self, x, y):
        return sum(c * x**i * y**j for (i, j), c in self.terms.items())

    # ring structure

    @staticmethod
    def _lift(other):
        if isinstance(other, HodgePolynomial):
            return other
        if isinstance(other, int):
            return HodgePolynomial.constant(other)
        return None

    def __eq__(self, other) -> bool:
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self.terms.items()))
        return self._hash

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return HodgePolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return HodgePolynomial({k: -c for k, c in self.terms.items()})

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
        if isinstance(other, int):
            return HodgePolynomial({k: c * other for k, c in self.terms.items()})
        other = self._lift(other)
        if other is None:
            return NotImplemented
        if not self.terms or not other.terms:
            return HodgePolynomial()
        # Kronecker packing (i, j) -> i*base + j turns this into a 1-D convolution
        base = max(j for _, j in self.terms) + max(j for _, j in other.terms) + 1
        ea = [i * base + j for i, j in self.terms]
        eb = [i * base + j for i, j in other.terms]
        exps, cs = kernels.convolve(ea, list(self.terms.values()), eb, list(other.terms.values()))
        out = HodgePolynomial()
        out.terms = {divmod(e, base): c for e, c in zip(exps, cs)}
        return out

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = HodgePolynomial.constant(1)
        for _ in range(k):
            result = result * self
        return result

    def __repr__(self) -> str:
        return f"HodgePolynomial({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (i, j), c in self.terms.items():
            if i == j:
                mono = "" if i == 0 else ("xy" if i == 1 else f"(xy)^{i}")
            else:
                mono = "*".join(
                    v if p == 1 else f"{v}^{p}" for v, p in (("x", i), ("y", j)) if p
                )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def _hodge_unit_inverse(p: HodgePolynomial):
    if p.terms in ({(0, 0): 1}, {(0, 0): -1}):
        return p
    return None


def _hodge_from_terms(terms: dict) -> HodgePolynomial:
    p = HodgePolynomial()
    p.terms = {k: terms[k] for k in sorted(terms)}
    return p


HODGE = Ring(
    "ZZ[x,y]",
    HodgePolynomial(),
    HodgePolynomial.constant(1),
    _hodge_unit_inverse,
    lambda p: p.terms,
    _hodge_from_terms,
)

ONE = HodgePolynomial.constant(1)
XY = HodgePolynomial.xy_power(1)


def evaluate_11(p: HodgePolynomial) -> int:
    """Value at x = y = 1, the Euler characteristic for projective varieties."""
    return sum(p.terms.values())


def evaluate_at(p: HodgePolynomial, x, y):
    v = p.evaluate(Fraction(x), Fraction(y))
    return int(v) if v.denominator == 1 else v


@lru_cache(maxsize=None)
def e_projective(d: int) -> HodgePolynomial:
    """``1 + xy + ... + (xy)^d``."""
    if d < 0:
        raise ValueError("projective dimension must be nonnegative")
    return HodgePolynomial.from_xy((i, 1) for i in range(d + 1))


@lru_cache(maxsize=None)
def e_coprime(m1: int, m2: int) -> HodgePolynomial:
    """Virtual Hodge polynomial of the locus of coprime pairs of binary forms
    of degrees ``m1 <= m2``.

    Splitting the ambient ``P^{m1+m2+1} - P^{m2}`` by the degree ``d`` of the
    common factor gives pieces ``P^d x U(m1-d, m2-d)`` for ``d < m1``,
    ``P^{m1} x U(0, m2-m1)`` for ``d = m1 < m2`` and ``P^{m1} x (P^1 - pt)``
    for ``d = m1 = m2``; ``U(m1, m2)`` is what remains at ``d = 0``.
    """
    if m1 < 0 or m2 < 0 or m1 > m2:
        raise InvalidKey(f"U({m1}, {m2}) needs 0 <= m1 <= m2")
    if m1 == 0:
        return ONE + XY if m2 == 0 else HodgePolynomial.xy_power(m2 + 1)
    total = e_projective(m1 + m2 + 1) - e_projective(m2)
    for d in range(1, m1 + 1):
        total = total - e_gcd_stratum(m1, m2, d)
    return total


def e_gcd_stratum(m1: int, m2: int, d: int) -> HodgePolynomial:
    """Polynomial of the pairs whose common factor has degree ``1 <= d <= m1``."""
    if d < m1:
        return e_projective(d) * e_coprime(m1 - d, m2 - d)
    if m1 < m2:
        return e_projective(m1) * e_coprime(0, m2 - m1)
    return e_projective(m1) * XY
