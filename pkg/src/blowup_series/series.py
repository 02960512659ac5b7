"""Truncated formal power series in q with exponents on the 1/24 grid.

Exponents are stored as integers counting 1/24-units of q, so ``q^{1/12}``
is exponent 2 and ``q^{9/4}`` is exponent 54. A series carries a precision
``prec`` (exclusive, in grid units): every coefficient below it is known
exactly and nothing at or above it is reported. ``prec=None`` marks an
exact finite sum such as ``1 - xy*q``.

Public entry points that take an ``order`` measure it in q-units (an int
or a :class:`~fractions.Fraction`); the grid conversion happens here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Any, Callable, Iterable, Mapping

from . import kernels

GRID = 24


class SeriesError(ArithmeticError):
    pass


class NonUnitLeadingCoefficient(SeriesError):
    pass


class OrderIncrease(ValueError):
    pass


class DivergentFamily(ValueError):
    pass


def to_grid(x) -> int:
    """Convert a q-exponent (int, Fraction or ``"a/b"`` string) to grid units."""
    f = Fraction(x) * GRID
    if f.denominator != 1:
        raise ValueError(f"exponent {x} is not on the 1/{GRID} grid")
    return int(f)


def from_grid(e: int) -> Fraction:
    return Fraction(e, GRID)


def pretty_exponent(e: int) -> str:
    return "q^{%s}" % from_grid(e)


@dataclass(frozen=True)
class Ring:
    """Exact commutative coefficient ring used by :class:`QSeries`.

    Elements are plain Python objects supporting ``+ - *`` and ``==``;
    ``unit_inverse`` returns the inverse of a unit and ``None`` otherwise.
    """

    name: str
    zero: Any
    one: Any
    unit_inverse: Callable[[Any], Any]
    # optional exact monomial view: element <-> {degree tuple: int}
    to_terms: Callable[[Any], dict] | None = None
    from_terms: Callable[[dict], Any] | None = None

    def __repr__(self) -> str:
        return f"Ring({self.name})"


def _int_unit_inverse(c):
    return c if c in (1, -1) else None


def _rational_unit_inverse(c):
    return 1 / Fraction(c) if c else None


def _int_to_terms(c):
    return {(): c} if c else {}


def _int_from_terms(t):
    return t.get((), 0)


INTEGERS = Ring("ZZ", 0, 1, _int_unit_inverse, _int_to_terms, _int_from_terms)
RATIONALS = Ring("QQ", Fraction(0), Fraction(1), _rational_unit_inverse)


def _min_prec(*precs):
    finite = [p for p in precs if p is not None]
    return min(finite) if finite else None


class QSeries:
    """Immutable truncated series ``sum c_e q^{e/24} + O(q^{prec/24})``."""

    __slots__ = ("ring", "coeffs", "prec")

    def __init__(self, ring: Ring, coeffs: Mapping[int, Any] | Iterable = (), prec: int | None = None):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        kept = {}
        for e, c in items:
            e = int(e)
            if c and (prec is None or e < prec):
                kept[e] = kept[e] + c if e in kept else c
        self.ring = ring
        self.coeffs = {e: kept[e] for e in sorted(kept) if kept[e]}
        self.prec = prec

    # construction helpers

    @classmethod
    def from_q(cls, ring: Ring, coeffs: Mapping, order=None) -> "QSeries":
        """Build from a mapping keyed by q-exponents (ints or Fractions)."""
        prec = None if order is None else to_grid(order)
        return cls(ring, {to_grid(k): v for k, v in coeffs.items()}, prec)

    @classmethod
    def monomial(cls, ring: Ring, coeff, exponent: int = 0, prec: int | None = None) -> "QSeries":
        return cls(ring, {exponent: coeff}, prec)

    @classmethod
    def one(cls, ring: Ring, prec: int | None = None) -> "QSeries":
        return cls(ring, {0: ring.one}, prec)

    @classmethod
    def zero(cls, ring: Ring, prec: int | None = None) -> "QSeries":
        return cls(ring, {}, prec)

    # inspection

    @property
    def order(self) -> Fraction | None:
        return None if self.prec is None else from_grid(self.prec)

    @property
    def is_exact(self) -> bool:
        return self.prec is None

    def valuation(self) -> int | None:
        return next(iter(self.coeffs), None)

    def leading_coefficient(self):
        e = self.valuation()
        return self.ring.zero if e is None else self.coeffs[e]

    def __getitem__(self, e: int):
        if self.prec is not None and e >= self.prec:
            raise IndexError(f"exponent {e} at or beyond precision {self.prec}")
        return self.coeffs.get(e, self.ring.zero)

    def coeff(self, q_exponent):
        """Coefficient at a q-exponent given in q-units."""
        return self[to_grid(q_exponent)]

    def items(self):
        return self.coeffs.items()

    def __len__(self) -> int:
        return len(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.prec == other.prec and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.prec, tuple(self.coeffs.items())))

    def __repr__(self) -> str:
        terms = [f"({c})*{pretty_exponent(e)}" for e, c in self.coeffs.items()]
        if self.prec is not None:
            terms.append(f"O({pretty_exponent(self.prec)})")
        return " + ".join(terms) if terms else "0"

    # arithmetic

    def _coerce(self, other) -> "QSeries":
        if isinstance(other, QSeries):
            return other
        return QSeries(self.ring, {0: other})

    def __add__(self, other) -> "QSeries":
        other = self._coerce(other)
        prec = _min_prec(self.prec, other.prec)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out[e] + c if e in out else c
        return QSeries(self.ring, out, prec)

    __radd__ = __add__

    def __neg__(self) -> "QSeries":
        return QSeries(self.ring, {e: -c for e, c in self.coeffs.items()}, self.prec)

    def __sub__(self, other) -> "QSeries":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "QSeries":
        return self._coerce(other) - self

    def _low(self):
        return self.valuation() if self.coeffs else self.prec

    def __mul__(self, other) -> "QSeries":
        if not isinstance(other, QSeries):
            return self.scale(other)
        if (not self.coeffs and self.prec is None) or (not other.coeffs and other.prec is None):
            return QSeries(self.ring, {}, None)
        cands = []
        if self.prec is not None:
            cands.append(self.prec + other._low())
        if other.prec is not None:
            cands.append(other.prec + self._low())
        prec = min(cands) if cands else None
        return QSeries(self.ring, _cauchy(self.ring, self.coeffs, other.coeffs, prec), prec)

    def __rmul__(self, other) -> "QSeries":
        return self.scale(other)

    def scale(self, c) -> "QSeries":
        """Multiply every coefficient by the ring element ``c``."""
        if self.ring.to_terms is not None and not isinstance(c, int) and self.coeffs and c:
            return QSeries(self.ring, _cauchy(self.ring, self.coeffs, {0: c}, self.prec), self.prec)
        return QSeries(self.ring, {e: c * v for e, v in self.coeffs.items()}, self.prec)

    def shift(self, e: int) -> "QSeries":
        """Multiply by ``q^{e/24}``."""
        prec = None if self.prec is None else self.prec + e
        return QSeries(self.ring, {k + e: v for k, v in self.coeffs.items()}, prec)

    def __pow__(self, k: int) -> "QSeries":
        if k < 0:
            return self.invert() ** (-k)
        result = QSeries.one(self.ring)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def truncate(self, order) -> "QSeries":
        """Drop all terms at q-exponent ``>= order``."""
        return self.truncate_grid(to_grid(order))

    def truncate_grid(self, prec: int) -> "QSeries":
        if self.prec is not None and prec > self.prec:
            raise OrderIncrease(f"cannot raise precision {self.prec} to {prec}")
        return QSeries(self.ring, self.coeffs, prec)

    def invert(self, order=None) -> "QSeries":
        """Multiplicative inverse.

        The leading coefficient must be a unit of the ring. A series with
        leading exponent ``v`` and precision ``P`` yields an inverse of
        precision ``P - 2v``; exact inputs that are not monomials need an
        explicit ``order`` (q-units).
        """
        v = self.valuation()
        if v is None:
            raise NonUnitLeadingCoefficient("cannot invert the zero series")
        lead_inv = self.ring.unit_inverse(self.coeffs[v])
        if lead_inv is None:
            raise NonUnitLeadingCoefficient(f"leading coefficient {self.coeffs[v]!r} is not a unit")
        if self.prec is None and len(self.coeffs) == 1:
            return QSeries(self.ring, {-v: lead_inv}, None)
        target = None if self.prec is None else self.prec - 2 * v
        if order is not None:
            target = _min_prec(target, to_grid(order))
        if target is None:
            raise ValueError("inverting an exact non-monomial series requires an order")
        unit = {e - v: lead_inv * c for e, c in self.coeffs.items() if e > v}
        n = target + v
        inv = _invert_unit_series(self.ring, unit, n)
        return QSeries(self.ring, {e - v: lead_inv * c for e, c in inv.items()}, target)

    def __truediv__(self, other) -> "QSeries":
        if isinstance(other, QSeries):
            return self * other.invert()
        inv = self.ring.unit_inverse(other)
        if inv is None:
            raise NonUnitLeadingCoefficient(f"{other!r} is not a unit")
        return self.scale(inv)

    def map_coefficients(self, fn: Callable, ring: Ring | None = None) -> "QSeries":
        """Apply a ring homomorphism coefficientwise; zero images are pruned."""
        return QSeries(ring or self.ring, {e: fn(c) for e, c in self.coeffs.items()}, self.prec)

    def substitute(self, scale, power: int = 1) -> "QSeries":
        """Substitute ``q -> scale * q^power``; exponents must be whole."""
        if power < 1:
            raise ValueError("power must be a positive integer")
        out = {}
        for e, c in self.coeffs.items():
            if e % GRID:
                raise ValueError("substitution needs whole-q exponents")
            n = e // GRID
            out[e * power] = c * _ring_pow(self.ring, scale, n) if n else c
        prec = None if self.prec is None else self.prec * power
        return QSeries(self.ring, out, prec)


def _ring_pow(ring: Ring, x, n: int):
    result = ring.one
    while n:
        if n & 1:
            result = result * x
        n >>= 1
        if n:
            x = x * x
    return result


def _cauchy(ring: Ring, a: dict, b: dict, prec: int | None) -> dict:
    if not a or not b:
        return {}
    if ring.to_terms is not None:
        packed = _packed_cauchy(ring, a, b, prec)
        if packed is not None:
            return {e: ring.from_terms(t) for e, t in packed.items()}
    out: dict = {}
    bitems = list(b.items())
    b0 = bitems[0][0]
    for e1, c1 in a.items():
        if prec is not None and e1 + b0 >= prec:
            break
        for e2, c2 in bitems:
            e = e1 + e2
            if prec is not None and e >= prec:
                break
            t = c1 * c2
            out[e] = out[e] + t if e in out else t
    return out


def _packed_cauchy(ring: Ring, a: dict, b: dict, prec: int | None, into: dict | None = None):
    """Series product as a single 1-D convolution.

    Each term ``c * q^e * m`` (``m`` a monomial with degree tuple) becomes an
    integer key in mixed radix: the q-exponent (divided by the common step of
    both supports) on top, then one digit per variable wide enough that digit
    sums never carry. Variables that repeat another one in every monomial
    (the diagonal case ``x^i y^i``) get no digit of their own. Returns
    ``None`` when a coefficient has non-integer entries. The raw result
    ``{e: {monomial: int}}`` is accumulated into ``into`` when given.
    """
    ta = [(e, ring.to_terms(c)) for e, c in a.items()]
    tb = [(e, ring.to_terms(c)) for e, c in b.items()]
    ea0 = ta[0][0]
    eb0 = tb[0][0]
    step = 0
    for e, _ in ta:
        step = gcd(step, e - ea0)
    for e, _ in tb:
        step = gcd(step, e - eb0)
    step = step or 1

    nvars = len(next(iter(ta[0][1])))
    mons = [m for _, t in ta for m in t] + [m for _, t in tb for m in t]
    alias = {}
    for v in range(nvars):
        for u in range(v):
            if u not in alias and all(m[v] == m[u] for m in mons):
                alias[v] = u
                break
    free = [v for v in range(nvars) if v not in alias]
    radix = []
    for v in free:
        ma = max(m[v] for _, t in ta for m in t)
        mb = max(m[v] for _, t in tb for m in t)
        radix.append(ma + mb + 1)
    width = 1
    for r in radix:
        width *= r

    def pack(terms, e0):
        keys, vals = [], []
        for e, t in terms:
            base = (e - e0) // step * width
            for m, c in t.items():
                if type(c) is not int:
                    return None
                k = 0
                for v, r in zip(free, radix):
                    k = k * r + m[v]
                keys.append(base + k)
                vals.append(c)
        return keys, vals

    pa = pack(ta, ea0)
    pb = pack(tb, eb0)
    if pa is None or pb is None:
        return None
    if into is None:
        into = {}
    limit = None
    if prec is not None:
        # first q-slot at or beyond prec
        limit = -((ea0 + eb0 - prec) // step) * width
    keys, vals = kernels.convolve(pa[0], pa[1], pb[0], pb[1], limit)
    grouped: dict = {}
    for k, c in zip(keys, vals):
        slot, rest = divmod(k, width)
        digits = {}
        for v, r in zip(reversed(free), reversed(radix)):
            rest, digits[v] = divmod(rest, r)
        m = tuple(digits[v] if v in digits else digits[alias[v]] for v in range(nvars))
        t = into.setdefault(ea0 + eb0 + slot * step, {})
        t[m] = t.get(m, 0) + c
    return into


def linear_combination(ring: Ring, pairs: Iterable[tuple[Any, QSeries]], prec: int | None) -> QSeries:
    """``sum c_i * S_i`` truncated at ``prec`` (grid units), for ring
    elements ``c_i``; the precision is also capped by every ``S_i``."""
    pairs = [(c, s) for c, s in pairs]
    prec = _min_prec(prec, *(s.prec for _, s in pairs))
    if ring.to_terms is not None:
        raw: dict = {}
        ok = True
        for c, s in pairs:
            if c and s.coeffs:
                if _packed_cauchy(ring, s.coeffs, {0: c}, prec, raw) is None:
                    ok = False
                    break
        if ok:
            return QSeries(ring, {e: ring.from_terms({m: v for m, v in t.items() if v}) for e, t in raw.items()}, prec)
    total = QSeries.zero(ring, prec)
    for c, s in pairs:
        total = total + s.scale(c)
    return total


def _invert_unit_series(ring: Ring, tail: dict, n: int) -> dict:
    """Inverse of ``1 + tail`` below grid exponent ``n`` (tail exponents > 0)."""
    if n <= 0:
        return {}
    if not tail:
        return {0: ring.one}
    step = 0
    for e in tail:
        step = gcd(step, e)
    tail_items = list(tail.items())
    inv = {0: ring.one}
    for k in range(step, n, step):
        acc = None
        for j, u in tail_items:
            if j > k:
                break
            prev = inv.get(k - j)
            if prev is None:
                continue
            t = u * prev
            acc = t if acc is None else acc + t
        if acc is not None and acc:
            inv[k] = -acc
    return inv


def product_family(factors: Iterable[QSeries], order, ring: Ring) -> QSeries:
    """Truncated product of a (possibly infinite) family ``prod (1 + ...)``.

    Factors must come in increasing order of their lowest non-constant
    exponent; consumption stops at the first factor whose lowest
    non-constant exponent is at or beyond ``order``.
    """
    prec = to_grid(order)
    result = QSeries.one(ring, prec)
    if prec <= 0:
        return result
    for f in factors:
        if f.coeffs.get(0, ring.zero) != ring.one or f.valuation() != 0:
            raise DivergentFamily(f"factor does not start with 1: {f!r}")
        rest = [e for e in f.coeffs if e != 0]
        if not rest:
            continue
        if rest[0] < 0:
            raise DivergentFamily(f"factor has negative exponents: {f!r}")
        if rest[0] >= prec:
            break
        if f.prec is None or f.prec > prec:
            f = f.truncate_grid(prec)
        result = result * f
    return result


def compare(lhs: QSeries, rhs: QSeries, prec: int | None = None):
    """First grid exponent where two series differ below their common
    precision (and ``prec`` if given), or ``None`` if they agree."""
    bound = _min_prec(lhs.prec, rhs.prec, prec)
    keys = sorted(set(lhs.coeffs) | set(rhs.coeffs))
    for e in keys:
        if bound is not None and e >= bound:
            break
        if lhs.coeffs.get(e, lhs.ring.zero) != rhs.coeffs.get(e, rhs.ring.zero):
            return e
    return None
