"""Independent reference computations used only by the tests.

None of these go through the series engine: they count, enumerate or use
plain integer arithmetic so that agreement with the library is meaningful.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from math import comb


@lru_cache(maxsize=None)
def partitions_bounded(n: int, k: int) -> int:
    """Number of partitions of n into parts of size at most k."""
    if n == 0:
        return 1
    if n < 0 or k == 0:
        return 0
    return partitions_bounded(n - k, k) + partitions_bounded(n, k - 1)


def partition_number(n: int) -> int:
    return partitions_bounded(n, n)


def pentagonal_coefficients(order: int) -> list[int]:
    """Coefficients of prod (1 - q^n) from the pentagonal number theorem."""
    out = [0] * order
    k = 0
    while True:
        hit = False
        for j in ({k, -k} if k else {0}):
            g = j * (3 * j - 1) // 2
            if g < order:
                out[g] += (-1) ** (j % 2)
                hit = True
        if not hit and k > 0:
            break
        k += 1
    return out


def bipartitions(order: int) -> list[int]:
    """Coefficients of 1/prod(1 - q^n)^2 as a convolution of partition numbers."""
    p = [partition_number(n) for n in range(order)]
    return [sum(p[i] * p[n - i] for i in range(n + 1)) for n in range(order)]


def theta_exponents(a: int, order: int) -> dict[int, int]:
    """{n(n+a): multiplicity} over all integers n, for n(n+a) < order."""
    out: dict[int, int] = {}
    bound = order + 2
    for n in range(-bound, bound + 1):
        e = n * (n + a)
        if 0 <= e < order:
            out[e] = out.get(e, 0) + 1
    return out


# coprime pairs of binary forms, counted over a prime field


def _det_mod(matrix, p):
    m = [row[:] for row in matrix]
    n = len(m)
    det = 1
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] % p), None)
        if pivot is None:
            return 0
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det = det * m[col][col] % p
        inv = pow(m[col][col], p - 2, p)
        for r in range(col + 1, n):
            f = m[r][col] * inv % p
            if f:
                m[r] = [(x - f * y) % p for x, y in zip(m[r], m[col])]
    return det % p


def binary_form_resultant(f, g, p):
    """Sylvester resultant mod p of binary forms with formal degrees len-1."""
    m, n = len(f) - 1, len(g) - 1
    size = m + n
    if size == 0:
        return 1
    rows = []
    for i in range(n):
        rows.append([0] * i + list(f) + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + list(g) + [0] * (size - n - 1 - i))
    return _det_mod(rows, p)


def coprime_pair_count(m1: int, m2: int, p: int) -> int:
    """Points of the projectivized space of coprime (deg m1, deg m2) pairs over F_p."""
    total = 0
    for vec in itertools.product(range(p), repeat=m1 + m2 + 2):
        if not any(vec):
            continue
        if binary_form_resultant(vec[: m1 + 1], vec[m1 + 1 :], p):
            total += 1
    assert total % (p - 1) == 0
    return total // (p - 1)


# explicit enumeration of the stratum chains


def chain_sequences(n: int):
    """All finite sequences (d_1, ..., d_k) summing to n with alternating
    bounds d_{2i} <= d_{2i-1} - 1, d_{2i+1} <= d_{2i}, terminated by a zero
    at an odd position."""

    def extend(seq, remaining):
        pos = len(seq) + 1
        if pos == 1:
            hi = remaining
        elif pos % 2 == 0:
            hi = min(seq[-1] - 1, remaining)
        else:
            hi = min(seq[-1], remaining)
        for d in range(hi + 1):
            new = seq + (d,)
            if pos % 2 == 1 and d == 0:
                if remaining == 0:
                    yield new
                continue
            yield from extend(new, remaining - d)

    yield from extend((), n)


def chain_weight(seq, coprime):
    """Product of coprime-locus factors along one chain."""
    weight = None
    for i in range(len(seq) - 1):
        d, nxt = seq[i], seq[i + 1]
        if i % 2 == 0:
            factor = coprime(d - nxt - 1, d + nxt)
        else:
            factor = coprime(d - nxt, d + nxt)
        weight = factor if weight is None else weight * factor
    return weight


def chain_coefficient(n: int, coprime, one):
    total = None
    for seq in chain_sequences(n):
        w = chain_weight(seq, coprime)
        w = one if w is None else w
        total = w if total is None else total + w
    return total


# point counts of symmetric products and zeta functions


def sym_power_euler(chi: int, n: int) -> int:
    """Coefficient of q^n in (1 - q)^(-chi)."""
    if chi >= 0:
        return comb(n + chi - 1, n) if chi else int(n == 0)
    return (-1) ** n * comb(-chi, n)


def zeta_from_log(degrees, order: int, s):
    """exp(sum_r #X(F_{s^r}) q^r / r) at a numeric s, over the rationals."""
    counts = [Fraction(0)] + [Fraction(sum(s ** (k * r) for k in degrees), r) for r in range(1, order)]
    out = [Fraction(1)] + [Fraction(0)] * (order - 1)
    # f' = f * L'  gives  n f_n = sum_r r L_r f_{n-r}
    for n in range(1, order):
        out[n] = sum(r * counts[r] * out[n - r] for r in range(1, n + 1)) / n
    return out
