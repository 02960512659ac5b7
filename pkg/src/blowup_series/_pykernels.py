"""Pure-Python twin of the compiled convolution kernel."""

from __future__ import annotations


def convolve(ea, ca, eb, cb, limit):
    """Sparse product of two sorted exponent/coefficient lists.

    Terms with exponent ``>= limit`` are dropped (``limit=None`` keeps all).
    Returns ``(exponents, coefficients)`` sorted by exponent with zeros pruned.
    """
    acc: dict[int, int] = {}
    if not ea or not eb:
        return [], []
    first_b = eb[0]
    for e1, c1 in zip(ea, ca):
        if limit is not None and e1 + first_b >= limit:
            break
        for e2, c2 in zip(eb, cb):
            e = e1 + e2
            if limit is not None and e >= limit:
                break
            acc[e] = acc.get(e, 0) + c1 * c2
    exps = sorted(e for e, c in acc.items() if c)
    return exps, [acc[e] for e in exps]
