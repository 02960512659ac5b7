"""Headline universal functions and their application to base series.

All outputs are graded by instanton number ``n - c1^2/4``, so the
fractional powers ``q^{a/4}``, ``q^{1/12}`` and ``q^{-c1^2/4}`` appear
literally on the 1/24 grid.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .blowup import specialize_11, universal_B
from .checks import CheckReport, compare_report
from .hodge import HODGE, ONE, XY
from .series import GRID, INTEGERS, QSeries
from .special import P2, SurfaceData, blown_up, euler_product, eta_pow, sym_product_series, theta

KINDS = ("mumford_takemoto", "uhlenbeck", "gieseker")

# q^{1/12} and q^{a/4} on the grid
TWELFTH = 2
QUARTER = 6


class UnsupportedSpecialization(ValueError):
    pass


@dataclass(frozen=True)
class BaseSeries:
    """``sum_n e(M_H(c1, n); x, y) q^n`` with ``n`` on the whole-q grid."""

    label: str
    series: QSeries
    c1sq_mod4: int = 0

    def __post_init__(self):
        if self.c1sq_mod4 not in (0, 1, 2, 3):
            raise ValueError(f"c1sq_mod4 must be in 0..3, got {self.c1sq_mod4!r}")
        if any(e % GRID for e in self.series.coeffs):
            raise ValueError("base series exponents must be whole powers of q")

    def graded(self) -> QSeries:
        """The series with the ``q^{-c1^2/4}`` offset applied."""
        return self.series.shift(-QUARTER * self.c1sq_mod4)


def uhlenbeck_Z(a: int, order: int) -> QSeries:
    """``q^{a/4} B_a / (q^{1/12} (1 - xy q))`` below ``q^order``."""
    B = universal_B(a, order + 1)
    denom = QSeries(HODGE, {TWELFTH: ONE, TWELFTH + GRID: -XY})
    Z = B.shift(QUARTER * a) * denom.invert(order=order + 1)
    return Z.truncate_grid(order * GRID)


def uhlenbeck_Z_closed_11(a: int, order: int) -> QSeries:
    """``theta_a / (q^{1/12} (1 - q))`` assembled from the theta series."""
    denom = QSeries(INTEGERS, {TWELFTH: 1, TWELFTH + GRID: -1})
    return (theta(a, order + 1) * denom.invert(order=order + 1)).truncate_grid(order * GRID)


@lru_cache(maxsize=None)
def gieseker_Q_euler(order: int) -> QSeries:
    """``Q(1, 1, q) = 1 / prod_{n >= 1} (1 - q^n)^2``."""
    if order <= 0:
        return QSeries.zero(INTEGERS, 0)
    return euler_product(order).invert() ** 2


def gieseker_ZZ_euler(a: int, order: int) -> QSeries:
    """``q^{a/4} B_a(1, 1, q) Q(1, 1, q) / q^{1/12}`` below ``q^order``."""
    B = specialize_11(universal_B(a, order + 1))
    ZZ = (B * gieseker_Q_euler(order + 1)).shift(QUARTER * a - TWELFTH)
    return ZZ.truncate_grid(order * GRID)


def gieseker_ZZ_closed(a: int, order: int) -> QSeries:
    """``theta_a / eta^2`` from the theta and eta series."""
    return (theta(a, order + 1) * eta_pow(-2, order + 1)).truncate_grid(order * GRID)


def universal_factor(kind: str, a: int, order: int, X: SurfaceData = P2, ring=HODGE) -> QSeries:
    """The factor multiplying the graded base series, below ``q^order``.

    ``mumford_takemoto``: ``q^{a/4} B_a``. ``uhlenbeck``: additionally the
    ratio of symmetric-product series of the blowup and of ``X``, which is
    ``1/(1 - xy q)``. ``gieseker``: ``q^{a/4} B_a Q`` at x = y = 1 only.
    """
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}")
    if kind == "gieseker":
        if ring is not INTEGERS:
            raise UnsupportedSpecialization(
                "the Quot factor Q(x, y, q) is only known at x = y = 1; supply an integer base series"
            )
        return gieseker_ZZ_euler(a, order).shift(TWELFTH)
    B = universal_B(a, order)
    if kind == "uhlenbeck":
        ratio = sym_product_series(blown_up(X), order) * sym_product_series(X, order).invert()
        B = B * ratio
    factor = B.shift(QUARTER * a)
    return factor if ring is HODGE else specialize_11(factor)


def apply_blowup(kind: str, a: int, base: BaseSeries, X: SurfaceData = P2, order: int = 20) -> QSeries:
    """Generating series of the blown-up moduli spaces from a base series.

    The result is ``universal_factor * q^{-c1^2/4} * base``, graded by
    ``n - (c1^2 - a)/4``, truncated below ``q^order`` (or earlier if the base
    is shorter).
    """
    ring = base.series.ring
    if ring is not HODGE and ring is not INTEGERS:
        raise ValueError("base series must have Hodge-polynomial or integer coefficients")
    factor = universal_factor(kind, a, order + 1, X, ring)
    out = factor * base.graded()
    prec = order * GRID if out.prec is None else min(out.prec, order * GRID)
    return out.truncate_grid(prec)


def check_eq429(a: int, order: int = 50) -> CheckReport:
    lhs = specialize_11(uhlenbeck_Z(a, order))
    rhs = uhlenbeck_Z_closed_11(a, order)
    return compare_report(f"eq429[a={a}]", order, lhs, rhs, "Zt_a(1,1,q) vs theta_a / (q^{1/12}(1-q))")


def check_eq312(a: int, order: int = 50) -> CheckReport:
    lhs = gieseker_ZZ_euler(a, order)
    rhs = gieseker_ZZ_closed(a, order)
    return compare_report(f"eq312[a={a}]", order, lhs, rhs, "ZZt_a(1,1,q) vs theta_a / eta^2")
