"""Named identity-check suites, each producing one :class:`CheckReport`."""

from __future__ import annotations

from typing import Callable

from .assembly import check_eq312, check_eq429
from .blowup import check_lemma_4_13, universal_B
from .checks import CheckReport
from .finite_field import check_identity_524, check_identity_526
from .hodge import ONE, XY, e_coprime, evaluate_11
from .series import GRID

DEFAULT_ORDERS = {
    "lemma413": 50,
    "rem422": 3,
    "ulocus416": 30,
    "eq429": 50,
    "eq312": 50,
    "eq524": 20,
    "eq526": 50,
}
SUITES = tuple(DEFAULT_ORDERS)


def _merge(suite: str, order: int, reports: list[CheckReport]) -> CheckReport:
    failed = [r for r in reports if not r.passed]
    detail = "; ".join(f"{r.suite}: {r.status}" + (f" ({r.detail})" if not r.passed else "") for r in reports)
    if failed:
        return CheckReport(suite, order, "fail", failed[0].first_mismatch, detail)
    return CheckReport(suite, order, "pass", None, detail)


def low_order_B0_expected():
    """The three lowest coefficients of B_0."""
    return [ONE, XY**2 * (ONE + XY), -(XY**2) * (ONE + XY) * (ONE - XY**2)]


def suite_rem422(order: int | None = None, a_values=(0,)) -> CheckReport:
    B = universal_B(0, 3)
    expected = low_order_B0_expected()
    for n, want in enumerate(expected):
        got = B[n * GRID]
        if got != want:
            return CheckReport("rem422", 3, "fail", n * GRID, f"B_0,{n}: got {got}, expected {want}")
    return CheckReport("rem422", 3, "pass", None, "B_0,0..2 match 1, (xy)^2(1+xy), -(xy)^2(1+xy)(1-(xy)^2)")


def euler_table_416(m1: int, m2: int) -> int:
    if m1 > 0:
        return 0
    return 2 if m2 == 0 else 1


def suite_ulocus416(order: int | None = None, a_values=(0,)) -> CheckReport:
    bound = DEFAULT_ORDERS["ulocus416"] if order is None else order
    for m2 in range(bound + 1):
        for m1 in range(m2 + 1):
            got = evaluate_11(e_coprime(m1, m2))
            if got != euler_table_416(m1, m2):
                return CheckReport(
                    "ulocus416", bound, "fail", m2, f"e(U({m1},{m2}); 1, 1) = {got}, expected {euler_table_416(m1, m2)}"
                )
    return CheckReport("ulocus416", bound, "pass", None, f"all 0 <= m1 <= m2 <= {bound}")


def _per_a(name: str, fn: Callable[[int, int], CheckReport]):
    def run(order: int | None = None, a_values=(0, 1)) -> CheckReport:
        n = DEFAULT_ORDERS[name] if order is None else order
        return _merge(name, n, [fn(a, n) for a in a_values])

    return run


def suite_eq524(order: int | None = None, a_values=(0,)) -> CheckReport:
    n = DEFAULT_ORDERS["eq524"] if order is None else order
    return check_identity_524(n)


RUNNERS = {
    "lemma413": _per_a("lemma413", check_lemma_4_13),
    "rem422": suite_rem422,
    "ulocus416": suite_ulocus416,
    "eq429": _per_a("eq429", check_eq429),
    "eq312": _per_a("eq312", check_eq312),
    "eq524": suite_eq524,
    "eq526": _per_a("eq526", lambda a, n: check_identity_526(n, a)),
}


def run_suite(name: str, order: int | None = None, a: int | None = None) -> CheckReport:
    if name not in RUNNERS:
        raise KeyError(name)
    a_values = (0, 1) if a is None else (a,)
    return RUNNERS[name](order, a_values)


def run_suites(names, order: int | None = None, a: int | None = None) -> list[CheckReport]:
    if "all" in names:
        names = SUITES
    return [run_suite(n, order, a) for n in names]


__all__ = ["SUITES", "DEFAULT_ORDERS", "run_suite", "run_suites"]
