"""Machine-readable identity-check reports."""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .series import QSeries, compare, pretty_exponent


@dataclass(frozen=True)
class CheckReport:
    suite: str
    order: int
    status: str
    first_mismatch: int | None = None
    detail: str = ""

    def __post_init__(self):
        if self.status not in ("pass", "fail"):
            raise ValueError(f"status must be pass or fail, got {self.status!r}")
        if self.status == "fail" and self.first_mismatch is None:
            raise ValueError("a failing report must name its first mismatch")

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        return asdict(self)


def compare_report(suite: str, order: int, lhs: QSeries, rhs: QSeries, detail: str = "") -> CheckReport:
    """Exact comparison of two series below ``q^order``.

    ``first_mismatch`` is in 1/24-units of q, like every exponent in reports.
    """
    bad = compare(lhs, rhs, order * 24)
    if bad is None:
        return CheckReport(suite, order, "pass", None, detail)
    msg = f"{detail}; first difference at {pretty_exponent(bad)}: {lhs.coeffs.get(bad, 0)} != {rhs.coeffs.get(bad, 0)}"
    return CheckReport(suite, order, "fail", bad, msg.lstrip("; "))
