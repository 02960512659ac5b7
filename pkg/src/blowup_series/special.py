"""Theta series, Dedekind eta, and symmetric-product generating functions
of surfaces described by their Hodge diamonds."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Iterator, Mapping

from .hodge import HODGE, HodgePolynomial
from .series import GRID, INTEGERS, QSeries, product_family


def theta(a: int, order) -> QSeries:
    """``sum_{n in Z} q^{(n + a/2)^2}`` below ``q^order``.

    On the grid the exponent is ``6 (2n + a)^2``; the terms for ``n`` and
    ``-n - a`` coincide, so every nonzero coefficient is 2 except the
    ``q^0`` term of the even series.
    """
    if a not in (0, 1):
        raise ValueError("a must be 0 or 1")
    prec = int(Fraction(order) * GRID)
    coeffs = {}
    m = a
    while 6 * m * m < prec:
        coeffs[6 * m * m] = 1 if m == 0 else 2
        m += 2
    return QSeries(INTEGERS, coeffs, prec)


def _euler_factors() -> Iterator[QSeries]:
    n = 1
    while True:
        yield QSeries(INTEGERS, {0: 1, n * GRID: -1})
        n += 1


def euler_product(order) -> QSeries:
    """``prod_{n >= 1} (1 - q^n)`` below ``q^order``."""
    return product_family(_euler_factors(), order, INTEGERS)


def dedekind_eta(order) -> QSeries:
    return eta_pow(1, order)


def eta_pow(k: int, order) -> QSeries:
    """``eta(q)^k = q^{k/24} prod (1 - q^n)^k`` below ``q^order``; any integer k."""
    prec = int(Fraction(order) * GRID)
    inner = prec - k
    if inner <= 0:
        return QSeries.zero(INTEGERS, prec)
    p = euler_product(Fraction(inner, GRID))
    return (p**k).shift(k)


class SurfaceError(ValueError):
    """Invalid Hodge data; ``entry`` names the offending field."""

    def __init__(self, message: str, entry: str = ""):
        super().__init__(message)
        self.entry = entry


class NotSimplyConnected(SurfaceError):
    pass


@dataclass(frozen=True)
class SurfaceData:
    name: str
    hodge: Mapping[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        h = {(s, t): 0 for s in range(3) for t in range(3)}
        for key, v in dict(self.hodge).items():
            if key not in h:
                raise SurfaceError(f"h{key} is outside 0 <= s, t <= 2", f"h{key[0]}{key[1]}")
            if not isinstance(v, int) or isinstance(v, bool) or v < 0:
                raise SurfaceError(f"h{key[0]}{key[1]} must be a nonnegative integer, got {v!r}", f"h{key[0]}{key[1]}")
            h[key] = v
        for s, t in ((0, 0), (2, 2)):
            if h[(s, t)] != 1:
                raise SurfaceError(f"h{s}{t} must be 1, got {h[(s, t)]}", f"h{s}{t}")
        for s in range(3):
            for t in range(s + 1, 3):
                if h[(s, t)] != h[(t, s)]:
                    raise SurfaceError(
                        f"Hodge symmetry fails: h{s}{t}={h[(s, t)]} but h{t}{s}={h[(t, s)]}", f"h{s}{t}"
                    )
        object.__setattr__(self, "hodge", h)

    def h(self, s: int, t: int) -> int:
        return self.hodge[(s, t)]

    def euler_char(self) -> int:
        return sum((-1) ** (s + t) * v for (s, t), v in self.hodge.items())

    def hodge_polynomial(self) -> HodgePolynomial:
        return HodgePolynomial({(s, t): (-1) ** (s + t) * v for (s, t), v in self.hodge.items()})

    def require_simply_connected(self) -> None:
        if self.h(0, 1) or self.h(1, 0):
            raise NotSimplyConnected(
                f"{self.name}: h01 = {self.h(0, 1)}, blowup formulas assume a simply connected surface", "h01"
            )


def make_surface(name: str, hodge: Mapping[tuple[int, int], int], allow_irregular: bool = False) -> SurfaceData:
    X = SurfaceData(name, hodge)
    if not allow_irregular:
        X.require_simply_connected()
    return X


def blown_up(X: SurfaceData, times: int = 1) -> SurfaceData:
    """Blow up ``times`` points: only h^{1,1} changes, by one per point."""
    h = dict(X.hodge)
    h[(1, 1)] += times
    suffix = "" if times == 1 else f"^{times}"
    return SurfaceData(f"Bl{suffix}({X.name})", h)


P2 = SurfaceData("P2", {(0, 0): 1, (1, 1): 1, (2, 2): 1})
K3 = SurfaceData("K3", {(0, 0): 1, (2, 0): 1, (0, 2): 1, (1, 1): 20, (2, 2): 1})


def registry() -> dict[str, SurfaceData]:
    """Built-in surfaces: P2, P2 blown up 1..9 times (``P2_k``), and K3."""
    out = {"P2": P2}
    for k in range(1, 10):
        out[f"P2_{k}"] = SurfaceData(f"P2_{k}", blown_up(P2, k).hodge)
    out["K3"] = K3
    return out


def _hodge_from_matrix(rows) -> dict:
    if not isinstance(rows, list) or len(rows) != 3:
        raise SurfaceError("h must be a 3x3 array", "h")
    h = {}
    for s, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != 3:
            raise SurfaceError(f"row h[{s}] must have 3 entries", f"h[{s}]")
        for t, v in enumerate(row):
            h[(s, t)] = v
    return h


def parse_surface(text: str, allow_irregular: bool = False) -> SurfaceData:
    """Read a surface from JSON ``{"name": ..., "h": [[...], [...], [...]]}``
    or from ``key = value`` lines (``name``, ``h00`` ... ``h22``)."""
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            doc = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise SurfaceError(f"malformed JSON: {exc}", "document") from exc
        if "h" not in doc:
            raise SurfaceError("missing field h", "h")
        name = doc.get("name", "surface")
        hodge = _hodge_from_matrix(doc["h"])
    else:
        name = "surface"
        hodge = {}
        for lineno, raw in enumerate(stripped.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise SurfaceError(f"line {lineno}: expected key = value", f"line {lineno}")
            key, value = (part.strip() for part in line.split("=", 1))
            if key == "name":
                name = value
                continue
            if len(key) != 3 or key[0] != "h" or not key[1:].isdigit():
                raise SurfaceError(f"unknown key {key!r}", key)
            try:
                hodge[(int(key[1]), int(key[2]))] = int(value)
            except ValueError as exc:
                raise SurfaceError(f"{key} must be an integer, got {value!r}", key) from exc
        missing = [f"h{s}{t}" for s in range(3) for t in range(3) if (s, t) not in hodge]
        if missing:
            raise SurfaceError(f"missing entries {', '.join(missing)}", missing[0])
    return make_surface(name, hodge, allow_irregular)


def load_surface(source: str, allow_irregular: bool = False) -> SurfaceData:
    """A registry name or a path to a surface file."""
    known = registry()
    if source in known:
        return known[source]
    path = Path(source)
    if not path.exists():
        raise SurfaceError(f"unknown surface {source!r} (not in registry, no such file)", "surface")
    return parse_surface(path.read_text(encoding="utf-8"), allow_irregular)


def sym_product_series(X: SurfaceData, order) -> QSeries:
    """``sum_n e(Sym^n X; x, y) q^n = prod_{s,t} (1 - x^s y^t q)^{-(-1)^{s+t} h^{s,t}}``."""
    prec = int(Fraction(order) * GRID)
    factors = []
    for (s, t), h in X.hodge.items():
        if not h:
            continue
        mono = HodgePolynomial({(s, t): 1})
        if (s + t) % 2 == 0:
            geo = {k * GRID: mono**k for k in range(max(prec // GRID + 1, 1))}
            factor = QSeries(HODGE, geo, prec)
        else:
            factor = QSeries(HODGE, {0: HodgePolynomial.constant(1), GRID: -mono})
        factors.extend([factor] * h)
    return product_family(factors, order, HODGE)
