"""Command-line front end.

    blowup-series series --which B0 --order 3 --format text
    blowup-series series --which ZZ0 --order 10 --eval x=1,y=1 --format csv
    blowup-series series --which B0 --base base.json --order 10
    blowup-series check --suite all --order 30
    blowup-series surfaces

Exit codes: 0 success, 1 a check failed, 2 usage or configuration error,
3 malformed surface or base-series file.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import assembly, blowup, finite_field, special
from .assembly import BaseSeries, UnsupportedSpecialization
from .finite_field import SPOLY, SPolynomial
from .hodge import HODGE, HodgePolynomial, evaluate_at
from .series import GRID, INTEGERS, QSeries, pretty_exponent
from .special import SurfaceError
from .suites import SUITES, run_suites

SELECTORS = (
    "B0", "B1", "theta0", "theta1", "eta", "etaInv2", "Q",
    "Zt0", "Zt1", "ZZ0", "ZZ1", "sym", "zetaP2", "quotP2", "mtRatio",
)
# series defined only at x = y = 1
EULER_ONLY = {"Q", "ZZ0", "ZZ1"}
BLOWUP_KIND = {"B": "mumford_takemoto", "Zt": "uhlenbeck", "ZZ": "gieseker"}
DEFAULT_SERIES_ORDER = {"hodge": 20, "spoly": 20, "int": 50}


class UsageError(Exception):
    pass


class FileFormatError(Exception):
    pass


def _selector_class(which: str) -> int | None:
    return int(which[-1]) if which[-1] in "01" else None


def _selector_ring(which: str) -> str:
    if which in ("B0", "B1", "Zt0", "Zt1", "sym"):
        return "hodge"
    if which in ("zetaP2", "quotP2", "mtRatio"):
        return "spoly"
    return "int"


def build_series(which: str, order: int, surface: special.SurfaceData) -> QSeries:
    a = _selector_class(which)
    if which in ("B0", "B1"):
        return blowup.universal_B(a, order)
    if which in ("theta0", "theta1"):
        return special.theta(a, order)
    if which == "eta":
        return special.dedekind_eta(order)
    if which == "etaInv2":
        return special.eta_pow(-2, order)
    if which == "Q":
        return assembly.gieseker_Q_euler(order)
    if which in ("Zt0", "Zt1"):
        return assembly.uhlenbeck_Z(a, order)
    if which in ("ZZ0", "ZZ1"):
        return assembly.gieseker_ZZ_euler(a, order)
    if which == "sym":
        return special.sym_product_series(surface, order)
    if which == "zetaP2":
        return finite_field.zeta_P2(order)
    if which == "quotP2":
        return finite_field.quot_count_series(order)
    if which == "mtRatio":
        return finite_field.mt_ratio_series(order)
    raise UsageError(f"unknown series {which!r}")


def parse_eval(text: str | None) -> dict[str, Fraction]:
    if not text:
        return {}
    values = {}
    for part in text.split(","):
        if "=" not in part:
            raise UsageError(f"--eval expects name=value pairs, got {part!r}")
        name, value = (p.strip() for p in part.split("=", 1))
        if name not in ("x", "y", "s"):
            raise UsageError(f"--eval variable must be x, y or s, got {name!r}")
        try:
            values[name] = Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError(f"--eval {name}: not a number: {value!r}") from exc
    return values


def _number(v):
    v = Fraction(v)
    return int(v) if v.denominator == 1 else v


def evaluate_series(series: QSeries, values: dict) -> QSeries:
    if not values:
        return series
    if series.ring is HODGE:
        if set(values) != {"x", "y"}:
            raise UsageError("Hodge-polynomial series need --eval x=V,y=V")
        return series.map_coefficients(lambda p: evaluate_at(p, values["x"], values["y"]), INTEGERS)
    if series.ring is SPOLY:
        if set(values) != {"s"}:
            raise UsageError("series in s need --eval s=V")
        return series.map_coefficients(lambda p: _number(p(values["s"])), INTEGERS)
    return series


# serialization


def coefficient_record(c):
    """JSON-ready coefficient: ints stay ints, fractions become ``"p/q"``,
    polynomials in xy become ``[[power, c], ...]``, other (x, y) polynomials
    ``[[i, j, c], ...]``, polynomials in s ``[[degree, c], ...]``."""
    if isinstance(c, HodgePolynomial):
        if c.is_diagonal():
            return [[k, v] for k, v in c.xy_pairs()]
        return [[i, j, v] for (i, j), v in c.terms.items()]
    if isinstance(c, SPolynomial):
        return [[k, v if isinstance(v, int) else str(v)] for k, v in c.coeffs.items()]
    if isinstance(c, Fraction):
        return str(c) if c.denominator != 1 else int(c)
    return c


def series_document(which: str, order: int, series: QSeries, notes: dict | None = None) -> dict:
    doc = {
        "series": which,
        "order": order,
        "ring": series.ring.name,
        "records": [
            {"exponent24": e, "exponent": pretty_exponent(e), "coefficient": coefficient_record(c)}
            for e, c in series.items()
        ],
    }
    if notes:
        doc.update(notes)
    return doc


def render_series(fmt: str, doc: dict, series: QSeries) -> str:
    if fmt == "json":
        return json.dumps(doc, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["exponent24", "exponent", "coefficient"])
        for e, c in series.items():
            w.writerow([e, pretty_exponent(e), str(c)])
        return buf.getvalue()
    lines = [f"# {doc['series']} over {doc['ring']}, terms below q^{{{doc['order']}}}"]
    lines += [f"{pretty_exponent(e)}: {c}" for e, c in series.items()]
    return "\n".join(lines) + "\n"


def render_reports(fmt: str, reports) -> str:
    if fmt == "json":
        return json.dumps([r.to_dict() for r in reports], indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["suite", "order", "status", "first_mismatch", "detail"])
        for r in reports:
            w.writerow([r.suite, r.order, r.status, "" if r.first_mismatch is None else r.first_mismatch, r.detail])
        return buf.getvalue()
    lines = []
    for r in reports:
        where = "" if r.first_mismatch is None else f" at {pretty_exponent(r.first_mismatch)}"
        lines.append(f"{r.status.upper():4} {r.suite} (order {r.order}){where}: {r.detail}")
    return "\n".join(lines) + "\n"


# base-series files


def parse_base(text: str) -> tuple[BaseSeries, int | None]:
    """Read ``{"label", "c1sq_mod4", "order"?, "coefficients": [{"exponent": n,
    "poly": ...}]}``. ``poly`` is an integer (Euler-number base), a list of
    ``[power, c]`` pairs in xy, or a list of ``[i, j, c]`` triples."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FileFormatError(f"base file: malformed JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise FileFormatError("base file: top level must be an object")
    for key in ("c1sq_mod4", "coefficients"):
        if key not in doc:
            raise FileFormatError(f"base file: missing field {key}")
    c1sq = doc["c1sq_mod4"]
    if c1sq not in (0, 1, 2, 3) or isinstance(c1sq, bool):
        raise FileFormatError(f"base file: c1sq_mod4 must be 0..3, got {c1sq!r}")
    records = doc["coefficients"]
    if not isinstance(records, list):
        raise FileFormatError("base file: coefficients must be a list")
    polys = {}
    integral = all(isinstance(r, dict) and isinstance(r.get("poly"), int) for r in records)
    for idx, rec in enumerate(records):
        where = f"coefficients[{idx}]"
        if not isinstance(rec, dict) or "exponent" not in rec or "poly" not in rec:
            raise FileFormatError(f"base file: {where} needs exponent and poly")
        n = rec["exponent"]
        if not isinstance(n, int) or isinstance(n, bool):
            raise FileFormatError(f"base file: {where}.exponent must be an integer")
        if n in polys:
            raise FileFormatError(f"base file: {where}.exponent {n} repeated")
        polys[n] = _parse_poly(rec["poly"], f"{where}.poly", integral)
    order = doc.get("order")
    if order is not None and (not isinstance(order, int) or isinstance(order, bool)):
        raise FileFormatError("base file: order must be an integer")
    if order is not None and any(n >= order for n in polys):
        raise FileFormatError("base file: a coefficient lies at or beyond order")
    ring = INTEGERS if integral else HODGE
    prec = None if order is None else order * GRID
    series = QSeries(ring, {n * GRID: p for n, p in polys.items()}, prec)
    return BaseSeries(str(doc.get("label", "base")), series, c1sq), order


def _parse_poly(value, where: str, integral: bool):
    if integral:
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return HodgePolynomial.constant(value)
    if not isinstance(value, list):
        raise FileFormatError(f"base file: {where} must be an integer or a list")
    terms = []
    for k, item in enumerate(value):
        if not isinstance(item, list) or len(item) not in (2, 3) or not all(
            isinstance(v, int) and not isinstance(v, bool) for v in item
        ):
            raise FileFormatError(f"base file: {where}[{k}] must be [power, c] or [i, j, c] integers")
        if len(item) == 2:
            terms.append(((item[0], item[0]), item[1]))
        else:
            terms.append(((item[0], item[1]), item[2]))
        if min(terms[-1][0]) < 0:
            raise FileFormatError(f"base file: {where}[{k}] has a negative degree")
    return HodgePolynomial(terms)


# commands


def cmd_series(args) -> str:
    which = args.which
    if which not in SELECTORS:
        raise UsageError(f"unknown series {which!r}; choose from {', '.join(SELECTORS)}")
    sel_a = _selector_class(which)
    if args.a is not None and sel_a is not None and args.a != sel_a:
        raise UsageError(f"--a {args.a} conflicts with --which {which}")
    values = parse_eval(args.eval)
    kind_ring = _selector_ring(which)
    order = args.order if args.order is not None else DEFAULT_SERIES_ORDER[kind_ring]
    notes = {}

    if which in EULER_ONLY or (args.base and which.startswith("ZZ")):
        if values and (values.get("x") != 1 or values.get("y") != 1 or "s" in values):
            raise UsageError(
                f"{which} is only known at x = y = 1 (the Quot factor Q(x, y, q) is not determined)"
            )
        notes["specialization"] = "x=1,y=1"

    surface = special.P2
    if args.surface:
        if args.surface not in special.registry() and not Path(args.surface).exists():
            raise UsageError(f"unknown surface {args.surface!r}: not in the registry and no such file")
        surface = special.load_surface(args.surface)

    if args.base:
        prefix = which.rstrip("01")
        if prefix not in BLOWUP_KIND or sel_a is None:
            raise UsageError("--base applies to B0, B1, Zt0, Zt1, ZZ0 and ZZ1")
        try:
            text = Path(args.base).read_text(encoding="utf-8")
        except OSError as exc:
            raise FileFormatError(f"base file: cannot read {args.base}: {exc}") from exc
        base, base_order = parse_base(text)
        kind = BLOWUP_KIND[prefix]
        if kind == "gieseker" and base.series.ring is HODGE:
            base = BaseSeries(base.label, base.series.map_coefficients(lambda p: evaluate_at(p, 1, 1), INTEGERS), base.c1sq_mod4)
        if args.order is None and base_order is not None:
            order = base_order
        series = assembly.apply_blowup(kind, sel_a, base, surface, order)
        notes.update({"base": base.label, "kind": kind, "c1sq_mod4": base.c1sq_mod4})
    else:
        series = build_series(which, order, surface)
    if which not in EULER_ONLY and not (args.base and which.startswith("ZZ")):
        series = evaluate_series(series, values)
    if values:
        notes["eval"] = {k: str(v) for k, v in values.items()}
    doc = series_document(which, order, series, notes)
    return render_series(args.format, doc, series)


def cmd_surfaces(args) -> str:
    known = special.registry()
    if args.format == "json":
        return json.dumps(
            [{"name": k, "h": [[X.h(s, t) for t in range(3)] for s in range(3)], "euler": X.euler_char()} for k, X in known.items()],
            indent=2,
        ) + "\n"
    lines = [f"{k:6} chi={X.euler_char():3}  h11={X.h(1, 1):2}  h20={X.h(2, 0)}" for k, X in known.items()]
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="blowup-series", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--order", type=int, default=None, help="truncation order in whole powers of q")
        p.add_argument("--a", type=int, choices=(0, 1), default=None)
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")
        p.add_argument("--out", default=None, help="write here instead of stdout")

    ps = sub.add_parser("series", help="emit a generating series")
    ps.add_argument("--which", required=True, choices=SELECTORS)
    ps.add_argument("--surface", default=None, help="registry name or surface file (for sym, Zt with --base)")
    ps.add_argument("--base", default=None, help="base-series file; applies the blowup formula")
    ps.add_argument("--eval", default=None, help="specialize, e.g. x=1,y=1 or s=1")
    common(ps)

    pc = sub.add_parser("check", help="verify identities")
    pc.add_argument("--suite", action="append", default=None, help=f"one of all, {', '.join(SUITES)}; repeatable")
    common(pc)

    pl = sub.add_parser("surfaces", help="list built-in surfaces")
    pl.add_argument("--format", choices=("text", "json"), default="text")
    pl.add_argument("--out", default=None)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "order", None) is not None and args.order < 0:
        parser.error("--order must be nonnegative")
    status = 0
    try:
        if args.command == "series":
            out = cmd_series(args)
        elif args.command == "check":
            suites = args.suite or ["all"]
            unknown = [s for s in suites if s != "all" and s not in SUITES]
            if unknown:
                raise UsageError(f"unknown suite {unknown[0]!r}; choose from all, {', '.join(SUITES)}")
            reports = run_suites(suites, args.order, args.a)
            out = render_reports(args.format, reports)
            status = 0 if all(r.passed for r in reports) else 1
        else:
            out = cmd_surfaces(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except UnsupportedSpecialization as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (SurfaceError, FileFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    if args.out:
        Path(args.out).write_text(out, encoding="utf-8")
    else:
        sys.stdout.write(out)
    return status


if __name__ == "__main__":
    sys.exit(main())
