"""Command-line front end: ``detinv compute|table|verify|weights``.

Orbit index conventions: for general and symmetric spaces p is the rank;
for skew-symmetric spaces p is the HALF-rank (O_p = matrices of rank 2p).

Exit codes: 0 success, 1 verification failures, 2 invalid arguments.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import invariants as inv
from .geometry import CASE_NAMES, Case, Space, parse_space
from .polyring import MPoly
from .verify import SUITES, resolve_suites, run_all
from .weights import WeightBox, closure_check

FORMATS = ("text", "json", "csv", "latex")

P_HELP = "orbit index: rank for general/symmetric, half-rank for skew (rank 2p)"


class UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(2, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="detinv",
        description="Cohomological invariants of determinantal orbit closures. " + P_HELP + ".",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("compute", help="compute one invariant")
    c.add_argument("--case", required=True, choices=CASE_NAMES)
    c.add_argument("--m", type=int, help="row count (general case only)")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--p", type=int, required=True, help=P_HELP)
    c.add_argument("--invariant", required=True, choices=inv.INVARIANT_NAMES)
    c.add_argument("--format", default="text", choices=FORMATS)
    c.add_argument("--output", "-o", help="write to this file instead of stdout")

    t = sub.add_parser("table", help="tabulate invariants over parameter ranges")
    t.add_argument("--case", required=True, choices=CASE_NAMES + ("all",))
    t.add_argument("--n-min", type=int, default=1)
    t.add_argument("--n-max", type=int, required=True)
    t.add_argument("--m-min", type=int, default=1, help="general case only")
    t.add_argument("--m-max", type=int, help="general case only (default: n-max)")
    t.add_argument("--p", type=int, action="append", help=P_HELP + "; repeatable (default: all)")
    t.add_argument("--invariant", required=True, action="append", choices=inv.INVARIANT_NAMES)
    t.add_argument("--format", default="text", choices=FORMATS)
    t.add_argument("--output", "-o")

    v = sub.add_parser("verify", help="run the identity checks")
    v.add_argument("--max-n", type=int, default=6)
    v.add_argument("--max-m", type=int, default=6)
    v.add_argument(
        "--suite", action="append", help="all or one of: " + ", ".join(SUITES) + "; repeatable"
    )
    v.add_argument("--format", default="text", choices=("text", "json"))
    v.add_argument("--output", "-o")

    w = sub.add_parser("weights", help="dominant weight closure checks")
    w.add_argument("--case", required=True, choices=CASE_NAMES)
    w.add_argument("--n", type=int, required=True)
    w.add_argument("--p", type=int, required=True, help="class index (skew: half-rank)")
    w.add_argument("--radius", type=int, help="box margin (default n+3)")
    w.add_argument("--check", default="closure", choices=("closure",))
    w.add_argument("--output", "-o")
    return parser


# -- rendering ---------------------------------------------------------------------


def _max_degree() -> int | None:
    raw = os.environ.get("DETINV_MAX_DEGREE")
    if not raw:
        return None
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"DETINV_MAX_DEGREE must be an integer, got {raw!r}") from None


def _enforce_cap(value) -> None:
    cap = _max_degree()
    if cap is None:
        return
    polys = value.entries.values() if isinstance(value, inv.CompSeries) else [value]
    for poly in polys:
        if isinstance(poly, MPoly) and poly:
            top = poly.total_degree_range()[1]
            if top > cap:
                raise UsageError(f"total degree {top} exceeds DETINV_MAX_DEGREE={cap}")


def _json_value(value):
    if isinstance(value, MPoly):
        return value.to_json_obj()
    if isinstance(value, inv.CompSeries):
        return {str(s): poly.to_json_obj() for s, poly in value.items()}
    return value


def _text_value(value, latex: bool = False) -> str:
    if isinstance(value, MPoly):
        return value.to_latex() if latex else value.to_text()
    if isinstance(value, inv.CompSeries):
        sep = " + " if latex else "; "
        body = [f"D_{{{s}}}\\cdot({_text_value(p, True)})" if latex else f"D_{s}: {p}" for s, p in value.items()]
        return sep.join(body)
    return str(value)


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, (MPoly, inv.CompSeries)):
        return json.dumps(_json_value(value), separators=(",", ":"))
    return str(value)


def render_single(value, fmt: str, header: dict) -> str:
    if fmt == "json":
        if isinstance(value, MPoly):
            return value.to_json()
        return json.dumps(_json_value(value), separators=(",", ":"))
    if fmt == "latex":
        return _text_value(value, latex=True)
    if fmt == "csv":
        return render_rows([{**header, header["invariant"]: value}], [header["invariant"]], "csv", with_invariant=False)
    return _text_value(value)


def render_rows(rows: list[dict], invariants: list[str], fmt: str, with_invariant: bool = False) -> str:
    keys = ["case", "m", "n", "p"]
    if fmt == "json":
        payload = [
            {**{k: r[k] for k in keys}, **{name: _json_value(r[name]) for name in invariants}}
            for r in rows
        ]
        return json.dumps(payload, separators=(",", ":"))
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(keys + invariants)
        for r in rows:
            writer.writerow([("" if r[k] is None else r[k]) for k in keys] + [_cell(r[name]) for name in invariants])
        return buf.getvalue().rstrip("\n")
    if fmt == "latex":
        spec = "l" * (len(keys) + len(invariants))
        lines = [f"\\begin{{tabular}}{{{spec}}}", " & ".join(keys + invariants) + " \\\\", "\\hline"]
        for r in rows:
            cells = ["" if r[k] is None else str(r[k]) for k in keys]
            cells += ["" if r[name] is None else f"${_text_value(r[name], latex=True)}$" for name in invariants]
            lines.append(" & ".join(cells) + " \\\\")
        lines.append("\\end{tabular}")
        return "\n".join(lines)
    table = [keys + invariants]
    for r in rows:
        table.append(
            ["-" if r[k] is None else str(r[k]) for k in keys]
            + ["-" if r[name] is None else _text_value(r[name]) for name in invariants]
        )
    widths = [max(len(row[i]) for row in table) for i in range(len(table[0]))]
    return "\n".join("  ".join(cell.ljust(wd) for cell, wd in zip(row, widths)).rstrip() for row in table)


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


# -- subcommands ----------------------------------------------------------------------


def cmd_compute(args) -> int:
    space = parse_space(args.case, args.n, args.m)
    value = inv.evaluate(args.invariant, space, args.p)
    _enforce_cap(value)
    header = {"case": space.case.value, "m": space.m, "n": space.n, "p": args.p, "invariant": args.invariant}
    _emit(render_single(value, args.format, header), args.output)
    return 0


def _table_spaces(args):
    cases = CASE_NAMES if args.case == "all" else (args.case,)
    m_max = args.n_max if args.m_max is None else args.m_max
    for case in cases:
        for n in range(args.n_min, args.n_max + 1):
            if case == "general":
                for m in range(max(n, args.m_min), m_max + 1):
                    yield Space.general(m, n)
            elif n >= (2 if case == "skew" else 1):
                yield Space(Case(case), n)


def _safe_eval(name: str, space: Space, p: int):
    try:
        return inv.evaluate(name, space, p)
    except ValueError:
        # not defined at this point (dense orbit, general-only form, ...)
        return None


def cmd_table(args) -> int:
    if args.n_min > args.n_max:
        raise UsageError(f"empty n range {args.n_min}..{args.n_max}")
    invariants = list(dict.fromkeys(args.invariant))
    rows = []
    for space in _table_spaces(args):
        ps = space.orbits() if args.p is None else [p for p in args.p if p in space.orbits()]
        for p in ps:
            row = {"case": space.case.value, "m": space.m, "n": space.n, "p": p}
            for name in invariants:
                row[name] = _safe_eval(name, space, p)
                _enforce_cap(row[name])
            rows.append(row)
    _emit(render_rows(rows, invariants, args.format), args.output)
    return 0


def cmd_verify(args) -> int:
    suites = resolve_suites(args.suite)
    report = run_all(args.max_n, args.max_m, suites)
    _emit(report.to_json() if args.format == "json" else report.to_text(), args.output)
    return 0 if report.ok else 1


def cmd_weights(args) -> int:
    if args.n < 1:
        raise UsageError(f"n must be >= 1, got {args.n}")
    radius = args.n + 3 if args.radius is None else args.radius
    if radius < 0:
        raise UsageError(f"radius must be >= 0, got {radius}")
    report = closure_check(args.case, args.p, WeightBox.around(args.case, args.n, radius))
    _emit(json.dumps(report.to_dict(), indent=2, sort_keys=True), args.output)
    return 0 if report.ok else 1


COMMANDS = {"compute": cmd_compute, "table": cmd_table, "verify": cmd_verify, "weights": cmd_weights}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except ValueError as exc:
        print(f"detinv: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
