"""Command-line interface: ``qcjordan <subcommand> [options]``.

Subcommands: generate, table (alias jordan-table), verify, symmetry,
witt-check and export.  Options may also come from a JSON config file given
with ``--config``; explicit flags win.  ``QCJORDAN_THREADS`` is read for a
thread-count override and echoed in verify reports; every suite currently runs
in a single deterministic thread, so the value does not change any output.

Exit codes: 0 success, 1 a verification failed, 2 invalid window file,
3 degenerate window, 4 requested generator not in the model set.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import aperiodic_algebra as alg
from . import exports
from .golden_field import GoldenRat, format_golden, parse_golden
from .model_set import (
    PRESETS,
    DegenerateWindowError,
    SchemeSpec,
    custom_scheme,
    enumerate_points,
    load_window_file,
    preset,
)
from .verify import DESK_RADIUS, SUITES, default_symmetries, run_suites
from .window import interval

EXIT_FAIL = 1
EXIT_BAD_WINDOW = 2
EXIT_DEGENERATE = 3
EXIT_NOT_MEMBER = 4


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


@dataclass
class RunConfig:
    subcommand: str
    scheme: str = "fibonacci-palindromic"
    window: str | None = None
    radius: str | None = None
    format: str = "csv"
    seed: int = 0
    long: bool = False
    output: str | None = None


def _golden(text) -> GoldenRat:
    return GoldenRat.coerce(parse_golden(str(text)))


def resolve_scheme(name: str, window: str | None) -> SchemeSpec:
    """Preset by name, optionally with a replacement window.

    ``window`` is a JSON vertex file or ``lo,hi`` for a closed interval.
    """
    if name not in PRESETS:
        raise CliError(EXIT_FAIL, f"unknown scheme {name!r}; choose from {', '.join(PRESETS)}")
    if window is None:
        return preset(name)
    try:
        if os.path.exists(window):
            win = load_window_file(window)
        elif re.fullmatch(r"[^,]+,[^,]+", window):
            lo, hi = (_golden(t) for t in window.split(","))
            if not lo < hi:
                raise DegenerateWindowError(f"empty interval {window}")
            win = interval(lo, hi, name=f"[{window}]")
        else:
            raise ValueError(f"window {window!r} is neither a file nor lo,hi")
    except DegenerateWindowError as exc:
        raise CliError(EXIT_DEGENERATE, f"degenerate window: {exc}") from exc
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        raise CliError(EXIT_BAD_WINDOW, f"invalid window: {exc}") from exc
    base = preset(name)
    if win.dim != base.d2:
        raise CliError(EXIT_BAD_WINDOW, f"window dimension {win.dim} does not match scheme inner dimension {base.d2}")
    return custom_scheme(win, name)


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _radius(args, scheme: SchemeSpec):
    if args.radius is None:
        return GoldenRat(DESK_RADIUS.get(scheme.name.split(":")[0], 3))
    return _golden(args.radius)


# -- generate -----------------------------------------------------------------


def cmd_generate(args) -> int:
    scheme = resolve_scheme(args.scheme, args.window)
    r = _radius(args, scheme)
    pts = enumerate_points(scheme, r)
    _emit(exports.render_points(scheme, pts, args.format, r), args.output)
    return 0


# -- table ------------------------------------------------------------------


def _parse_generators(text: str, scheme: SchemeSpec) -> list[tuple[tuple[int, ...], str]]:
    """``-4..4`` (Fibonacci labels) or ``a,b,c,d;e,f,g,h`` (coordinates)."""
    m = re.fullmatch(r"\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*", text)
    if m:
        if scheme.kind != "fibonacci" or scheme.name.split(":")[0] != "fibonacci-palindromic":
            raise CliError(EXIT_FAIL, "label ranges need the fibonacci-palindromic scheme; give coordinates instead")
        lo, hi = int(m.group(1)), int(m.group(2))
        return [(alg.fib_label_coords(n), f"L_{n}") for n in range(lo, hi + 1)]
    out = []
    for part in text.split(";"):
        coords = tuple(int(v) for v in part.split(","))
        if len(coords) != scheme.ncoords:
            raise CliError(EXIT_FAIL, f"generator {coords} needs {scheme.ncoords} coordinates")
        out.append((coords, "L" + str(list(coords)).replace(" ", "")))
    return out


def _cell_text(scheme: SchemeSpec, el: alg.AlgebraElement, labels: bool) -> str:
    if labels:
        return alg.format_fib_cell(el)
    items = list(el.terms.items())
    if len(items) == 1 and items[0][1] == 1:
        return "L" + str(list(items[0][0])).replace(" ", "")
    if len(items) == 2 and all(v == Fraction(1, 2) for _, v in items):
        a, b = sorted(k for k, _ in items)
        return "1/2(L{} + L{})".format(str(list(a)).replace(" ", ""), str(list(b)).replace(" ", ""))
    return str(el)


def cmd_table(args) -> int:
    scheme = resolve_scheme(args.scheme, args.window)
    rows = _parse_generators(args.rows, scheme)
    cols = _parse_generators(args.cols, scheme)
    for coords, lab in rows + cols:
        if not scheme.contains(coords):
            raise CliError(EXIT_NOT_MEMBER, f"generator {lab} {list(coords)} is not in the model set")
    table = alg.jordan_table(scheme, [c for c, _ in rows], [c for c, _ in cols])
    labels = scheme.name == "fibonacci-palindromic"
    cells = [[_cell_text(scheme, el, labels) for el in row] for row in table]
    rlab, clab = [lab for _, lab in rows], [lab for _, lab in cols]
    if args.format == "md":
        text = alg.markdown_table(clab, [[r, *c] for r, c in zip(rlab, cells)], corner="L_n o L_m")
    elif args.format == "csv":
        text = exports.table_to_csv(rlab, clab, cells)
    elif args.format == "json":
        exact = [[el.to_json() for el in row] for row in table]
        text = exports.table_to_json(rlab, clab, cells, {"scheme": scheme.name, "exact": exact})
    else:
        raise CliError(EXIT_FAIL, f"table format must be md, csv or json, not {args.format!r}")
    _emit(text, args.output)
    return 0


# -- verify -----------------------------------------------------------------


def cmd_verify(args) -> int:
    scheme = resolve_scheme(args.scheme, args.window)
    names = args.suite or ([args.positional] if args.positional else None)
    if not names or names == ["all"]:
        names = ["icosian", "coxeter", "quasiadd", "closure", "algebra", "symmetry"]
        if scheme.kind in ("fibonacci", "penrose"):
            names.append("acceptability")
    for n in names:
        if n not in SUITES:
            raise CliError(EXIT_FAIL, f"unknown suite {n!r}; choose from {', '.join(SUITES)}")
    groups = args.group or ["h2", "h3"]
    radius = None if args.radius is None else _golden(args.radius)
    report = run_suites(names, scheme, seed=args.seed, groups=groups, long=args.long, radius=radius)
    summary = {
        "scheme": scheme.name,
        "seed": args.seed,
        "threads": os.environ.get("QCJORDAN_THREADS", "1"),
        "suites": report,
        "ok": all(v["ok"] for v in report.values()),
    }
    _emit(json.dumps(summary, indent=1, sort_keys=True, default=str) + "\n", args.output)
    return 0 if summary["ok"] else EXIT_FAIL


# -- symmetry ---------------------------------------------------------------


def _named_rho(scheme: SchemeSpec, name: str | None) -> dict:
    table = default_symmetries(scheme)
    table["identity"] = [[1 if i == j else 0 for j in range(scheme.d1)] for i in range(scheme.d1)]
    if scheme.d1 == 1:
        table["negation"] = [[-1]]
    if name is None:
        return {k: v for k, v in table.items() if k != "identity"}
    if name not in table:
        raise CliError(EXIT_FAIL, f"unknown isometry {name!r}; available: {', '.join(table)}")
    return {name: table[name]}


def cmd_symmetry(args) -> int:
    scheme = resolve_scheme(args.scheme, args.window)
    r = _radius(args, scheme)
    pts = enumerate_points(scheme, r)
    out = {}
    for name, mat in _named_rho(scheme, args.rho).items():
        out[name] = alg.symmetry_transfer_check(scheme, mat, pts, radius=r).to_json()
    ok = all(v["ok"] for v in out.values())
    report = {"scheme": scheme.name, "radius": format_golden(r), "points": len(pts), "symmetries": out, "ok": ok}
    _emit(json.dumps(report, indent=1, sort_keys=True) + "\n", args.output)
    return 0 if ok else EXIT_FAIL


# -- witt-check -------------------------------------------------------------


def cmd_witt_check(args) -> int:
    from .verify import acceptability_suite

    scheme = resolve_scheme(args.scheme, args.window)
    try:
        alg.ring_for(scheme)
    except ValueError as exc:
        raise CliError(EXIT_FAIL, str(exc)) from exc
    radius = None if args.radius is None else _golden(args.radius)
    rep = acceptability_suite(scheme, seed=args.seed, jacobi_trials=args.jacobi_trials, radius=radius)
    _emit(json.dumps(rep, indent=1, sort_keys=True, default=str) + "\n", args.output)
    return 0 if rep["ok"] else EXIT_FAIL


# -- export -----------------------------------------------------------------


def cmd_export(args) -> int:
    """Re-render a JSON point file in another format after re-certifying it."""
    with open(args.input) as fh:
        data, pts = exports.points_from_json(fh.read())
    scheme = resolve_scheme(data["scheme"].split(":")[0], args.window)
    bad = [p.coords for p in pts if not scheme.contains(p.coords)]
    if bad:
        raise CliError(EXIT_NOT_MEMBER, f"{len(bad)} points are not in the model set, e.g. {list(bad[0])}")
    radius = None if data.get("radius") is None else _golden(data["radius"])
    _emit(exports.render_points(scheme, pts, args.format, radius), args.output)
    return 0


# -- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qcjordan", description="Exact quasicrystals and aperiodic Jordan algebras.")
    p.add_argument("--config", help="JSON file with default option values")
    sub = p.add_subparsers(dest="subcommand", required=True)

    def common(sp, fmt_choices=None, fmt_default=None):
        sp.add_argument("--scheme", default="fibonacci-palindromic", help="preset: " + ", ".join(PRESETS))
        sp.add_argument("--window", help="JSON vertex file, or lo,hi for an interval window")
        sp.add_argument("--radius", help="exact radius, e.g. 8, 5/2 or 1+2*tau")
        sp.add_argument("--output", "-o", help="write here instead of stdout")
        if fmt_choices:
            sp.add_argument("--format", choices=fmt_choices, default=fmt_default)

    g = sub.add_parser("generate", help="enumerate a model set")
    common(g, ["csv", "json", "svg", "obj"], "csv")
    g.set_defaults(func=cmd_generate)

    for name in ("table", "jordan-table"):
        t = sub.add_parser(name, help="Jordan multiplication table")
        common(t, ["md", "csv", "json"], "md")
        t.add_argument("--rows", default="-4..4", help="label range a..b or coordinates a,b;c,d")
        t.add_argument("--cols", default="-2..2")
        t.set_defaults(func=cmd_table)

    v = sub.add_parser("verify", help="run verification suites, JSON report")
    common(v)
    v.add_argument("positional", nargs="?", help="suite name (same as --suite)")
    v.add_argument("--suite", action="append", help="suite: " + ", ".join(SUITES) + " or all")
    v.add_argument("--group", action="append", choices=["h2", "h3", "h4"])
    v.add_argument("--long", action="store_true", help="include H4 group order")
    v.add_argument("--seed", type=int, default=0)
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("symmetry", help="symmetry transfer check")
    common(s)
    s.add_argument("--rho", help="named isometry (default: all natural ones for the scheme)")
    s.set_defaults(func=cmd_symmetry)

    w = sub.add_parser("witt-check", help="window acceptability and Witt bracket Jacobi")
    common(w)
    w.add_argument("--seed", type=int, default=0)
    w.add_argument("--jacobi-trials", type=int, default=1000)
    w.set_defaults(func=cmd_witt_check)

    e = sub.add_parser("export", help="convert a JSON point file to another format")
    e.add_argument("input")
    e.add_argument("--format", choices=["csv", "json", "svg", "obj"], default="csv")
    e.add_argument("--window")
    e.add_argument("--output", "-o")
    e.set_defaults(func=cmd_export)
    p.subparsers = sub.choices
    return p


def parse_args(argv: Sequence[str] | None = None) -> argparse.Namespace:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.config:
        with open(args.config) as fh:
            conf = {k.replace("-", "_"): v for k, v in json.load(fh).items()}
        unknown = [k for k in conf if not hasattr(args, k)]
        if unknown:
            parser.error(f"unknown config key {unknown[0]!r}")
        # config values become defaults, so explicit flags still override them
        parser.subparsers[args.subcommand].set_defaults(**conf)
        args = parser.parse_args(argv)
    return args


def main(argv: Sequence[str] | None = None) -> int:
    args = parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"qcjordan: {exc}", file=sys.stderr)
        return exc.code
    except DegenerateWindowError as exc:
        print(f"qcjordan: degenerate window: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE


if __name__ == "__main__":
    sys.exit(main())
