"""Command-line interface.

Subcommands:

  count    one (p, n, curve, c) case: oracle count, prediction, verdict,
           optionally the full solution set
  table1   the hyperbola solution table over F_2 .. F_11
  verify   oracle-vs-predictor sweep over a (p, n) grid

Exit status: 0 clean, 1 invalid input or refused enumeration budget,
2 when any case has verdict Mismatch.

The default enumeration budget can be overridden with the environment
variable FFCONICS_Q_BUDGET; an override is echoed into the report header
(csv/markdown) or to stderr (json output stays a plain record array).
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import curves as cv
from . import report as rp
from .errors import FFConicsError
from .field import make_field

ENV_BUDGET = "FFCONICS_Q_BUDGET"

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_MISMATCH = 2


class _Parser(argparse.ArgumentParser):
    # keep exit code 2 reserved for verdict mismatches
    def error(self, message):
        self.print_usage(sys.stderr)
        raise SystemExit(f"error: {message}") from None


def _budget(args):
    """(budget, notes): --q-budget wins, then the environment, then defaults."""
    if getattr(args, "q_budget", None) is not None:
        return args.q_budget, []
    env = os.environ.get(ENV_BUDGET)
    if env is not None:
        try:
            value = int(env)
        except ValueError:
            raise FFConicsError(f"{ENV_BUDGET}={env!r} is not an integer") from None
        return value, [f"q-budget {value} (from {ENV_BUDGET})"]
    return None, []


def _emit(text: str, out_path):
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _solution_rows(ctx, curve, method, q_budget):
    arr = cv.enumerate_encoded(ctx, curve, method=method, q_budget=q_budget)
    for ex, ey in arr:
        x = ctx.from_enc(int(ex))
        y = ctx.from_enc(int(ey))
        yield int(ex), int(ey), cv._render(ctx, x), cv._render(ctx, y)


def _render_solutions(rows, fmt):
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["enc_x", "enc_y", "render_x", "render_y"])
        for row in rows:
            w.writerow(row)
        return buf.getvalue()
    if fmt == "markdown":
        lines = ["| enc_x | enc_y | render_x | render_y |", "|---|---|---|---|"]
        for ex, ey, rx, ry in rows:
            lines.append(f"| {ex} | {ey} | {rx} | {ry} |")
        return "\n".join(lines) + "\n"
    raise ValueError(fmt)


def cmd_count(args) -> int:
    q_budget, notes = _budget(args)
    ctx = make_field(args.p, args.n)
    if args.c is not None and args.curve != "mixed":
        raise FFConicsError("--c applies to --curve mixed only")
    if args.curve == "mixed":
        c_enc = args.c if args.c is not None else 1 % ctx.q
        if not 0 <= c_enc < ctx.q:
            raise FFConicsError(f"--c {c_enc} outside [0, {ctx.q})")
        curve = cv.CurveEquation.mixed(ctx.from_enc(c_enc))
    else:
        curve = cv.CurveEquation(args.curve)
    record = rp.report_for(ctx, curve, method=args.method, q_budget=q_budget)

    if args.format == "json":
        payload = {
            "report": {
                "p": record.p, "n": record.n, "curve": record.curve,
                "c": record.c, "oracle": record.oracle,
                "predicted": record.predicted, "tag": record.tag,
                "verdict": record.verdict,
            }
        }
        if args.emit_solutions:
            payload["solutions"] = [
                {"enc_x": ex, "enc_y": ey, "render_x": rx, "render_y": ry}
                for ex, ey, rx, ry in _solution_rows(ctx, curve, args.method, q_budget)
            ]
        for note in notes:
            print(note, file=sys.stderr)
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
    else:
        text = rp.render([record], args.format, header_notes=notes)
        if args.emit_solutions:
            rows = _solution_rows(ctx, curve, args.method, q_budget)
            text += "\n" + _render_solutions(rows, args.format)
        _emit(text, args.out)
    return EXIT_MISMATCH if record.verdict == rp.VERDICT_MISMATCH else EXIT_OK


def cmd_table1(args) -> int:
    _emit(rp.render_table1(args.format), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    q_budget, notes = _budget(args)
    config = rp.SweepConfig(
        prime_max=args.prime_max,
        degree_max=args.degree_max,
        q_budget=q_budget if q_budget is not None else cv.DEFAULT_PLANE_BUDGET,
        curves=tuple(args.curve) if args.curve else cv.CURVE_KINDS,
        mixed_constants="all" if args.all_constants else "one",
        output_format=args.format,
    )
    records = rp.run_sweep(config)
    if args.format == "json":
        for note in notes:
            print(note, file=sys.stderr)
        _emit(rp.render(records, "json"), args.out)
    else:
        _emit(rp.render(records, args.format, header_notes=notes), args.out)
    return EXIT_MISMATCH if rp.has_mismatch(records) else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ffconics", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    p_count = sub.add_parser("count", help="count one curve over one field")
    p_count.add_argument("--p", type=int, required=True, help="field characteristic (prime)")
    p_count.add_argument("--n", type=int, default=1, help="extension degree (default 1)")
    p_count.add_argument("--curve", required=True, choices=cv.CURVE_KINDS)
    p_count.add_argument("--c", type=int, default=None,
                         help="mixed constant as an integer encoding (default 1)")
    p_count.add_argument("--emit-solutions", action="store_true",
                         help="also stream the sorted solution set")
    p_count.add_argument("--method", choices=("auto", "per-x", "plane"), default="auto")
    p_count.add_argument("--q-budget", type=int, default=None)
    p_count.add_argument("--format", choices=("csv", "markdown", "json"), default="markdown")
    p_count.add_argument("--out", default=None, help="write to file instead of stdout")
    p_count.set_defaults(func=cmd_count)

    p_t1 = sub.add_parser("table1", help="hyperbola solutions over F_2..F_11")
    p_t1.add_argument("--format", choices=("csv", "markdown", "json"), default="markdown")
    p_t1.add_argument("--out", default=None)
    p_t1.set_defaults(func=cmd_table1)

    p_ver = sub.add_parser("verify", help="sweep oracle vs closed-form counts")
    p_ver.add_argument("--prime-max", type=int, default=11)
    p_ver.add_argument("--degree-max", type=int, default=2)
    p_ver.add_argument("--q-budget", type=int, default=None)
    p_ver.add_argument("--curve", action="append", choices=cv.CURVE_KINDS, default=None,
                       help="restrict to these curves (repeatable; default all)")
    p_ver.add_argument("--all-constants", action="store_true",
                       help="in characteristic 2, sweep every mixed constant c "
                            "and check the uniformity and partition identities")
    p_ver.add_argument("--format", choices=("csv", "markdown", "json"), default="markdown")
    p_ver.add_argument("--out", default=None)
    p_ver.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except SystemExit as exc:
        if isinstance(exc.code, str):
            print(exc.code, file=sys.stderr)
            return EXIT_ERROR
        return EXIT_ERROR if exc.code else EXIT_OK
    except FFConicsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
