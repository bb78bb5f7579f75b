"""Oracle-vs-predictor reports and their rendering.

A :class:`CountReport` pairs the enumerated (oracle) count with the
applicable closed-form prediction for one (p, n, curve, c) case, plus a
verdict:

  * ``Match``     — prediction exists and equals the oracle count;
  * ``Mismatch``  — prediction exists and differs (fatal to sweeps);
  * ``NoFormula`` — no closed form covers the case;
  * ``Skipped``   — the oracle refused the case (enumeration budget).

Rendering is deterministic and byte-stable: identical records give
identical csv/markdown/json output.  The fixed CSV header is
``p,n,curve,c,oracle,predicted,tag,verdict``.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from typing import Optional

from . import curves as cv
from .errors import BudgetExceeded
from .field import FieldCtx, make_field
from .formulas import (
    TAG_MIXED_CHAR2,
    predict_circle,
    predict_hyperbola,
    predict_mixed,
    predict_parabola,
)

# labels for the characteristic-2 whole-family checks that sit outside
# the theorem-tag set of the per-curve predictors
TAG_CHAR2_ZERO = "Char2Zero"
TAG_CHAR2_UNIFORM = "Char2Uniform"
TAG_CHAR2_PARTITION = "Char2Partition"

VERDICT_MATCH = "Match"
VERDICT_MISMATCH = "Mismatch"
VERDICT_NO_FORMULA = "NoFormula"
VERDICT_SKIPPED = "Skipped"

_CURVE_ORDER = {kind: i for i, kind in enumerate(cv.CURVE_KINDS)}


@dataclass(frozen=True)
class CountReport:
    p: int
    n: int
    curve: str
    c: str  # rendering of the mixed constant; "" for other curves
    oracle: Optional[int]
    predicted: Optional[int]
    tag: str  # theorem tag, or the no-formula reason
    verdict: str
    c_sort: int = 0  # sweep ordering key, not rendered

    def sort_key(self):
        return (self.p, self.n, _CURVE_ORDER[self.curve], self.c_sort)


def _verdict(oracle, predicted):
    if oracle is None:
        return VERDICT_SKIPPED
    if predicted is None:
        return VERDICT_NO_FORMULA
    return VERDICT_MATCH if oracle == predicted else VERDICT_MISMATCH


def prediction_for(ctx: FieldCtx, curve: cv.CurveEquation):
    """(predicted, tag) for one case; predicted None when uncovered."""
    p, n = ctx.p, ctx.n
    if curve.kind == "hyperbola":
        pr = predict_hyperbola(p, n)
    elif curve.kind == "parabola":
        pr = predict_parabola(p, n)
    elif curve.kind == "circle":
        pr = predict_circle(p, n)
    else:
        c_enc = ctx.enc(curve.c)
        if p == 2:
            if c_enc == 0:
                return cv.char2_zero_locus_count(ctx), TAG_CHAR2_ZERO
            # every nonzero constant has the same count as c = 1
            pr = predict_mixed(2, n, False)
        elif c_enc != 1:
            return None, "no formula for c != 1 in odd characteristic"
        else:
            a_sq = ctx.is_square(ctx.diagonal_coeff())
            pr = predict_mixed(p, n, a_sq)
    if pr.covered:
        return pr.count, pr.tag
    return None, pr.reason


def report_for(
    ctx: FieldCtx,
    curve: cv.CurveEquation,
    *,
    method: str = "auto",
    q_budget: Optional[int] = None,
) -> CountReport:
    """Count through the oracle, predict, compare.  Raises BudgetExceeded
    when the oracle refuses; sweeps catch that and record a skip."""
    predicted, tag = prediction_for(ctx, curve)
    oracle = cv.count_solutions(ctx, curve, method=method, q_budget=q_budget)
    c_render, c_sort = "", 0
    if curve.kind == "mixed":
        c_render = cv._render(ctx, curve.c)
        c_sort = ctx.enc(curve.c)
    return CountReport(
        p=ctx.p, n=ctx.n, curve=curve.kind, c=c_render,
        oracle=oracle, predicted=predicted, tag=tag,
        verdict=_verdict(oracle, predicted), c_sort=c_sort,
    )


# ---------------------------------------------------------------------------
# verification sweeps


@dataclass
class SweepConfig:
    prime_max: int = 11
    degree_max: int = 2
    q_budget: int = cv.DEFAULT_PLANE_BUDGET
    curves: tuple = cv.CURVE_KINDS
    mixed_constants: str = "one"  # "one" (c = 1) or "all" (char 2 only)
    output_format: str = "markdown"

    def __post_init__(self):
        if self.prime_max < 2:
            raise ValueError("prime_max must be >= 2")
        if self.degree_max < 1:
            raise ValueError("degree_max must be >= 1")
        bad = [k for k in self.curves if k not in cv.CURVE_KINDS]
        if bad:
            raise ValueError(f"unknown curve kinds: {bad}")
        if self.mixed_constants not in ("one", "all"):
            raise ValueError("mixed_constants must be 'one' or 'all'")


def primes_up_to(m: int):
    out = []
    for k in range(2, m + 1):
        if all(k % d for d in range(2, int(k**0.5) + 1)):
            out.append(k)
    return out


def _skip_report(ctx, curve, exc):
    try:
        predicted, tag = prediction_for(ctx, curve)
    except BudgetExceeded:
        predicted, tag = None, "enumeration budget"
    c_render = cv._render(ctx, curve.c) if curve.kind == "mixed" else ""
    c_sort = ctx.enc(curve.c) if curve.kind == "mixed" else 0
    return CountReport(
        p=ctx.p, n=ctx.n, curve=curve.kind, c=c_render,
        oracle=None, predicted=predicted, tag=tag,
        verdict=VERDICT_SKIPPED, c_sort=c_sort,
    )


def run_sweep(config: SweepConfig):
    """All oracle-vs-predictor cases of the sweep, sorted; any Mismatch
    makes the sweep fail (exit status 2 at the CLI)."""
    records = []
    for p in primes_up_to(config.prime_max):
        n = 1
        while n <= config.degree_max and p**n <= config.q_budget:
            ctx = make_field(p, n)
            for kind in cv.CURVE_KINDS:
                if kind not in config.curves:
                    continue
                if kind == "mixed":
                    records.extend(_mixed_reports(ctx, config))
                else:
                    curve = cv.CurveEquation(kind)
                    try:
                        records.append(
                            report_for(ctx, curve, q_budget=config.q_budget)
                        )
                    except BudgetExceeded as exc:
                        records.append(_skip_report(ctx, curve, exc))
            n += 1
    records.sort(key=CountReport.sort_key)
    return records


def _mixed_reports(ctx, config):
    out = []
    sweep_all = config.mixed_constants == "all" and ctx.p == 2
    c_encs = range(ctx.q) if sweep_all else [1 % ctx.q]
    counts = {}
    for c_enc in c_encs:
        curve = cv.CurveEquation.mixed(ctx.from_enc(c_enc))
        try:
            rep = report_for(ctx, curve, q_budget=config.q_budget)
            counts[c_enc] = rep.oracle
        except BudgetExceeded as exc:
            rep = _skip_report(ctx, curve, exc)
        out.append(rep)
    if sweep_all and len(counts) == ctx.q:
        nonzero = sorted({counts[e] for e in range(1, ctx.q)})
        out.append(
            CountReport(
                p=ctx.p, n=ctx.n, curve="mixed", c="all",
                oracle=len(nonzero), predicted=1, tag=TAG_CHAR2_UNIFORM,
                verdict=_verdict(len(nonzero), 1), c_sort=ctx.q,
            )
        )
        total = sum(counts.values())
        out.append(
            CountReport(
                p=ctx.p, n=ctx.n, curve="mixed", c="all",
                oracle=total, predicted=ctx.q**2, tag=TAG_CHAR2_PARTITION,
                verdict=_verdict(total, ctx.q**2), c_sort=ctx.q + 1,
            )
        )
    return out


def has_mismatch(records) -> bool:
    return any(r.verdict == VERDICT_MISMATCH for r in records)


# ---------------------------------------------------------------------------
# the classical prime-field hyperbola table

TABLE1_PRIMES = (2, 3, 5, 7, 11)


def table1_rows():
    """(p, sorted solution pairs as encodings, count) for the hyperbola
    over the first five prime fields."""
    rows = []
    for p in TABLE1_PRIMES:
        ctx = make_field(p, 1)
        arr = cv.enumerate_encoded(ctx, cv.CurveEquation.hyperbola())
        pairs = [(int(a), int(b)) for a, b in arr]
        rows.append((p, pairs, len(pairs)))
    return rows


def render_table1(fmt: str) -> str:
    rows = table1_rows()
    if fmt == "markdown":
        lines = ["| p | solutions | N |", "|---|---|---|"]
        for p, pairs, count in rows:
            cell = " ".join(f"({x},{y})" for x, y in pairs)
            lines.append(f"| {p} | {cell} | {count} |")
        return "\n".join(lines) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["p", "solutions", "N"])
        for p, pairs, count in rows:
            w.writerow([p, " ".join(f"({x},{y})" for x, y in pairs), count])
        return buf.getvalue()
    if fmt == "json":
        data = [
            {"p": p, "solutions": [[x, y] for x, y in pairs], "N": count}
            for p, pairs, count in rows
        ]
        return json.dumps(data, indent=2) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


# ---------------------------------------------------------------------------
# rendering

CSV_HEADER = ["p", "n", "curve", "c", "oracle", "predicted", "tag", "verdict"]


def _cell(v):
    return "" if v is None else str(v)


def render(records, fmt: str, header_notes=()) -> str:
    """Render records deterministically; byte-stable for equal inputs.

    ``header_notes`` lines are prepended as comments for csv/markdown
    (json stays a plain array of records, so notes go to stderr at the
    CLI instead).
    """
    if fmt == "csv":
        buf = io.StringIO()
        for note in header_notes:
            buf.write(f"# {note}\n")
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_HEADER)
        for r in records:
            w.writerow(
                [r.p, r.n, r.curve, r.c, _cell(r.oracle), _cell(r.predicted), r.tag, r.verdict]
            )
        return buf.getvalue()
    if fmt == "markdown":
        lines = [f"> {note}" for note in header_notes]
        lines.append("| " + " | ".join(CSV_HEADER) + " |")
        lines.append("|" + "---|" * len(CSV_HEADER))
        for r in records:
            cells = [
                str(r.p), str(r.n), r.curve, r.c,
                _cell(r.oracle), _cell(r.predicted), r.tag, r.verdict,
            ]
            lines.append("| " + " | ".join(cells) + " |")
        return "\n".join(lines) + "\n"
    if fmt == "json":
        rows = [
            {
                "p": r.p, "n": r.n, "curve": r.curve, "c": r.c,
                "oracle": r.oracle, "predicted": r.predicted,
                "tag": r.tag, "verdict": r.verdict,
            }
            for r in records
        ]
        return json.dumps(rows, indent=2) + "\n"
    raise ValueError(f"unknown format {fmt!r}")
