"""The four quadratic curves and the brute-force solution oracle.

Curves (all with constant 1 unless stated):

  * hyperbola   x^2 - y^2 = 1
  * parabola    y = x^2
  * circle      x^2 + y^2 = 1
  * mixed       x^2 + x*y + y^2 = c   (c any field element)

``count_solutions`` / ``enumerate_solutions`` form the oracle that every
closed-form count is verified against.  The full-plane scan is the
reference; the default per-x method solves the induced quadratic in y
for each x and is bit-equivalent (enforced by tests).  Subtraction is
always realized as addition of the negation, so characteristic 2 needs
no special-casing in ``evaluate``.

Also here: the constructive maps used by the counting arguments —
the unit-group parametrization of the hyperbola, the completion of the
square on the mixed term, the rescaling onto the circle, and the
characteristic-2 unit trinomial machinery.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from . import kernels
from .errors import (
    BudgetExceeded,
    CharacteristicTwo,
    ContextMismatch,
    NotASquareRoot,
    OddCharacteristic,
    ZeroParameter,
)
from .field import FieldCtx, FieldElement
from .tables import CURVE_CIRCLE, CURVE_HYPERBOLA, CURVE_MIXED, CURVE_PARABOLA

#: Default ceiling on q for curves whose oracle may scan the full plane.
DEFAULT_PLANE_BUDGET = 2**16
#: The parabola oracle is a single pass over x, so it gets more headroom.
DEFAULT_PARABOLA_BUDGET = 2**20

CURVE_KINDS = ("hyperbola", "parabola", "circle", "mixed")

_CODES = {
    "hyperbola": CURVE_HYPERBOLA,
    "parabola": CURVE_PARABOLA,
    "circle": CURVE_CIRCLE,
    "mixed": CURVE_MIXED,
}


@dataclass(frozen=True)
class CurveEquation:
    """Tagged curve variant; ``c`` is used by the mixed equation only."""

    kind: str
    c: Optional[FieldElement] = None

    def __post_init__(self):
        if self.kind not in CURVE_KINDS:
            raise ValueError(f"unknown curve kind {self.kind!r}")
        if self.kind == "mixed" and self.c is None:
            raise ValueError("mixed curve requires its constant c")
        if self.kind != "mixed" and self.c is not None:
            raise ValueError(f"{self.kind} carries no constant")

    @classmethod
    def hyperbola(cls) -> "CurveEquation":
        return cls("hyperbola")

    @classmethod
    def parabola(cls) -> "CurveEquation":
        return cls("parabola")

    @classmethod
    def circle(cls) -> "CurveEquation":
        return cls("circle")

    @classmethod
    def mixed(cls, c: FieldElement) -> "CurveEquation":
        return cls("mixed", c)


@dataclass(frozen=True)
class SolutionSet:
    """Ordered pairs (x, y), strictly increasing by (enc(x), enc(y))."""

    pairs: tuple

    def __len__(self):
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def to_csv(self, ctx: FieldCtx) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["enc_x", "enc_y", "render_x", "render_y"])
        for x, y in self.pairs:
            w.writerow([ctx.enc(x), ctx.enc(y), _render(ctx, x), _render(ctx, y)])
        return buf.getvalue()

    def to_json(self, ctx: FieldCtx) -> str:
        rows = [
            {
                "enc_x": ctx.enc(x),
                "enc_y": ctx.enc(y),
                "render_x": _render(ctx, x),
                "render_y": _render(ctx, y),
            }
            for x, y in self.pairs
        ]
        return json.dumps(rows, indent=2)


def _render(ctx, a):
    # integer residue for prime fields, polynomial form for extensions
    return ctx.render(a) if ctx.n == 1 else ctx.render_poly(a)


def _dispatch(ctx: FieldCtx, curve: CurveEquation) -> Tuple[int, int]:
    code = _CODES[curve.kind]
    if curve.kind == "mixed":
        rhs = ctx.enc(curve.c)
    elif curve.kind == "parabola":
        rhs = 0
    else:
        rhs = 1
    return code, rhs


def _check_budget(ctx: FieldCtx, curve: CurveEquation, q_budget: Optional[int]):
    if q_budget is None:
        q_budget = (
            DEFAULT_PARABOLA_BUDGET
            if curve.kind == "parabola"
            else DEFAULT_PLANE_BUDGET
        )
    if ctx.q > q_budget:
        raise BudgetExceeded(ctx.q, q_budget)


def evaluate(ctx: FieldCtx, curve: CurveEquation, x: FieldElement, y: FieldElement) -> bool:
    """Does (x, y) satisfy the curve equation in ctx?"""
    sx = ctx.mul(x, x)
    sy = ctx.mul(y, y)
    if curve.kind == "hyperbola":
        return ctx.add(sx, ctx.neg(sy)) == ctx.one
    if curve.kind == "parabola":
        return ctx.add(sx, ctx.neg(y)) == ctx.zero
    if curve.kind == "circle":
        return ctx.add(sx, sy) == ctx.one
    return ctx.add(ctx.add(sx, ctx.mul(x, y)), sy) == ctx._check(curve.c)


def count_solutions(
    ctx: FieldCtx,
    curve: CurveEquation,
    *,
    method: str = "auto",
    q_budget: Optional[int] = None,
) -> int:
    """Number of ordered solution pairs, without materializing them."""
    code, rhs = _dispatch(ctx, curve)
    _check_budget(ctx, curve, q_budget)
    impl = kernels.active()
    t = ctx.tables()
    if method == "plane":
        return int(impl.count_plane(t, code, rhs))
    if method in ("auto", "per-x"):
        return int(impl.count_per_x(t, code, rhs))
    raise ValueError(f"unknown method {method!r}")


def enumerate_encoded(
    ctx: FieldCtx,
    curve: CurveEquation,
    *,
    method: str = "auto",
    q_budget: Optional[int] = None,
) -> np.ndarray:
    """Sorted (enc_x, enc_y) array of all solutions (streaming-friendly)."""
    code, rhs = _dispatch(ctx, curve)
    _check_budget(ctx, curve, q_budget)
    impl = kernels.active()
    t = ctx.tables()
    if method == "plane":
        return impl.enum_plane(t, code, rhs)
    if method in ("auto", "per-x"):
        return impl.enum_per_x(t, code, rhs)
    raise ValueError(f"unknown method {method!r}")


def enumerate_solutions(
    ctx: FieldCtx,
    curve: CurveEquation,
    *,
    method: str = "auto",
    q_budget: Optional[int] = None,
) -> SolutionSet:
    """All solutions as field-element pairs, lexicographically sorted."""
    arr = enumerate_encoded(ctx, curve, method=method, q_budget=q_budget)
    return SolutionSet(
        tuple((ctx.from_enc(int(a)), ctx.from_enc(int(b))) for a, b in arr)
    )


# ---------------------------------------------------------------------------
# constructive maps from the counting arguments


def hyperbola_param(ctx: FieldCtx, u: FieldElement) -> Tuple[FieldElement, FieldElement]:
    """Unit-group parametrization of the hyperbola (odd characteristic):

        u  |->  ( (u + u^-1)/2 , (u - u^-1)/2 )

    is a bijection from F_q^* onto the solution set of x^2 - y^2 = 1.
    """
    if ctx.p == 2:
        raise CharacteristicTwo("parametrization needs odd characteristic")
    if ctx._check(u).is_zero():
        raise ZeroParameter("parameter u must be a unit")
    inv2 = ctx.inv(ctx.from_int(2))
    ui = ctx.inv(u)
    return ctx.mul(inv2, ctx.add(u, ui)), ctx.mul(inv2, ctx.sub(u, ui))


def mixed_reduce(ctx: FieldCtx, x: FieldElement, y: FieldElement) -> Tuple[FieldElement, FieldElement]:
    """Complete the square on the mixed term (odd characteristic):
    z = x + ((p+1)/2) y.  Then x^2+xy+y^2 = 1 iff z^2 + a*y^2 = 1 with
    a the diagonal coefficient of the context."""
    if ctx.p == 2:
        raise CharacteristicTwo("completing the square needs odd characteristic")
    half = ctx.from_int((ctx.p + 1) // 2)
    z = ctx.add(ctx._check(x), ctx.mul(half, ctx._check(y)))
    return z, y


def diagonal_to_circle(
    ctx: FieldCtx, z: FieldElement, y: FieldElement, b: FieldElement
) -> Tuple[FieldElement, FieldElement]:
    """Rescale the diagonal form onto the circle: u = b*y, where b is a
    nonzero square root of the diagonal coefficient.  Then
    z^2 + a*y^2 = 1 iff z^2 + u^2 = 1."""
    if ctx.p == 2:
        raise CharacteristicTwo("rescaling needs odd characteristic")
    a = ctx.diagonal_coeff()
    if ctx._check(b).is_zero() or ctx.mul(b, b) != a:
        raise NotASquareRoot(
            f"b={ctx.render(b)} is not a nonzero square root of {ctx.render(a)}"
        )
    return ctx._check(z), ctx.mul(b, y)


def solve_unit_trinomial(ctx: FieldCtx) -> tuple:
    """All roots of x^2 + x + 1 in F_{2^n}, sorted by encoding.

    Two roots for even n (both outside the prime field), none for odd n.
    """
    if ctx.p != 2:
        raise OddCharacteristic("unit trinomial analysis is a characteristic-2 tool")
    t = ctx.tables()
    vals = t.sq ^ np.arange(ctx.q, dtype=np.int64) ^ 1
    roots = np.nonzero(vals == 0)[0]
    return tuple(ctx.from_enc(int(e)) for e in roots)


def char2_zero_locus_count(ctx: FieldCtx) -> int:
    """Solutions of x^2+xy+y^2 = 0 over F_{2^n} by the combinatorial
    argument: each unit u contributes one solution pair per root of the
    unit trinomial, plus the trivial pair (0, 0)."""
    if ctx.p != 2:
        raise OddCharacteristic("zero-locus count is a characteristic-2 tool")
    roots = len(solve_unit_trinomial(ctx))
    return roots * (ctx.q - 1) + 1
