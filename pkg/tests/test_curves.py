"""Curve layer: evaluation, oracle sets, constructive maps, char-2 tools."""
import json

import pytest

from ffconics.curves import (
    CurveEquation,
    char2_zero_locus_count,
    count_solutions,
    diagonal_to_circle,
    enumerate_solutions,
    evaluate,
    hyperbola_param,
    mixed_reduce,
    solve_unit_trinomial,
)
from ffconics.errors import (
    BudgetExceeded,
    CharacteristicTwo,
    NotASquareRoot,
    OddCharacteristic,
    ZeroParameter,
)
from ffconics.field import make_field


def enc_pairs(ctx, sset):
    return [(ctx.enc(x), ctx.enc(y)) for x, y in sset]


def test_curve_equation_validation():
    ctx = make_field(5, 1)
    with pytest.raises(ValueError):
        CurveEquation("ellipse")
    with pytest.raises(ValueError):
        CurveEquation("mixed")  # missing c
    with pytest.raises(ValueError):
        CurveEquation("circle", ctx.one)


def test_evaluate_examples():
    F3 = make_field(3, 1)
    assert not evaluate(F3, CurveEquation.mixed(F3.one), F3.one, F3.one)
    F7 = make_field(7, 1)
    assert evaluate(F7, CurveEquation.hyperbola(), F7.from_int(3), F7.from_int(6))
    for ctx in (F3, F7, make_field(2, 2)):
        assert evaluate(ctx, CurveEquation.parabola(), ctx.zero, ctx.zero)


def test_enumerate_examples():
    F3 = make_field(3, 1)
    assert enc_pairs(F3, enumerate_solutions(F3, CurveEquation.hyperbola())) == [(1, 0), (2, 0)]
    F2 = make_field(2, 1)
    assert enc_pairs(F2, enumerate_solutions(F2, CurveEquation.mixed(F2.one))) == [
        (0, 1), (1, 0), (1, 1),
    ]
    F5 = make_field(5, 1)
    assert enc_pairs(F5, enumerate_solutions(F5, CurveEquation.hyperbola())) == [
        (0, 2), (0, 3), (1, 0), (4, 0),
    ]


def test_count_examples():
    F11 = make_field(11, 1)
    assert count_solutions(F11, CurveEquation.hyperbola()) == 10
    F3 = make_field(3, 1)
    assert count_solutions(F3, CurveEquation.mixed(F3.one)) == 6
    F5 = make_field(5, 1)
    assert count_solutions(F5, CurveEquation.mixed(F5.one)) == 6


@pytest.mark.parametrize("p,n", [(2, 3), (3, 2), (5, 1), (7, 1), (11, 1)])
def test_solution_set_soundness(p, n):
    ctx = make_field(p, n)
    for curve in (
        CurveEquation.hyperbola(),
        CurveEquation.parabola(),
        CurveEquation.circle(),
        CurveEquation.mixed(ctx.one),
    ):
        sset = enumerate_solutions(ctx, curve)
        pairs = enc_pairs(ctx, sset)
        assert pairs == sorted(set(pairs))  # sorted, duplicate-free
        assert all(evaluate(ctx, curve, x, y) for x, y in sset)
        assert count_solutions(ctx, curve) == len(sset)


def test_solution_set_serialization():
    F5 = make_field(5, 1)
    sset = enumerate_solutions(F5, CurveEquation.hyperbola())
    csv_text = sset.to_csv(F5)
    assert csv_text.splitlines()[0] == "enc_x,enc_y,render_x,render_y"
    assert csv_text.splitlines()[1] == "0,2,0,2"
    rows = json.loads(sset.to_json(F5))
    assert rows[0] == {"enc_x": 0, "enc_y": 2, "render_x": "0", "render_y": "2"}
    F4 = make_field(2, 2)
    sset4 = enumerate_solutions(F4, CurveEquation.hyperbola())
    assert sset4.to_csv(F4) == (
        "enc_x,enc_y,render_x,render_y\n"
        "0,1,0,1\n1,0,1,0\n2,3,t,t+1\n3,2,t+1,t\n"
    )


def test_hyperbola_param_examples():
    F5 = make_field(5, 1)
    assert hyperbola_param(F5, F5.one) == (F5.one, F5.zero)
    assert hyperbola_param(F5, F5.from_int(2)) == (F5.zero, F5.from_int(2))
    F7 = make_field(7, 1)
    assert hyperbola_param(F7, F7.from_int(6)) == (F7.from_int(6), F7.zero)


def test_hyperbola_param_errors():
    F4 = make_field(2, 2)
    with pytest.raises(CharacteristicTwo):
        hyperbola_param(F4, F4.one)
    F5 = make_field(5, 1)
    with pytest.raises(ZeroParameter):
        hyperbola_param(F5, F5.zero)


@pytest.mark.parametrize("p,n", [(3, 1), (3, 2), (5, 1), (5, 2), (7, 1), (11, 1), (13, 1)])
def test_hyperbola_param_bijection(p, n):
    ctx = make_field(p, n)
    image = {
        hyperbola_param(ctx, u) for u in ctx.elements() if not u.is_zero()
    }
    assert len(image) == ctx.q - 1  # injective
    expected = set(enumerate_solutions(ctx, CurveEquation.hyperbola()))
    assert image == expected  # onto


def test_mixed_reduce_examples():
    F7 = make_field(7, 1)
    assert mixed_reduce(F7, F7.one, F7.zero) == (F7.one, F7.zero)
    assert mixed_reduce(F7, F7.zero, F7.one) == (F7.from_int(4), F7.one)
    F3 = make_field(3, 1)
    assert mixed_reduce(F3, F3.from_int(2), F3.from_int(2)) == (F3.one, F3.from_int(2))
    with pytest.raises(CharacteristicTwo):
        mixed_reduce(make_field(2, 1), None, None)


def _diagonal_solutions(ctx):
    a = ctx.diagonal_coeff()
    out = set()
    for z in ctx.elements():
        for y in ctx.elements():
            lhs = ctx.add(ctx.mul(z, z), ctx.mul(a, ctx.mul(y, y)))
            if lhs == ctx.one:
                out.add((z, y))
    return out


@pytest.mark.parametrize("p,n", [(3, 1), (5, 1), (7, 1), (11, 1), (13, 1), (3, 2), (5, 2)])
def test_mixed_reduce_is_bijection_onto_diagonal_form(p, n):
    ctx = make_field(p, n)
    mixed = enumerate_solutions(ctx, CurveEquation.mixed(ctx.one))
    image = {mixed_reduce(ctx, x, y) for x, y in mixed}
    assert len(image) == len(mixed)
    assert image == _diagonal_solutions(ctx)


def test_diagonal_to_circle_examples():
    F11 = make_field(11, 1)
    b = F11.from_int(3)
    assert diagonal_to_circle(F11, F11.one, F11.zero, b) == (F11.one, F11.zero)
    # 9*y^2 = 1 at y = 4 gives the circle point (0, 1)
    assert diagonal_to_circle(F11, F11.zero, F11.from_int(4), b) == (F11.zero, F11.one)
    with pytest.raises(NotASquareRoot):
        diagonal_to_circle(F11, F11.one, F11.zero, F11.from_int(2))
    with pytest.raises(NotASquareRoot):
        diagonal_to_circle(F11, F11.one, F11.zero, F11.zero)
    with pytest.raises(CharacteristicTwo):
        diagonal_to_circle(make_field(2, 1), None, None, None)


@pytest.mark.parametrize("p,n", [(11, 1), (13, 1), (23, 1), (5, 2), (7, 2), (13, 2)])
def test_mixed_to_circle_chain_bijection(p, n):
    ctx = make_field(p, n)
    a = ctx.diagonal_coeff()
    b = ctx.sqrt(a)
    assert b is not None, "chain requires a square diagonal coefficient"
    mixed = enumerate_solutions(ctx, CurveEquation.mixed(ctx.one))
    chained = set()
    for x, y in mixed:
        z, y2 = mixed_reduce(ctx, x, y)
        chained.add(diagonal_to_circle(ctx, z, y2, b))
    assert len(chained) == len(mixed)
    circle = set(enumerate_solutions(ctx, CurveEquation.circle()))
    assert chained == circle


def test_solve_unit_trinomial():
    assert solve_unit_trinomial(make_field(2, 1)) == ()
    F4 = make_field(2, 2)
    roots = solve_unit_trinomial(F4)
    assert [F4.enc(r) for r in roots] == [2, 3]  # t and t+1, outside F_2
    assert solve_unit_trinomial(make_field(2, 3)) == ()
    with pytest.raises(OddCharacteristic):
        solve_unit_trinomial(make_field(3, 1))


@pytest.mark.parametrize("n,expected", [(1, 1), (2, 7), (3, 1), (4, 31), (5, 1), (6, 127)])
def test_char2_zero_locus_count(n, expected):
    ctx = make_field(2, n)
    assert char2_zero_locus_count(ctx) == expected
    assert count_solutions(ctx, CurveEquation.mixed(ctx.zero)) == expected
    with pytest.raises(OddCharacteristic):
        char2_zero_locus_count(make_field(5, 1))


@pytest.mark.parametrize("n", range(1, 9))
def test_char2_partition_and_uniformity(n):
    ctx = make_field(2, n)
    counts = [
        count_solutions(ctx, CurveEquation.mixed(ctx.from_enc(e))) for e in range(ctx.q)
    ]
    assert sum(counts) == ctx.q**2  # the plane partitions over c
    assert len(set(counts[1:])) == 1  # same count for every c != 0


def test_budget_guard():
    ctx = make_field(2, 17)
    with pytest.raises(BudgetExceeded):
        count_solutions(ctx, CurveEquation.hyperbola())
    with pytest.raises(BudgetExceeded):
        enumerate_solutions(ctx, CurveEquation.circle(), q_budget=2**16)
    # the parabola contract is a single pass, so it gets more headroom
    assert count_solutions(ctx, CurveEquation.parabola()) == 2**17


def test_method_validation():
    ctx = make_field(3, 1)
    with pytest.raises(ValueError):
        count_solutions(ctx, CurveEquation.circle(), method="magic")
