"""Field core: construction, arithmetic, squares, orderings, renderings."""
import random

import pytest

from ffconics.errors import (
    CharacteristicTwo,
    ContextMismatch,
    DegreeZero,
    MagnitudeExceeded,
    NotPrime,
    ZeroInverse,
)
from ffconics.field import FieldElement, diagonal_coeff_int, is_prime, make_field

SMALL_FIELDS = [(2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (3, 3),
                (5, 1), (5, 2), (7, 1), (7, 2), (11, 1), (13, 1), (17, 1)]


def test_is_prime():
    primes = [2, 3, 5, 7, 11, 13, 97, 101, 1021]
    assert all(is_prime(p) for p in primes)
    assert not any(is_prime(k) for k in (-3, 0, 1, 4, 9, 15, 1023))


def test_make_field_moduli():
    assert make_field(2, 2).modulus.coeffs == (1, 1, 1)
    assert make_field(5, 1).modulus.coeffs == (0, 1)
    assert make_field(3, 2).modulus.coeffs == (1, 0, 1)


def test_make_field_errors():
    with pytest.raises(NotPrime):
        make_field(4, 1)
    with pytest.raises(DegreeZero):
        make_field(5, 0)
    with pytest.raises(MagnitudeExceeded):
        make_field(2, 33)


def test_add_examples():
    F5 = make_field(5, 1)
    assert F5.add(F5.from_int(3), F5.from_int(4)) == F5.from_int(2)
    F4 = make_field(2, 2)
    t = F4.from_enc(2)
    assert F4.add(t, F4.from_enc(3)) == F4.one
    F7 = make_field(7, 1)
    assert F7.add(F7.from_int(6), F7.one) == F7.zero


def test_mul_examples():
    F4 = make_field(2, 2)
    assert F4.mul(F4.from_enc(2), F4.from_enc(3)) == F4.one  # t*(t+1) = 1
    F5 = make_field(5, 1)
    assert F5.mul(F5.from_int(2), F5.from_int(3)) == F5.one
    for p, n in SMALL_FIELDS:
        ctx = make_field(p, n)
        for e in range(min(ctx.q, 16)):
            a = ctx.from_enc(e)
            assert ctx.mul(a, ctx.one) == a


def test_inv_examples():
    F7 = make_field(7, 1)
    assert F7.inv(F7.from_int(2)) == F7.from_int(4)
    F5 = make_field(5, 1)
    assert F5.inv(F5.from_int(2)) == F5.from_int(3)
    F4 = make_field(2, 2)
    assert F4.inv(F4.from_enc(2)) == F4.from_enc(3)
    with pytest.raises(ZeroInverse):
        F5.inv(F5.zero)


def test_pow_examples():
    F7 = make_field(7, 1)
    assert F7.pow(F7.from_int(3), 6) == F7.one
    F5 = make_field(5, 1)
    assert F5.pow(F5.from_int(2), 2) == F5.from_int(4)
    F4 = make_field(2, 2)
    assert F4.pow(F4.from_enc(2), 3) == F4.one
    assert F5.pow(F5.zero, 0) == F5.one  # 0^0 = 1 by convention


def test_is_square_examples():
    F5 = make_field(5, 1)
    assert not F5.is_square(F5.from_int(2))
    F11 = make_field(11, 1)
    assert F11.is_square(F11.from_int(9))
    for n in (1, 2, 3, 4):
        F = make_field(2, n)
        assert all(F.is_square(a) for a in F.elements())


def test_sqrt_examples():
    F11 = make_field(11, 1)
    assert F11.sqrt(F11.from_int(9)) == F11.from_int(3)  # 3 < 8 = -3
    F5 = make_field(5, 1)
    assert F5.sqrt(F5.from_int(2)) is None
    F4 = make_field(2, 2)
    assert F4.sqrt(F4.from_enc(2)) == F4.from_enc(3)  # (t+1)^2 = t
    assert F5.sqrt(F5.zero) == F5.zero


@pytest.mark.parametrize("p,n", SMALL_FIELDS)
def test_sqrt_is_canonical_min_root(p, n):
    ctx = make_field(p, n)
    for a in ctx.elements():
        r = ctx.sqrt(a)
        assert (r is not None) == ctx.is_square(a)
        if r is not None:
            assert ctx.mul(r, r) == a
            assert ctx.enc(r) <= ctx.enc(ctx.neg(r))


def test_diagonal_coeff_values():
    assert diagonal_coeff_int(3) == 0  # zero exactly at p = 3
    assert diagonal_coeff_int(7) == 6  # -1 exactly at p = 7
    assert diagonal_coeff_int(5) == 2
    assert [diagonal_coeff_int(p) for p in (11, 13, 23, 37, 47)] == [9, 4, 18, 10, 36]
    for p in (5, 11, 13, 19, 23):
        assert diagonal_coeff_int(p) not in (0, p - 1)
    with pytest.raises(CharacteristicTwo):
        diagonal_coeff_int(2)
    with pytest.raises(CharacteristicTwo):
        make_field(2, 2).diagonal_coeff()


def test_diagonal_coeff_square_for_listed_primes():
    for p in (11, 13, 23, 37, 47):
        ctx = make_field(p, 1)
        assert ctx.is_square(ctx.diagonal_coeff())
    for p in (5, 17, 19, 29, 31, 41, 43):
        ctx = make_field(p, 1)
        assert not ctx.is_square(ctx.diagonal_coeff())


@pytest.mark.parametrize("p,n", SMALL_FIELDS)
def test_enc_bijection_and_order(p, n):
    ctx = make_field(p, n)
    seen = set()
    prev = None
    for e in range(ctx.q):
        a = ctx.from_enc(e)
        assert ctx.enc(a) == e
        seen.add(a)
        if prev is not None:
            assert prev < a
        prev = a
    assert len(seen) == ctx.q


@pytest.mark.parametrize("p,n", SMALL_FIELDS)
def test_unary_identities_exhaustive(p, n):
    ctx = make_field(p, n)
    for a in ctx.elements():
        assert ctx.add(a, ctx.neg(a)) == ctx.zero
        assert ctx.sub(a, a) == ctx.zero
        if not a.is_zero():
            assert ctx.mul(a, ctx.inv(a)) == ctx.one
            assert ctx.pow(a, ctx.q - 1) == ctx.one


@pytest.mark.parametrize("p,n", SMALL_FIELDS)
def test_field_axioms_sampled(p, n):
    ctx = make_field(p, n)
    rng = random.Random(1000 * p + n)
    for _ in range(40):
        a, b, c = (ctx.from_enc(rng.randrange(ctx.q)) for _ in range(3))
        assert ctx.add(a, b) == ctx.add(b, a)
        assert ctx.mul(a, b) == ctx.mul(b, a)
        assert ctx.add(ctx.add(a, b), c) == ctx.add(a, ctx.add(b, c))
        assert ctx.mul(ctx.mul(a, b), c) == ctx.mul(a, ctx.mul(b, c))
        assert ctx.mul(a, ctx.add(b, c)) == ctx.add(ctx.mul(a, b), ctx.mul(a, c))


@pytest.mark.parametrize("n", range(1, 11))
def test_char2_squaring_is_bijection(n):
    ctx = make_field(2, n)
    images = {ctx.mul(a, a) for a in ctx.elements()}
    assert len(images) == ctx.q


@pytest.mark.parametrize("p", (3, 5, 7, 11, 13))
def test_prime_subfield_units_square_in_even_degree(p):
    ctx = make_field(p, 2)
    for k in range(1, p):
        a = ctx.from_int(k)
        assert ctx.is_square(a)
        # the identity behind it: (a^(p-1))^((p+1)/2) = 1
        assert ctx.pow(ctx.pow(a, p - 1), (p + 1) // 2) == ctx.one


@pytest.mark.parametrize("p,n", SMALL_FIELDS)
def test_square_census(p, n):
    ctx = make_field(p, n)
    nonzero_squares = {ctx.mul(a, a) for a in ctx.elements() if not a.is_zero()}
    expected = ctx.q - 1 if p == 2 else (ctx.q - 1) // 2
    assert len(nonzero_squares) == expected
    assert all(ctx.is_square(s) for s in nonzero_squares)


def test_half_constant_matches_generic_inverse():
    # (p+1)/2 is 2^{-1}; the implementation inverts generically
    for p, n in [(3, 1), (5, 1), (7, 2), (11, 1), (13, 1), (3, 3)]:
        ctx = make_field(p, n)
        assert ctx.inv(ctx.from_int(2)) == ctx.from_int((p + 1) // 2)


def test_context_mismatch():
    F5 = make_field(5, 1)
    F7 = make_field(7, 1)
    F25 = make_field(5, 2)
    a7 = F7.from_int(6)
    with pytest.raises(ContextMismatch):
        F5.add(F5.one, a7)  # 6 is not a residue mod 5
    with pytest.raises(ContextMismatch):
        F5.mul(F5.one, F25.one)  # wrong length
    with pytest.raises(ContextMismatch):
        F5.enc(FieldElement((1, 0)))
    with pytest.raises(ContextMismatch):
        F5.from_enc(5)


def test_render():
    F7 = make_field(7, 1)
    assert F7.render(F7.from_int(3)) == "3"
    F4 = make_field(2, 2)
    assert F4.render(F4.from_enc(3)) == "3"
    assert F4.render_poly(F4.from_enc(3)) == "t+1"
    assert F4.render_poly(F4.from_enc(2)) == "t"
    assert F4.render_poly(F4.zero) == "0"
    F9 = make_field(3, 2)
    assert F9.render_poly(F9.from_enc(7)) == "2t+1"


def test_element_ordering_matches_encoding():
    ctx = make_field(3, 3)
    elems = list(ctx.elements())
    assert elems == sorted(elems)
    assert sorted(ctx.enc(a) for a in elems) == list(range(27))
