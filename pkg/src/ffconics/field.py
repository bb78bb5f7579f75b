"""Explicit construction of the finite field F_{p^n} as F_p[t]/(m(t)).

A field context fixes the prime p, the degree n and a monic irreducible
modulus polynomial m of degree n.  ``make_field`` always picks the monic
irreducible polynomial with the smallest integer encoding, so element
encodings are identical across runs (and across the two kernel backends).

Elements are coefficient tuples of length n, low-degree-first, each
residue in [0, p).  The canonical integer encoding

    enc(a) = a_0 + a_1*p + ... + a_{n-1}*p^(n-1)

is a bijection onto [0, p^n) and defines the total order used everywhere
(solution sorting, square-root tie-breaking).

Text rendering (stable; golden files depend on it):
  * n == 1: the integer residue, e.g. ``"3"``.
  * n >= 2: ``render`` gives the integer encoding; ``render_poly`` gives
    the polynomial form ``a_{n-1}t^{n-1}+...+a_1t+a_0`` with zero terms
    omitted, unit coefficients dropped before t, and ``"0"`` for zero
    (examples: ``"t+1"``, ``"2t^2+t"``, ``"1"``).
"""
from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterator, Optional

from .errors import (
    CharacteristicTwo,
    ContextMismatch,
    DegreeZero,
    MagnitudeExceeded,
    NotPrime,
    ZeroInverse,
)
from .polys import PolyOverFp, smallest_irreducible

#: Field contexts larger than this cannot be constructed at all.
MAGNITUDE_LIMIT = 2**32


def is_prime(p: int) -> bool:
    """Deterministic trial-division primality check (desk scale)."""
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class PrimePower:
    """A validated prime power q = p^n."""

    p: int
    n: int
    q: int

    @classmethod
    def of(cls, p: int, n: int) -> "PrimePower":
        if not isinstance(p, int) or not is_prime(p):
            raise NotPrime(p)
        if not isinstance(n, int) or n < 1:
            raise DegreeZero(n)
        q = p**n
        if q > MAGNITUDE_LIMIT:
            raise MagnitudeExceeded(q, MAGNITUDE_LIMIT)
        return cls(p, n, q)


@functools.total_ordering
@dataclass(frozen=True)
class FieldElement:
    """Canonical residue: coefficient tuple of length n, low-degree-first.

    Ordering compares encodings; since coefficients are reduced, that is
    the lexicographic order on the reversed coefficient tuple, which lets
    elements sort without a context at hand.
    """

    coeffs: tuple

    def __lt__(self, other: "FieldElement") -> bool:
        return self.coeffs[::-1] < other.coeffs[::-1]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __repr__(self):
        return f"FieldElement{self.coeffs}"


class FieldCtx:
    """Immutable model of F_{p^n}; all operations are pure functions."""

    def __init__(self, pp: PrimePower, modulus: PolyOverFp):
        from .polys import is_irreducible

        if modulus.p != pp.p:
            raise ContextMismatch(
                f"modulus over F_{modulus.p} cannot define an extension of F_{pp.p}"
            )
        if modulus.degree != pp.n or not modulus.is_monic():
            raise ValueError(
                f"modulus must be monic of degree {pp.n}, got {modulus.render()}"
            )
        if not is_irreducible(modulus):
            raise ValueError(f"modulus {modulus.render()} is reducible over F_{pp.p}")
        self.pp = pp
        self.modulus = modulus
        self.p = pp.p
        self.n = pp.n
        self.q = pp.q
        self.zero = FieldElement((0,) * self.n)
        self.one = self.from_int(1)
        # reduction rows: coefficients of t^(n+k) mod modulus, k = 0..n-2
        self._red = self._reduction_rows()
        self._tables = None

    def __eq__(self, other):
        return (
            isinstance(other, FieldCtx)
            and self.pp == other.pp
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.pp, self.modulus))

    def __repr__(self):
        return f"FieldCtx(p={self.p}, n={self.n}, modulus={self.modulus.render()})"

    def _reduction_rows(self):
        p, n = self.p, self.n
        rows = []
        # t^n == -(low part of modulus)
        cur = [(-c) % p for c in self.modulus.coeffs[:n]]
        rows.append(tuple(cur))
        for _ in range(n - 2):
            top = cur[n - 1]
            cur = [0] + cur[: n - 1]
            if top:
                cur = [(c + top * r) % p for c, r in zip(cur, rows[0])]
            rows.append(tuple(cur))
        return rows

    # ---- element construction -------------------------------------------

    def element(self, coeffs) -> FieldElement:
        """Build an element from (up to n) integer coefficients, reducing
        mod p and zero-padding to length n."""
        cs = [c % self.p for c in coeffs]
        if len(cs) > self.n:
            raise ContextMismatch(
                f"{len(cs)} coefficients do not fit degree-{self.n} extension"
            )
        cs += [0] * (self.n - len(cs))
        return FieldElement(tuple(cs))

    def from_int(self, k: int) -> FieldElement:
        """Embed an integer constant (k mod p) into the field."""
        return FieldElement((k % self.p,) + (0,) * (self.n - 1))

    def from_enc(self, e: int) -> FieldElement:
        if not 0 <= e < self.q:
            raise ContextMismatch(f"encoding {e} outside [0, {self.q})")
        cs = []
        for _ in range(self.n):
            e, r = divmod(e, self.p)
            cs.append(r)
        return FieldElement(tuple(cs))

    def enc(self, a: FieldElement) -> int:
        self._check(a)
        e = 0
        for c in reversed(a.coeffs):
            e = e * self.p + c
        return e

    def elements(self) -> Iterator[FieldElement]:
        """All field elements in encoding order."""
        for e in range(self.q):
            yield self.from_enc(e)

    def _check(self, a: FieldElement) -> FieldElement:
        if (
            not isinstance(a, FieldElement)
            or len(a.coeffs) != self.n
            or not all(0 <= c < self.p for c in a.coeffs)
        ):
            raise ContextMismatch(f"{a!r} is not an element of {self!r}")
        return a

    # ---- arithmetic ------------------------------------------------------

    def add(self, a: FieldElement, b: FieldElement) -> FieldElement:
        self._check(a)
        self._check(b)
        p = self.p
        return FieldElement(tuple((x + y) % p for x, y in zip(a.coeffs, b.coeffs)))

    def neg(self, a: FieldElement) -> FieldElement:
        self._check(a)
        return FieldElement(tuple((-x) % self.p for x in a.coeffs))

    def sub(self, a: FieldElement, b: FieldElement) -> FieldElement:
        # subtraction is addition of the additive inverse
        return self.add(a, self.neg(b))

    def mul(self, a: FieldElement, b: FieldElement) -> FieldElement:
        self._check(a)
        self._check(b)
        p, n = self.p, self.n
        if n == 1:
            return FieldElement(((a.coeffs[0] * b.coeffs[0]) % p,))
        conv = [0] * (2 * n - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    conv[i + j] += x * y
        out = conv[:n]
        for k in range(n, 2 * n - 1):
            c = conv[k] % p
            if c:
                row = self._red[k - n]
                for j in range(n):
                    out[j] += c * row[j]
        return FieldElement(tuple(c % p for c in out))

    def pow(self, a: FieldElement, e: int) -> FieldElement:
        """a^e by square-and-multiply; by convention 0^0 = 1."""
        self._check(a)
        if e < 0:
            raise ValueError("exponent must be nonnegative")
        result = self.one
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a: FieldElement) -> FieldElement:
        self._check(a)
        if a.is_zero():
            raise ZeroInverse(f"zero has no inverse in {self!r}")
        return self.pow(a, self.q - 2)

    # ---- squares ---------------------------------------------------------

    def is_square(self, a: FieldElement) -> bool:
        """Euler's criterion: a is a square iff a == 0 or a^((q-1)/2) == 1.
        In characteristic 2 the squaring map is an isomorphism, so every
        element is a square."""
        self._check(a)
        if self.p == 2 or a.is_zero():
            return True
        return self.pow(a, (self.q - 1) // 2) == self.one

    def sqrt(self, a: FieldElement) -> Optional[FieldElement]:
        """A square root of a, or None if a is not a square.

        When two roots exist the one with the smaller encoding is
        returned.  Characteristic 2 uses the Frobenius inverse
        b = a^(2^(n-1)); odd characteristic uses Tonelli-Shanks.
        """
        self._check(a)
        if a.is_zero():
            return self.zero
        if self.p == 2:
            b = a
            for _ in range(self.n - 1):
                b = self.mul(b, b)
            return b
        if not self.is_square(a):
            return None
        m = self.q - 1
        s = 0
        while m % 2 == 0:
            m //= 2
            s += 1
        z = self._nonsquare()
        big_m = s
        c = self.pow(z, m)
        t = self.pow(a, m)
        r = self.pow(a, (m + 1) // 2)
        while t != self.one:
            i = 0
            tt = t
            while tt != self.one:
                tt = self.mul(tt, tt)
                i += 1
            b = c
            for _ in range(big_m - i - 1):
                b = self.mul(b, b)
            big_m = i
            c = self.mul(b, b)
            t = self.mul(t, c)
            r = self.mul(r, b)
        return min(r, self.neg(r))

    def _nonsquare(self) -> FieldElement:
        # smallest-encoding quadratic non-residue; exists for odd p
        for e in range(2, self.q):
            cand = self.from_enc(e)
            if not self.is_square(cand):
                return cand
        raise ArithmeticError(f"no non-square found in {self!r}")

    def diagonal_coeff(self) -> FieldElement:
        """The y^2 coefficient left after completing the square on
        x^2+xy+y^2: the prime-field constant (3+p)(1-p)/4, embedded.

        Zero exactly for p = 3 and -1 exactly for p = 7; whether it is a
        square decides which mixed-term count formula applies.
        """
        if self.p == 2:
            raise CharacteristicTwo("completing the square needs odd characteristic")
        return self.from_int(diagonal_coeff_int(self.p))

    # ---- rendering -------------------------------------------------------

    def render(self, a: FieldElement) -> str:
        """Canonical text rendering: the integer residue for n = 1, the
        integer encoding for n >= 2."""
        return str(self.enc(a))

    def render_poly(self, a: FieldElement) -> str:
        """Polynomial rendering in the indeterminate t (see module docs)."""
        self._check(a)
        return PolyOverFp(self.p, a.coeffs).render()

    # ---- kernel tables ---------------------------------------------------

    def tables(self):
        """Lazily built lookup tables consumed by the counting kernels."""
        if self._tables is None:
            from .tables import build_tables

            self._tables = build_tables(self.p, self.n, self.modulus.coeffs)
        return self._tables


def diagonal_coeff_int(p: int) -> int:
    """(3+p)(1-p)/4 as a residue mod p (odd p)."""
    if p == 2:
        raise CharacteristicTwo("defined for odd characteristic only")
    return (3 + p) * (1 - p) * pow(4, -1, p) % p


def make_field(p: int, n: int) -> FieldCtx:
    """Construct F_{p^n} with the smallest-encoding irreducible modulus.

    For n = 1 the modulus is the monic degree-1 polynomial t.
    """
    pp = PrimePower.of(p, n)
    return FieldCtx(pp, smallest_irreducible(p, n))
