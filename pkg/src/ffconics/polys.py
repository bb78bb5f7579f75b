"""Polynomials over the prime field Z/pZ.

Coefficients are stored low-degree-first as a tuple of residues in [0, p),
with no trailing zeros: the degree of a nonzero polynomial is simply
``len(coeffs) - 1``.  The zero polynomial is the empty tuple and reports
degree -1 (a value that can never be a coefficient index).

Only the operations needed to construct and validate quotient-ring moduli
live here: ring arithmetic, remainder, gcd, and an irreducibility test.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import NonMonic


def _trim(coeffs):
    i = len(coeffs)
    while i > 0 and coeffs[i - 1] == 0:
        i -= 1
    return tuple(coeffs[:i])


@dataclass(frozen=True)
class PolyOverFp:
    """A polynomial with coefficients in Z/pZ, low-degree-first."""

    p: int
    coeffs: tuple

    def __post_init__(self):
        if self.p < 2:
            raise ValueError(f"modulus base must be >= 2, got {self.p}")
        reduced = _trim(tuple(c % self.p for c in self.coeffs))
        object.__setattr__(self, "coeffs", reduced)

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __add__(self, other: "PolyOverFp") -> "PolyOverFp":
        p = self._same_base(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = (out[i] + c) % p
        return PolyOverFp(p, out)

    def __sub__(self, other: "PolyOverFp") -> "PolyOverFp":
        p = self._same_base(other)
        neg = PolyOverFp(p, tuple((-c) % p for c in other.coeffs))
        return self + neg

    def __mul__(self, other: "PolyOverFp") -> "PolyOverFp":
        p = self._same_base(other)
        if self.is_zero() or other.is_zero():
            return PolyOverFp(p, ())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] = (out[i + j] + a * b) % p
        return PolyOverFp(p, out)

    def __mod__(self, other: "PolyOverFp") -> "PolyOverFp":
        p = self._same_base(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial remainder by zero")
        d = other.degree
        lead_inv = pow(other.coeffs[-1], -1, p)
        rem = list(self.coeffs)
        for k in range(len(rem) - 1, d - 1, -1):
            c = rem[k]
            if c:
                f = (c * lead_inv) % p
                rem[k] = 0
                for j in range(d):
                    rem[k - d + j] = (rem[k - d + j] - f * other.coeffs[j]) % p
        return PolyOverFp(p, rem)

    def _same_base(self, other: "PolyOverFp") -> int:
        if self.p != other.p:
            raise ValueError(f"mixed coefficient fields: {self.p} vs {other.p}")
        return self.p

    def encoding(self) -> int:
        """Integer encoding sum(c_i * p^i); a total order on polynomials."""
        e = 0
        for c in reversed(self.coeffs):
            e = e * self.p + c
        return e

    def render(self, var: str = "t") -> str:
        """Human-readable form, highest degree first, e.g. ``t^2+2t+1``."""
        if self.is_zero():
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                coeff = "" if c == 1 else str(c)
                power = var if k == 1 else f"{var}^{k}"
                terms.append(coeff + power)
        return "+".join(terms)


def poly_from_encoding(p: int, e: int) -> PolyOverFp:
    """Inverse of :meth:`PolyOverFp.encoding`."""
    coeffs = []
    while e:
        e, r = divmod(e, p)
        coeffs.append(r)
    return PolyOverFp(p, coeffs)


def poly_gcd(a: PolyOverFp, b: PolyOverFp) -> PolyOverFp:
    """Monic gcd of two polynomials over the same prime field."""
    p = a._same_base(b)
    while not b.is_zero():
        a, b = b, a % b
    if a.is_zero():
        return a
    inv = pow(a.coeffs[-1], -1, p)
    return PolyOverFp(p, tuple((c * inv) % p for c in a.coeffs))


def _pow_p_mod(h: PolyOverFp, f: PolyOverFp) -> PolyOverFp:
    # h^p mod f by square-and-multiply on the (small) exponent p
    p = f.p
    result = PolyOverFp(p, (1,))
    base = h % f
    e = p
    while e:
        if e & 1:
            result = (result * base) % f
        base = (base * base) % f
        e >>= 1
    return result


def _prime_factors(n: int):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible(f: PolyOverFp) -> bool:
    """Test irreducibility of a monic polynomial over Z/pZ.

    Uses the classical criterion: f of degree d is irreducible iff
    t^(p^d) == t (mod f) and gcd(t^(p^(d/r)) - t, f) = 1 for every prime
    divisor r of d.  Frobenius powers t^(p^k) are built by iterating the
    p-th power map, so no large exponents ever appear.
    """
    if f.degree < 1:
        raise ValueError("irreducibility is defined for degree >= 1")
    if not f.is_monic():
        raise NonMonic(f"polynomial must be monic: {f.render()}")
    d = f.degree
    if d == 1:
        return True
    p = f.p
    t = PolyOverFp(p, (0, 1))
    # frob[k] = t^(p^k) mod f, filled incrementally
    h = t % f
    checkpoints = {d // r for r in _prime_factors(d)}
    for k in range(1, d + 1):
        h = _pow_p_mod(h, f)
        if k in checkpoints:
            g = poly_gcd(h - t, f)
            if g.degree != 0:
                return False
    return h == t % f


def smallest_irreducible(p: int, n: int) -> PolyOverFp:
    """Monic irreducible polynomial of degree n over Z/pZ with the smallest
    integer encoding.  Deterministic, so field element encodings are
    reproducible across runs."""
    if n == 1:
        return PolyOverFp(p, (0, 1))
    for low in range(p**n):
        cand = poly_from_encoding(p, low + p**n)
        if is_irreducible(cand):
            return cand
    raise RuntimeError(f"no irreducible polynomial of degree {n} over F_{p}")
