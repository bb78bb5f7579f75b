"""Independent brute-force reference used by the tests.

Deliberately primitive and separate from the package: plain coefficient
tuples, schoolbook polynomial arithmetic, full q^2 scans.  Anything the
library enumerates at small q is compared against this.
"""


def poly_mul_mod(a, b, mod, p):
    n = len(mod) - 1
    res = [0] * (2 * n - 1 if n > 1 else 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                res[i + j] = (res[i + j] + ai * bj) % p
    for k in range(len(res) - 1, n - 1, -1):
        c = res[k]
        if c:
            res[k] = 0
            for j in range(n):
                res[k - n + j] = (res[k - n + j] - c * mod[j]) % p
    res = res[:n] + [0] * (n - len(res))
    return tuple(res[:n])


class NaiveField:
    def __init__(self, p, n, mod_coeffs):
        assert len(mod_coeffs) == n + 1 and mod_coeffs[-1] == 1
        self.p = p
        self.n = n
        self.q = p**n
        self.mod = list(mod_coeffs)

    def dec(self, e):
        cs = []
        for _ in range(self.n):
            e, r = divmod(e, self.p)
            cs.append(r)
        return tuple(cs)

    def enc(self, a):
        e = 0
        for c in reversed(a):
            e = e * self.p + c
        return e

    def add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def neg(self, a):
        return tuple((-x) % self.p for x in a)

    def mul(self, a, b):
        return poly_mul_mod(a, b, self.mod, self.p)

    def const(self, k):
        return (k % self.p,) + (0,) * (self.n - 1)

    def satisfies(self, kind, c, x, y):
        sx = self.mul(x, x)
        sy = self.mul(y, y)
        if kind == "hyperbola":
            return self.add(sx, self.neg(sy)) == self.const(1)
        if kind == "parabola":
            return self.add(sx, self.neg(y)) == self.const(0)
        if kind == "circle":
            return self.add(sx, sy) == self.const(1)
        return self.add(self.add(sx, self.mul(x, y)), sy) == c

    def solutions(self, kind, c_enc=None):
        """Sorted (enc_x, enc_y) pairs from a full-plane scan."""
        c = self.dec(c_enc) if c_enc is not None else None
        out = []
        for ex in range(self.q):
            x = self.dec(ex)
            for ey in range(self.q):
                if self.satisfies(kind, c, x, self.dec(ey)):
                    out.append((ex, ey))
        return out
