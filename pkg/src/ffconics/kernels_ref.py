"""Reference kernels: vectorized numpy, no compiled code.

This is the fallback backend and the readable specification of what the
Cython backend must reproduce bit for bit.  All functions work on the
integer encodings of field elements; see tables.FieldTables for the
lookup tables they consume.

Curve codes and the right-hand side ``rhs``:
  0 hyperbola  x^2 - y^2 = rhs   (rhs is enc(1))
  1 parabola   x^2 - y   = rhs   (rhs is 0)
  2 circle     x^2 + y^2 = rhs   (rhs is enc(1))
  3 mixed      x^2 + x*y + y^2 = rhs  (rhs is enc(c))
"""
from __future__ import annotations

import numpy as np


# ---------------------------------------------------------------------------
# core construction: discrete exp/log for the unit group


def decompose(encs: np.ndarray, p: int, n: int) -> np.ndarray:
    """Base-p digit matrix of the encodings, low digit first."""
    digits = np.empty((len(encs), n), dtype=np.int16)
    e = encs.astype(np.int64, copy=True)
    for i in range(n):
        e, r = np.divmod(e, p)
        digits[:, i] = r
    return digits


def _scalar_ops(p, n, mod_coeffs):
    # plain-list polynomial arithmetic, used only for generator search
    def mul(a, b):
        conv = [0] * (2 * n - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    conv[i + j] += x * y
        for k in range(2 * n - 2, n - 1, -1):
            c = conv[k] % p
            if c:
                conv[k] = 0
                for j in range(n):
                    conv[k - n + j] -= c * mod_coeffs[j]
        return [c % p for c in conv[:n]]

    def powe(a, e):
        out = [1] + [0] * (n - 1)
        base = list(a)
        while e:
            if e & 1:
                out = mul(out, base)
            base = mul(base, base)
            e >>= 1
        return out

    def dec(e):
        cs = []
        for _ in range(n):
            e, r = divmod(e, p)
            cs.append(r)
        return cs

    return mul, powe, dec


def _reduction_matrix(p, n, mod_coeffs):
    # rows k = 0..2n-2: coefficients of t^k modulo the modulus
    rows = [[int(i == k) for i in range(n)] for k in range(n)]
    if n >= 2:
        base = [(-c) % p for c in mod_coeffs[:n]]
        rows.append(list(base))
        cur = list(base)
        for _ in range(n - 2):
            top = cur[n - 1]
            cur = [0] + cur[: n - 1]
            if top:
                cur = [(c + top * b) % p for c, b in zip(cur, base)]
            rows.append(list(cur))
    return np.array(rows, dtype=np.int64)


def build_core(p: int, n: int, mod_coeffs: tuple, factors: list):
    """exp/log tables for the smallest-encoding generator of F_q^*."""
    q = p**n
    exp = np.empty(2 * (q - 1) if q > 2 else 2, dtype=np.int64)
    log = np.full(q, -1, dtype=np.int64)
    if q == 2:
        exp[:] = 1
        log[1] = 0
        return exp, log, 1

    mul, powe, dec = _scalar_ops(p, n, mod_coeffs)
    one = [1] + [0] * (n - 1)
    gen_enc = None
    for cand in range(2, q):
        a = dec(cand)
        if all(powe(a, (q - 1) // f) != one for f in factors):
            gen_enc = cand
            break
    if gen_enc is None:
        raise ArithmeticError(f"no generator found for q={q}")

    R = _reduction_matrix(p, n, mod_coeffs)
    pw = p ** np.arange(n, dtype=np.int64)

    def mul_block(encs, k_coeffs):
        # multiply a block of encodings by one fixed element
        D = decompose(encs, p, n).astype(np.int64)
        conv = np.zeros((len(encs), 2 * n - 1), dtype=np.int64)
        for j, kc in enumerate(k_coeffs):
            if kc:
                conv[:, j : j + n] += kc * D
        return ((conv @ R) % p) @ pw

    powers = np.empty(q - 1, dtype=np.int64)
    powers[0] = 1
    filled = 1
    g = dec(gen_enc)
    while filled < q - 1:
        step = powe(g, filled)
        m = min(filled, q - 1 - filled)
        powers[filled : filled + m] = mul_block(powers[:m], step)
        filled += m
    exp[: q - 1] = powers
    exp[q - 1 :] = powers
    log[powers] = np.arange(q - 1, dtype=np.int64)
    return exp, log, gen_enc


# ---------------------------------------------------------------------------
# encoded arithmetic helpers


def _vadd(t, u, v):
    if t.p == 2:
        return u ^ v
    return ((t.digits[u] + t.digits[v]) % t.p).astype(np.int64) @ t.pw


def _vadd_c(t, u, e):
    if t.p == 2:
        return u ^ e
    return ((t.digits[u] + t.digits[e][None, :]) % t.p).astype(np.int64) @ t.pw


def _vscale(t, u, k):
    k %= t.p
    if k == 0:
        return np.zeros(len(u), dtype=np.int64)
    if k == 1:
        return u.astype(np.int64, copy=False)
    return ((t.digits[u] * k) % t.p).astype(np.int64) @ t.pw


def _scale1(t, e, k):
    k %= t.p
    return int(((t.digits[e].astype(np.int64) * k) % t.p) @ t.pw)


def _vmul_fixed(t, u, e):
    # u * e with e a fixed nonzero element; zeros in u stay zero
    if e == 0:
        return np.zeros(len(u), dtype=np.int64)
    out = t.exp[t.log[u] + t.log[e]]
    return np.where(u == 0, 0, out)


# ---------------------------------------------------------------------------
# counting


def count_plane(t, code: int, rhs: int) -> int:
    """Reference oracle: scan all q^2 ordered pairs."""
    q = t.q
    neg_sq = t.neg[t.sq]
    total = 0
    for x in range(q):
        sx = int(t.sq[x])
        if code == 0:
            vals = _vadd_c(t, neg_sq, sx)
        elif code == 1:
            vals = _vadd_c(t, t.neg, sx)
        elif code == 2:
            vals = _vadd_c(t, t.sq, sx)
        else:
            xy = _vmul_fixed(t, np.arange(q, dtype=np.int64), x)
            vals = _vadd(t, _vadd_c(t, t.sq, sx), xy)
        total += int(np.count_nonzero(vals == rhs))
    return total


def _root_counts(t, s):
    # number of y with y^2 = s, per entry
    return np.where(s == 0, 1, np.where(t.sqrt_min[s] >= 0, 2, 0))


def count_per_x(t, code: int, rhs: int) -> int:
    """O(q) count: solve the induced quadratic in y for each x."""
    p, q = t.p, t.q
    if code == 1:
        return q
    if p == 2:
        if code in (0, 2):
            return q  # squaring is a bijection: unique y per x
        x = np.arange(1, q, dtype=np.int64)
        d = 1 ^ _vmul_fixed(t, t.sq[t.inv[x]], rhs)
        return 1 + 2 * int(np.count_nonzero(t.trace[d] == 0))
    if code == 0:
        s = _vadd_c(t, t.sq, int(t.neg[1]))  # x^2 - 1
    elif code == 2:
        s = _vadd_c(t, t.neg[t.sq], 1)  # 1 - x^2
    else:
        four_c = _scale1(t, rhs, 4)
        s = _vadd_c(t, _vscale(t, t.sq, p - 3), four_c)  # -3x^2 + 4c
    return int(_root_counts(t, s).sum())


# ---------------------------------------------------------------------------
# enumeration (sorted (enc_x, enc_y) pairs)


def _pairs(xs, ys):
    out = np.empty((len(xs), 2), dtype=np.int64)
    out[:, 0] = xs
    out[:, 1] = ys
    return out


def _sorted_pairs(chunks):
    if not chunks:
        return np.empty((0, 2), dtype=np.int64)
    pairs = np.concatenate(chunks, axis=0)
    order = np.lexsort((pairs[:, 1], pairs[:, 0]))
    return pairs[order]


def enum_plane(t, code: int, rhs: int) -> np.ndarray:
    q = t.q
    neg_sq = t.neg[t.sq]
    chunks = []
    for x in range(q):
        sx = int(t.sq[x])
        if code == 0:
            vals = _vadd_c(t, neg_sq, sx)
        elif code == 1:
            vals = _vadd_c(t, t.neg, sx)
        elif code == 2:
            vals = _vadd_c(t, t.sq, sx)
        else:
            xy = _vmul_fixed(t, np.arange(q, dtype=np.int64), x)
            vals = _vadd(t, _vadd_c(t, t.sq, sx), xy)
        ys = np.nonzero(vals == rhs)[0]
        if len(ys):
            chunks.append(_pairs(np.full(len(ys), x, dtype=np.int64), ys))
    if not chunks:
        return np.empty((0, 2), dtype=np.int64)
    return np.concatenate(chunks, axis=0)  # already sorted: x asc, y asc


def enum_per_x(t, code: int, rhs: int) -> np.ndarray:
    p, q = t.p, t.q
    xs = np.arange(q, dtype=np.int64)
    if code == 1:
        return _pairs(xs, t.sq)
    if p == 2:
        if code in (0, 2):
            return _pairs(xs, t.sqrt_min[t.sq ^ 1])  # unique y = sqrt(x^2+1)
        x = xs[1:]
        d = 1 ^ _vmul_fixed(t, t.sq[t.inv[x]], rhs)
        ok = t.trace[d] == 0
        x2, z0 = x[ok], t.ab_root[d[ok]]
        z1 = z0 ^ 1
        y1 = _vmul_fixed_vec(t, x2, z0)
        y2 = _vmul_fixed_vec(t, x2, z1)
        chunks = [
            _pairs(np.array([0], dtype=np.int64), np.array([t.sqrt_min[rhs]])),
            _pairs(x2, y1),
            _pairs(x2, y2),
        ]
        return _sorted_pairs(chunks)
    if code == 0:
        s = _vadd_c(t, t.sq, int(t.neg[1]))
        return _quadratic_pairs(t, xs, s, shift=None)
    if code == 2:
        s = _vadd_c(t, t.neg[t.sq], 1)
        return _quadratic_pairs(t, xs, s, shift=None)
    four_c = _scale1(t, rhs, 4)
    disc = _vadd_c(t, _vscale(t, t.sq, p - 3), four_c)
    return _quadratic_pairs(t, xs, disc, shift=t.neg[xs])


def _vmul_fixed_vec(t, u, v):
    # elementwise u*v via logs, tolerating zeros in either argument
    out = t.exp[t.log[u] + t.log[v]]
    return np.where((u == 0) | (v == 0), 0, out)


def _quadratic_pairs(t, xs, s, shift):
    """Pairs from per-x square roots.

    shift None: y^2 = s, roots {r, -r}.
    shift given: y = (shift +- r) / 2 with r^2 = s (monic quadratic in y).
    """
    inv2 = (t.p + 1) // 2
    r = t.sqrt_min[s]
    one_m = s == 0
    two_m = (s != 0) & (r >= 0)
    x1, x2 = xs[one_m], xs[two_m]
    ra = r[two_m]
    if shift is None:
        ya = ra
        yb = t.neg[ra]
        y0 = np.zeros(len(x1), dtype=np.int64)
    else:
        ya = _vscale(t, _vadd(t, shift[two_m], ra), inv2)
        yb = _vscale(t, _vadd(t, shift[two_m], t.neg[ra]), inv2)
        y0 = _vscale(t, shift[one_m], inv2)
    return _sorted_pairs([_pairs(x1, y0), _pairs(x2, ya), _pairs(x2, yb)])
