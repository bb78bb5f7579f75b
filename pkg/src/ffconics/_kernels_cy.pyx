# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels.

Same contract and bit-identical results as kernels_ref; see that module
for the curve codes and the meaning of ``rhs``.
"""
import numpy as np

cdef inline long long add_enc(long long a, long long b, int p) nogil:
    # digitwise base-p addition of encodings
    cdef long long out = 0, mult = 1
    if p == 2:
        return a ^ b
    while a or b:
        out += ((a % p + b % p) % p) * mult
        mult *= p
        a //= p
        b //= p
    return out


cdef inline long long scale_enc(long long e, int k, int p) nogil:
    # multiply by a prime-subfield constant k in [0, p)
    cdef long long out = 0, mult = 1
    if k == 0:
        return 0
    if k == 1:
        return e
    while e:
        out += ((e % p) * k % p) * mult
        mult *= p
        e //= p
    return out


# ---------------------------------------------------------------------------
# scalar polynomial arithmetic for the exp/log core


cdef void poly_mul_mod(long long* a, long long* b, long long* out,
                       long long* mod, int p, int n) nogil:
    cdef long long conv[128]
    cdef long long c
    cdef int i, j, k
    for k in range(2 * n - 1):
        conv[k] = 0
    for i in range(n):
        if a[i]:
            for j in range(n):
                conv[i + j] += a[i] * b[j]
    for k in range(2 * n - 2, n - 1, -1):
        c = conv[k] % p
        if c < 0:
            c += p
        if c:
            for j in range(n):
                conv[k - n + j] -= c * mod[j]
    for i in range(n):
        c = conv[i] % p
        if c < 0:
            c += p
        out[i] = c


cdef void poly_pow(long long* a, long long e, long long* out,
                   long long* mod, int p, int n) nogil:
    cdef long long base[64]
    cdef long long tmp[64]
    cdef int i
    for i in range(n):
        base[i] = a[i]
        out[i] = 0
    out[0] = 1
    while e:
        if e & 1:
            poly_mul_mod(out, base, tmp, mod, p, n)
            for i in range(n):
                out[i] = tmp[i]
        poly_mul_mod(base, base, tmp, mod, p, n)
        for i in range(n):
            base[i] = tmp[i]
        e >>= 1


cdef void dec_enc(long long e, long long* out, int p, int n) nogil:
    cdef int i
    for i in range(n):
        out[i] = e % p
        e //= p


cdef long long enc_poly(long long* a, int p, int n) nogil:
    cdef long long e = 0
    cdef int i
    for i in range(n - 1, -1, -1):
        e = e * p + a[i]
    return e


def build_core(int p, int n, mod_coeffs, factors):
    """exp/log tables for the smallest-encoding generator of F_q^*."""
    if n >= 64:
        raise ValueError(f"degree {n} exceeds kernel limit 63")
    cdef long long q = 1
    cdef int i
    for i in range(n):
        q *= p
    exp_arr = np.empty(2 * (q - 1) if q > 2 else 2, dtype=np.int64)
    log_arr = np.full(q, -1, dtype=np.int64)
    cdef long long[::1] expt = exp_arr
    cdef long long[::1] logt = log_arr
    if q == 2:
        expt[0] = 1
        expt[1] = 1
        logt[1] = 0
        return exp_arr, log_arr, 1

    cdef long long mod[64]
    for i in range(n):
        mod[i] = mod_coeffs[i]

    fac_arr = np.asarray(factors, dtype=np.int64)
    cdef long long[::1] fac = fac_arr
    cdef int nfac = fac_arr.shape[0]

    cdef long long cand, gen = 0
    cdef long long a[64]
    cdef long long r[64]
    cdef bint ok
    cdef int f
    with nogil:
        for cand in range(2, q):
            dec_enc(cand, a, p, n)
            ok = True
            for f in range(nfac):
                poly_pow(a, (q - 1) // fac[f], r, mod, p, n)
                if enc_poly(r, p, n) == 1:
                    ok = False
                    break
            if ok:
                gen = cand
                break
    if gen == 0:
        raise ArithmeticError(f"no generator found for q={q}")

    cdef long long g[64]
    cdef long long cur[64]
    cdef long long tmp[64]
    cdef long long k
    with nogil:
        dec_enc(gen, g, p, n)
        for i in range(n):
            cur[i] = 0
        cur[0] = 1
        expt[0] = 1
        for k in range(1, q - 1):
            poly_mul_mod(cur, g, tmp, mod, p, n)
            for i in range(n):
                cur[i] = tmp[i]
            expt[k] = enc_poly(cur, p, n)
        for k in range(q - 1):
            expt[q - 1 + k] = expt[k]
            logt[expt[k]] = k
    return exp_arr, log_arr, int(gen)


# ---------------------------------------------------------------------------
# counting


def count_plane(t, int code, long long rhs):
    """Reference oracle: scan all q^2 ordered pairs."""
    cdef int p = t.p
    cdef long long q = t.q
    cdef long long[::1] sq = t.sq
    cdef long long[::1] neg = t.neg
    cdef long long[::1] expt = t.exp
    cdef long long[::1] logt = t.log
    nsq_arr = np.asarray(t.neg)[np.asarray(t.sq)]
    cdef long long[::1] nsq = nsq_arr
    cdef long long total = 0, x, y, sx, lx, xy
    with nogil:
        if code == 0:
            for x in range(q):
                sx = sq[x]
                for y in range(q):
                    if add_enc(sx, nsq[y], p) == rhs:
                        total += 1
        elif code == 1:
            for x in range(q):
                sx = sq[x]
                for y in range(q):
                    if add_enc(sx, neg[y], p) == rhs:
                        total += 1
        elif code == 2:
            for x in range(q):
                sx = sq[x]
                for y in range(q):
                    if add_enc(sx, sq[y], p) == rhs:
                        total += 1
        else:
            for x in range(q):
                sx = sq[x]
                lx = logt[x]
                for y in range(q):
                    if x == 0 or y == 0:
                        xy = 0
                    else:
                        xy = expt[lx + logt[y]]
                    if add_enc(add_enc(sx, xy, p), sq[y], p) == rhs:
                        total += 1
    return int(total)


def count_per_x(t, int code, long long rhs):
    """O(q) count: solve the induced quadratic in y for each x."""
    cdef int p = t.p
    cdef long long q = t.q
    if code == 1:
        return int(q)
    if p == 2 and (code == 0 or code == 2):
        return int(q)
    cdef long long[::1] sq = t.sq
    cdef long long[::1] neg = t.neg
    cdef long long[::1] sqrt_min = t.sqrt_min
    cdef long long total = 0, x, s, neg1, four_c, lc, d
    cdef long long[::1] expt
    cdef long long[::1] logt
    cdef long long[::1] invt
    cdef signed char[::1] trace
    cdef int km
    if p == 2:
        expt = t.exp
        logt = t.log
        invt = t.inv
        trace = t.trace
        lc = logt[rhs] if rhs != 0 else -1
        with nogil:
            total = 1  # x = 0: unique y = sqrt(c)
            for x in range(1, q):
                if rhs == 0:
                    d = 1
                else:
                    d = 1 ^ expt[lc + logt[sq[invt[x]]]]
                if trace[d] == 0:
                    total += 2
        return int(total)
    with nogil:
        if code == 0:
            neg1 = neg[1]
            for x in range(q):
                s = add_enc(sq[x], neg1, p)
                if s == 0:
                    total += 1
                elif sqrt_min[s] >= 0:
                    total += 2
        elif code == 2:
            for x in range(q):
                s = add_enc(neg[sq[x]], 1, p)
                if s == 0:
                    total += 1
                elif sqrt_min[s] >= 0:
                    total += 2
        else:
            km = (p - 3) % p
            four_c = scale_enc(rhs, 4 % p, p)
            for x in range(q):
                s = add_enc(scale_enc(sq[x], km, p), four_c, p)
                if s == 0:
                    total += 1
                elif sqrt_min[s] >= 0:
                    total += 2
    return int(total)


# ---------------------------------------------------------------------------
# enumeration (sorted (enc_x, enc_y) pairs)


def enum_plane(t, int code, long long rhs):
    cdef long long total = count_plane(t, code, rhs)
    out_arr = np.empty((total, 2), dtype=np.int64)
    cdef long long[:, ::1] out = out_arr
    cdef int p = t.p
    cdef long long q = t.q
    cdef long long[::1] sq = t.sq
    cdef long long[::1] neg = t.neg
    cdef long long[::1] expt = t.exp
    cdef long long[::1] logt = t.log
    cdef long long x, y, sx, lx, xy, v, m = 0
    with nogil:
        for x in range(q):
            sx = sq[x]
            lx = logt[x]
            for y in range(q):
                if code == 0:
                    v = add_enc(sx, neg[sq[y]], p)
                elif code == 1:
                    v = add_enc(sx, neg[y], p)
                elif code == 2:
                    v = add_enc(sx, sq[y], p)
                else:
                    if x == 0 or y == 0:
                        xy = 0
                    else:
                        xy = expt[lx + logt[y]]
                    v = add_enc(add_enc(sx, xy, p), sq[y], p)
                if v == rhs:
                    out[m, 0] = x
                    out[m, 1] = y
                    m += 1
    return out_arr


def enum_per_x(t, int code, long long rhs):
    cdef long long total = count_per_x(t, code, rhs)
    out_arr = np.empty((total, 2), dtype=np.int64)
    cdef long long[:, ::1] out = out_arr
    cdef int p = t.p
    cdef long long q = t.q
    cdef long long[::1] sq = t.sq
    cdef long long[::1] neg = t.neg
    cdef long long[::1] sqrt_min = t.sqrt_min
    cdef long long x, s, r, m = 0
    cdef long long neg1, four_c, ya, yb, shift, lc, d, z0, z1, y1, y2
    cdef int inv2
    cdef long long[::1] expt
    cdef long long[::1] logt
    cdef long long[::1] invt
    cdef long long[::1] ab_root
    cdef signed char[::1] trace
    cdef int km
    if code == 1:
        with nogil:
            for x in range(q):
                out[m, 0] = x
                out[m, 1] = sq[x]
                m += 1
        return out_arr
    if p == 2:
        if code == 0 or code == 2:
            with nogil:
                for x in range(q):
                    out[m, 0] = x
                    out[m, 1] = sqrt_min[sq[x] ^ 1]
                    m += 1
            return out_arr
        expt = t.exp
        logt = t.log
        invt = t.inv
        ab_root = t.ab_root
        trace = t.trace
        lc = logt[rhs] if rhs != 0 else -1
        with nogil:
            out[m, 0] = 0
            out[m, 1] = sqrt_min[rhs]
            m += 1
            for x in range(1, q):
                if rhs == 0:
                    d = 1
                else:
                    d = 1 ^ expt[lc + logt[sq[invt[x]]]]
                if trace[d] == 0:
                    z0 = ab_root[d]
                    z1 = z0 ^ 1
                    y1 = 0 if z0 == 0 else expt[logt[x] + logt[z0]]
                    y2 = 0 if z1 == 0 else expt[logt[x] + logt[z1]]
                    if y1 > y2:
                        y1, y2 = y2, y1
                    out[m, 0] = x
                    out[m, 1] = y1
                    out[m + 1, 0] = x
                    out[m + 1, 1] = y2
                    m += 2
        return out_arr
    inv2 = (p + 1) // 2
    with nogil:
        km = (p - 3) % p
        four_c = scale_enc(rhs, 4 % p, p)
        neg1 = neg[1]
        for x in range(q):
            if code == 0:
                s = add_enc(sq[x], neg1, p)
                shift = 0
            elif code == 2:
                s = add_enc(neg[sq[x]], 1, p)
                shift = 0
            else:
                s = add_enc(scale_enc(sq[x], km, p), four_c, p)
                shift = neg[x]
            if s == 0:
                out[m, 0] = x
                out[m, 1] = scale_enc(shift, inv2, p) if code == 3 else 0
                m += 1
            else:
                r = sqrt_min[s]
                if r >= 0:
                    if code == 3:
                        ya = scale_enc(add_enc(shift, r, p), inv2, p)
                        yb = scale_enc(add_enc(shift, neg[r], p), inv2, p)
                        if ya > yb:
                            ya, yb = yb, ya
                    else:
                        ya = r
                        yb = neg[r]
                    out[m, 0] = x
                    out[m, 1] = ya
                    out[m + 1, 0] = x
                    out[m + 1, 1] = yb
                    m += 2
    return out_arr
