"""Flat lookup tables over the integer encodings of F_{p^n}.

The enumeration kernels never touch coefficient tuples: every element is
its encoding in [0, q), and the field structure is carried by the tables
built here once per context.  Multiplication runs through discrete
log/exp tables for the smallest-encoding generator of the unit group;
addition stays digitwise (XOR in characteristic 2).  Both kernel
backends build the exp/log core with the same deterministic algorithm,
so tables are bit-identical whichever one is active.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import BudgetExceeded

#: No lookup tables (and hence no enumeration) above this field size.
TABLE_LIMIT = 2**20

# curve codes shared with the kernels
CURVE_HYPERBOLA = 0
CURVE_PARABOLA = 1
CURVE_CIRCLE = 2
CURVE_MIXED = 3


@dataclass(eq=False)
class FieldTables:
    p: int
    n: int
    q: int
    mod_coeffs: tuple
    gen: int  # encoding of the unit-group generator behind exp/log
    pw: np.ndarray  # (n,)   p**i
    digits: np.ndarray  # (q, n) base-p digits of each encoding
    exp: np.ndarray  # (2(q-1),) exp[i] = enc(g^i), doubled to skip a mod
    log: np.ndarray  # (q,)   log[0] = -1
    neg: np.ndarray  # (q,)   additive inverse
    sq: np.ndarray  # (q,)   squares
    inv: np.ndarray  # (q,)   multiplicative inverse; inv[0] unused (0)
    sqrt_min: np.ndarray  # (q,) smallest square root, -1 if none
    is_sq: np.ndarray  # (q,)  sqrt_min >= 0
    trace: Optional[np.ndarray]  # p=2 only: absolute trace to F_2
    ab_root: Optional[np.ndarray]  # p=2 only: smallest z with z^2+z = d, -1 if none


def prime_factors(m: int) -> list:
    out = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        out.append(m)
    return out


def decompose(encs: np.ndarray, p: int, n: int) -> np.ndarray:
    """Base-p digit matrix, low digit first."""
    digits = np.empty((len(encs), n), dtype=np.int16)
    e = encs.astype(np.int64, copy=True)
    for i in range(n):
        e, r = np.divmod(e, p)
        digits[:, i] = r
    return digits


def build_tables(p: int, n: int, mod_coeffs, backend: Optional[str] = None) -> FieldTables:
    """Build the full table set for F_{p^n} with the given modulus."""
    from . import kernels

    q = p**n
    if q > TABLE_LIMIT:
        raise BudgetExceeded(q, TABLE_LIMIT)
    impl = kernels.get(backend)
    exp, log, gen = impl.build_core(p, n, tuple(mod_coeffs), prime_factors(q - 1))

    pw = p ** np.arange(n, dtype=np.int64)
    digits = decompose(np.arange(q), p, n)
    neg = (((p - digits) % p).astype(np.int64)) @ pw

    units = np.arange(1, q)
    sq = np.zeros(q, dtype=np.int64)
    sq[units] = exp[2 * log[units]]
    inv = np.zeros(q, dtype=np.int64)
    inv[units] = exp[(q - 1) - log[units]]

    sqrt_min = np.full(q, q, dtype=np.int64)
    np.minimum.at(sqrt_min, sq, np.arange(q, dtype=np.int64))
    sqrt_min[sqrt_min == q] = -1
    is_sq = sqrt_min >= 0

    trace = None
    ab_root = None
    if p == 2:
        e = np.arange(q, dtype=np.int64)
        acc = e.copy()
        t = e.copy()
        for _ in range(n - 1):
            t = sq[t]
            acc ^= t
        trace = acc.astype(np.int8)
        image = sq[e] ^ e  # z^2 + z, the Artin-Schreier map
        ab_root = np.full(q, q, dtype=np.int64)
        np.minimum.at(ab_root, image, e)
        ab_root[ab_root == q] = -1

    return FieldTables(
        p=p, n=n, q=q, mod_coeffs=tuple(mod_coeffs), gen=gen,
        pw=pw, digits=digits, exp=exp, log=log, neg=neg, sq=sq, inv=inv,
        sqrt_min=sqrt_min, is_sq=is_sq, trace=trace, ab_root=ab_root,
    )
