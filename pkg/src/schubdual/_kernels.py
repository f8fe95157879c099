"""Multiset enumeration kernels for the polarization rules.

Both backends walk every multiset of ``d`` labels (repetition allowed) in
lexicographic order, apply the rule of the given kind to the encoded labels
and record, per target code, whether it is reached and by which multiset
first.  They must agree bit for bit.

The numba path is used when numba imports and ``SCHUBDUAL_DISABLE_NUMBA``
is unset (or "0"); otherwise the vectorized numpy path runs.
"""

from __future__ import annotations

import os
from functools import lru_cache
from itertools import chain, combinations_with_replacement
from math import comb

import numpy as np

from .errors import TooLarge
from .labels import KIND_A, KIND_D, KIND_E6_1, KIND_E6_3, KIND_E6_3_UNSIGNED

MAX_MULTISETS = 5_000_000

_DISABLED = os.environ.get("SCHUBDUAL_DISABLE_NUMBA", "0").strip().lower() not in ("", "0", "false", "no")

try:
    if _DISABLED:
        raise ImportError("numba disabled by environment")
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - depends on environment
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        if len(args) == 1 and callable(args[0]) and not kwargs:
            return args[0]
        return lambda f: f


def default_backend() -> str:
    return "numba" if HAVE_NUMBA else "numpy"


# ---------------------------------------------------------------- numba path


@njit(cache=True)
def _low_bit(x):
    pos = 0
    while (x & 1) == 0:
        x >>= 1
        pos += 1
    return pos


@njit(cache=True)
def _popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@njit(cache=True)
def _eval(kind, codes, idx, d, nbits, out):
    if kind == KIND_A or kind == KIND_D:
        used = 0
        ymask = 0
        for t in range(d):
            bx = 1 << (codes[idx[t], 0] - 1)
            by = 1 << (codes[idx[t], 1] - 1)
            if (used & bx) or (used & by):
                return 0
            used |= bx | by
            ymask |= by
        if kind == KIND_A:
            out[0] = ymask
        else:
            out[0] = _low_bit(((1 << nbits) - 1) ^ used)
        return 1
    if kind == KIND_E6_1:
        a = codes[idx[0], 0]
        b = codes[idx[1], 0]
        agree = ~(a ^ b) & 31
        if _popcount(agree) != 1:
            return 0
        pos = _low_bit(agree)
        out[0] = 2 * pos + ((a >> pos) & 1)
        return 1
    # E6, node 3: KIND_E6_3 keeps targets whose signed coefficient survives,
    # KIND_E6_3_UNSIGNED keeps every target some arrangement produces
    red = np.empty(3, np.int64)
    blue = np.empty(3, np.int64)
    nr = 0
    nb = 0
    for t in range(d):
        if codes[idx[t], 0] == 1:
            if nr == 3:
                return 0
            red[nr] = codes[idx[t], 1]
            nr += 1
        else:
            if nb == 3:
                return 0
            blue[nb] = codes[idx[t], 1]
            nb += 1
    coef = np.zeros(9, np.int64)
    n = 0
    for a in range(3):
        if (a > 0 and red[0] == red[a]) or (a > 1 and red[1] == red[a]):
            continue
        r1 = red[(a + 1) % 3]
        r2 = red[(a + 2) % 3]
        if r1 & r2:
            continue
        u = 31 ^ (r1 | r2)
        r3 = red[a]
        for b in range(3):
            if (b > 0 and blue[0] == blue[b]) or (b > 1 and blue[1] == blue[b]):
                continue
            b1 = blue[(b + 1) % 3]
            b2 = blue[(b + 2) % 3]
            if b1 & b2:
                continue
            v = 31 ^ (b1 | b2)
            b3 = blue[b]
            if (u & b3) == 0 or (v & r3) == 0:
                continue
            up = b3 ^ u
            vp = r3 ^ v
            if up == vp:
                continue
            s = _arrangement_sign(r1, r2, u, up) * _arrangement_sign(b1, b2, v, vp)
            if up > vp:
                s = -s
            code = up | vp
            q = 0
            while q < n and out[q] != code:
                q += 1
            if q == n:
                out[n] = code
                n += 1
            coef[q] += s
    if kind == KIND_E6_3_UNSIGNED:
        return n
    m = 0
    for q in range(n):
        if coef[q] != 0:
            out[m] = out[q]
            m += 1
    return m


@njit(cache=True)
def _pair_sign(p1, p2):
    # sign of the Pfaffian term for the perfect matching {p1, p2} of four indices
    a1 = p1 & -p1
    a2 = p2 & -p2
    if a1 > a2:
        p1, p2 = p2, p1
        a1, a2 = a2, a1
    b1 = p1 ^ a1
    return -1 if a2 < b1 and b1 < (p2 ^ a2) else 1


@njit(cache=True)
def _arrangement_sign(p1, p2, kbit, obit):
    # (-1)^k from the kernel vector times the Pfaffian sign, negated when k > other
    s = -1 if _low_bit(kbit) % 2 else 1
    s *= _pair_sign(p1, p2)
    return s if kbit < obit else -s


@njit(cache=True)
def _enumerate_numba(kind, codes, d, ncodes, nbits):
    L = codes.shape[0]
    hit = np.zeros(ncodes, np.bool_)
    wit = np.full((ncodes, d), -1, np.int64)
    if L == 0 or d == 0:
        return hit, wit
    idx = np.zeros(d, np.int64)
    out = np.empty(16, np.int64)
    while True:
        k = _eval(kind, codes, idx, d, nbits, out)
        for t in range(k):
            c = out[t]
            if not hit[c]:
                hit[c] = True
                wit[c, :] = idx
        j = d - 1
        while j >= 0 and idx[j] == L - 1:
            j -= 1
        if j < 0:
            break
        v = idx[j] + 1
        for q in range(j, d):
            idx[q] = v
    return hit, wit


# ---------------------------------------------------------------- numpy path


@lru_cache(maxsize=64)
def multisets(L: int, d: int) -> np.ndarray:
    """All d-multisets of range(L) as rows, in lexicographic order."""
    n = comb(L + d - 1, d)
    flat = np.fromiter(
        chain.from_iterable(combinations_with_replacement(range(L), d)), dtype=np.int64, count=n * d
    )
    out = flat.reshape(n, d)
    out.setflags(write=False)
    return out


def _first_rows(T: np.ndarray, ncodes: int) -> np.ndarray:
    """For every code, the first row of T (entries -1 ignored) containing it."""
    N = T.shape[0]
    first = np.full(ncodes, N, dtype=np.int64)
    rows = np.broadcast_to(np.arange(N)[:, None], T.shape)
    ok = T >= 0
    np.minimum.at(first, T[ok], rows[ok])
    return first


def _codes_numpy(kind, codes, M, d, nbits):
    if kind in (KIND_A, KIND_D):
        bx = np.left_shift(1, codes[M, 0] - 1)
        by = np.left_shift(1, codes[M, 1] - 1)
        used = np.bitwise_or.reduce(bx | by, axis=1)
        ok = np.bitwise_count(used) == 2 * d
        if kind == KIND_A:
            val = np.bitwise_or.reduce(by, axis=1)
        else:
            val = np.bitwise_count((((1 << nbits) - 1) ^ used) - 1).astype(np.int64)
        return np.where(ok, val, -1)[:, None]
    if kind == KIND_E6_1:
        a = codes[M[:, 0], 0]
        b = codes[M[:, 1], 0]
        agree = ~(a ^ b) & 31
        ok = np.bitwise_count(agree) == 1
        pos = np.bitwise_count(np.where(ok, agree, 1) - 1).astype(np.int64)
        val = 2 * pos + ((a >> pos) & 1)
        return np.where(ok, val, -1)[:, None]
    col = codes[M, 0]
    mask = codes[M, 1]
    ok = col.sum(axis=1) == 3
    order = np.argsort(-col, axis=1, kind="stable")
    K = np.take_along_axis(mask, order, axis=1)
    red, blue = K[:, :3], K[:, 3:]
    T = np.full((M.shape[0], 9), -1, dtype=np.int64)
    S = np.zeros((M.shape[0], 9), dtype=np.int64)
    for a in range(3):
        r1, r2, r3 = red[:, (a + 1) % 3], red[:, (a + 2) % 3], red[:, a]
        fresh_r = ~(red[:, :a] == r3[:, None]).any(axis=1)
        u = 31 ^ (r1 | r2)
        for b in range(3):
            b1, b2, b3 = blue[:, (b + 1) % 3], blue[:, (b + 2) % 3], blue[:, b]
            fresh_b = ~(blue[:, :b] == b3[:, None]).any(axis=1)
            v = 31 ^ (b1 | b2)
            up = b3 ^ u
            vp = r3 ^ v
            good = (
                ok & fresh_r & fresh_b
                & ((r1 & r2) == 0) & ((b1 & b2) == 0)
                & ((u & b3) != 0) & ((v & r3) != 0) & (up != vp)
            )
            sign = _arrangement_sign_np(r1, r2, u, up) * _arrangement_sign_np(b1, b2, v, vp)
            sign = np.where(up > vp, -sign, sign)
            T[:, 3 * a + b] = np.where(good, up | vp, -1)
            S[:, 3 * a + b] = np.where(good, sign, 0)
    same = (T[:, :, None] == T[:, None, :]) & (T[:, :, None] >= 0)
    earlier = np.tril(same, -1).any(axis=2)
    keep = (T >= 0) & ~earlier
    if kind == KIND_E6_3:
        keep &= (same * S[:, None, :]).sum(axis=2) != 0
    return np.where(keep, T, -1)


def _bitpos(x):
    return np.bitwise_count(np.maximum(x, 1) - 1).astype(np.int64)


def _arrangement_sign_np(p1, p2, kbit, obit):
    lo1, lo2 = p1 & -p1, p2 & -p2
    swap = lo1 > lo2
    q1, q2 = np.where(swap, p2, p1), np.where(swap, p1, p2)
    a2 = np.where(swap, lo1, lo2)
    hi1 = q1 ^ np.where(swap, lo2, lo1)
    crossing = (a2 < hi1) & (hi1 < (q2 ^ a2))
    s = np.where(_bitpos(kbit) % 2 == 1, -1, 1) * np.where(crossing, -1, 1)
    return np.where(kbit < obit, s, -s)


def _enumerate_numpy(kind, codes, d, ncodes, nbits):
    L = codes.shape[0]
    hit = np.zeros(ncodes, dtype=bool)
    wit = np.full((ncodes, d), -1, dtype=np.int64)
    if L == 0 or d == 0:
        return hit, wit
    M = multisets(L, d)
    first = _first_rows(_codes_numpy(kind, codes, M, d, nbits), ncodes)
    hit = first < M.shape[0]
    wit[hit] = M[first[hit]]
    return hit, wit


# ---------------------------------------------------------------- front door


def enumerate_targets(kind: int, codes, d: int, ncodes: int, nbits: int, backend: str | None = None):
    """Reached target codes (ascending) and, per code, the first witness multiset.

    ``codes`` is an (L, 2) integer array of encoded labels; witnesses are rows
    of label positions into it.
    """
    codes = np.ascontiguousarray(np.asarray(codes, dtype=np.int64).reshape(-1, 2))
    L = codes.shape[0]
    total = comb(L + d - 1, d) if L else 0
    if total > MAX_MULTISETS:
        raise TooLarge(f"{total} multisets of size {d} exceed the limit {MAX_MULTISETS}")
    backend = backend or default_backend()
    if backend == "numba":
        if not HAVE_NUMBA:
            raise RuntimeError("numba backend requested but numba is unavailable or disabled")
        hit, wit = _enumerate_numba(kind, codes, d, ncodes, nbits)
    elif backend == "numpy":
        hit, wit = _enumerate_numpy(kind, codes, d, ncodes, nbits)
    else:
        raise ValueError(f"unknown backend {backend!r}")
    found = np.flatnonzero(hit)
    return found, wit[found]
