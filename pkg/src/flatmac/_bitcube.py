"""Packed bitsets over the whole cube 2^[n].

A family is a ``uint64`` array with one bit per subset of ``[n]``: subset ``S``
(as a mask, element ``i`` at bit ``i-1``) lives at word ``S >> 6``, bit
``S & 63``. For ``n < 6`` a single word is used and bits at or above ``2**n``
stay clear. Removing or adding element ``i`` is then a word shift (``i >= 6``)
or an in-word shift under a fixed pattern (``i < 6``), which keeps shadows,
shades and maximality checks linear in ``2**n / 64``.
"""

from functools import lru_cache

import numpy as np
from numba import njit

MAX_N = 26

# positions p in a word whose bit i is set, i = 0..5
_PATTERNS = np.array(
    [
        0xAAAAAAAAAAAAAAAA,
        0xCCCCCCCCCCCCCCCC,
        0xF0F0F0F0F0F0F0F0,
        0xFF00FF00FF00FF00,
        0xFFFF0000FFFF0000,
        0xFFFFFFFF00000000,
    ],
    dtype=np.uint64,
)
_SHIFTS = np.array([1, 2, 4, 8, 16, 32], dtype=np.uint64)


def nwords(n: int) -> int:
    return max(1, (1 << n) >> 6)


def empty(n: int) -> np.ndarray:
    return np.zeros(nwords(n), dtype=np.uint64)


@lru_cache(maxsize=None)
def _level_cached(n: int, k: int) -> np.ndarray:
    if k < 0 or k > n:
        out = empty(n)
    elif n <= 6:
        word = 0
        for s in range(1 << n):
            if s.bit_count() == k:
                word |= 1 << s
        out = np.array([word], dtype=np.uint64)
    else:
        out = join_halves(_level_cached(n - 1, k), _level_cached(n - 1, k - 1), n)
    out.setflags(write=False)
    return out


def level(n: int, k: int) -> np.ndarray:
    """Read-only bitset of all k-subsets of [n]."""
    return _level_cached(n, k)


def join_halves(without_n: np.ndarray, with_n: np.ndarray, n: int) -> np.ndarray:
    """Bitset over [n] from the parts over [n-1] without and with element n."""
    if n - 1 >= 6:
        return np.concatenate((without_n, with_n))
    half = 1 << (n - 1)
    word = int(without_n[0]) | (int(with_n[0]) << half)
    return np.array([word], dtype=np.uint64)


def split_halves(bits: np.ndarray, n: int):
    """Inverse of :func:`join_halves`."""
    if n - 1 >= 6:
        h = bits.shape[0] // 2
        return bits[:h], bits[h:]
    half = 1 << (n - 1)
    word = int(bits[0])
    low = word & ((1 << half) - 1)
    return (np.array([low], dtype=np.uint64), np.array([word >> half], dtype=np.uint64))


def count(bits: np.ndarray) -> int:
    return int(np.bitwise_count(bits).sum())


def to_masks(bits: np.ndarray, n: int) -> np.ndarray:
    """Ascending (hence colex within one level) masks of the members."""
    flags = np.unpackbits(bits.view(np.uint8), bitorder="little")
    if n < 6:
        flags = flags[: 1 << n]
    return np.flatnonzero(flags).astype(np.uint64)


@njit(cache=True)
def _or_masks(words, masks):
    for m in masks:
        words[m >> np.uint64(6)] |= np.uint64(1) << (m & np.uint64(63))


def from_masks(masks: np.ndarray, n: int) -> np.ndarray:
    out = empty(n)
    if len(masks):
        _or_masks(out, np.asarray(masks, dtype=np.uint64))
    return out


@njit(cache=True)
def _shadow(src, n, patterns, shifts):
    nw = src.shape[0]
    out = np.zeros(nw, dtype=np.uint64)
    low = min(n, 6)
    for w in range(nw):
        x = src[w]
        acc = np.uint64(0)
        for i in range(low):
            acc |= (x & patterns[i]) >> shifts[i]
        for i in range(6, n):
            s = 1 << (i - 6)
            if w & s == 0:
                acc |= src[w | s]
        out[w] = acc
    return out


@njit(cache=True)
def _shade(src, n, patterns, shifts):
    nw = src.shape[0]
    out = np.zeros(nw, dtype=np.uint64)
    low = min(n, 6)
    for w in range(nw):
        x = src[w]
        acc = np.uint64(0)
        for i in range(low):
            acc |= (x & ~patterns[i]) << shifts[i]
        for i in range(6, n):
            s = 1 << (i - 6)
            if w & s:
                acc |= src[w ^ s]
        out[w] = acc
    return out


def shadow(bits: np.ndarray, n: int) -> np.ndarray:
    """All sets obtained by deleting one element from a member."""
    return _shadow(bits, n, _PATTERNS, _SHIFTS)


def shade(bits: np.ndarray, n: int) -> np.ndarray:
    """All sets obtained by adding one element of [n] to a member."""
    return _shade(bits, n, _PATTERNS, _SHIFTS)


@njit(cache=True)
def _down_closure(src, n, patterns, shifts):
    out = src.copy()
    nw = out.shape[0]
    for i in range(min(n, 6)):
        for w in range(nw):
            out[w] |= (out[w] & patterns[i]) >> shifts[i]
    for i in range(6, n):
        s = 1 << (i - 6)
        for w in range(nw):
            if w & s == 0:
                out[w] |= out[w | s]
    return out


@njit(cache=True)
def _up_closure(src, n, patterns, shifts):
    out = src.copy()
    nw = out.shape[0]
    for i in range(min(n, 6)):
        for w in range(nw):
            out[w] |= (out[w] & ~patterns[i]) << shifts[i]
    for i in range(6, n):
        s = 1 << (i - 6)
        for w in range(nw):
            if w & s:
                out[w] |= out[w ^ s]
    return out


def down_closure(bits: np.ndarray, n: int) -> np.ndarray:
    """Every subset of some member (members included)."""
    return _down_closure(bits, n, _PATTERNS, _SHIFTS)


def up_closure(bits: np.ndarray, n: int) -> np.ndarray:
    """Every superset within [n] of some member (members included)."""
    out = _up_closure(bits, n, _PATTERNS, _SHIFTS)
    if n < 6:
        out[0] &= np.uint64((1 << (1 << n)) - 1)
    return out


@njit(cache=True)
def _flat_check(upper, lower, lev_lo, lev_hi, n, patterns, shifts):
    """Single pass over the cube.

    Returns (antichain, lower_is_complement_of_shadow, upper_is_complement_of_shade,
    first addable index or -1). The addable candidate is only meaningful when the
    family is an antichain.
    """
    nw = upper.shape[0]
    low = min(n, 6)
    antichain = True
    lower_ok = True
    upper_ok = True
    first = -1
    for w in range(nw):
        u = upper[w]
        d = lower[w]
        if lev_lo[w] == 0 and lev_hi[w] == 0:
            # no l- or (l+1)-set lives in this word, so both families are empty here
            continue
        sh = np.uint64(0)
        sd = np.uint64(0)
        for i in range(low):
            sh |= (u & patterns[i]) >> shifts[i]
            sd |= (d & ~patterns[i]) << shifts[i]
        for i in range(6, n):
            s = 1 << (i - 6)
            if w & s == 0:
                sh |= upper[w | s]
            else:
                sd |= lower[w ^ s]
        if d & sh:
            antichain = False
        want_lower = lev_lo[w] & ~sh
        want_upper = lev_hi[w] & ~sd
        if d != want_lower:
            lower_ok = False
        if u != want_upper:
            upper_ok = False
        if first < 0:
            cand = (want_lower & ~d) | (want_upper & ~u)
            if cand:
                b = 0
                while (cand >> np.uint64(b)) & np.uint64(1) == 0:
                    b += 1
                first = w * 64 + b
    return antichain, lower_ok, upper_ok, first


def flat_check(upper: np.ndarray, lower: np.ndarray, n: int, l: int):
    return _flat_check(upper, lower, level(n, l), level(n, l + 1), n, _PATTERNS, _SHIFTS)
