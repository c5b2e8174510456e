"""Set-family primitives on the Boolean lattice.

Subsets of ``[n]`` are plain ``int`` masks with element ``i`` at bit ``i-1``,
so colexicographic (squashed) order on one level is numeric order.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

import numpy as np

from . import _bitcube as cube
from .errors import (
    BadFamily,
    CountOutOfRange,
    EmptyCardinality,
    FullCardinality,
    ZeroHasNoCascade,
)

MAX_GROUND = 64

SubsetMask = int


def mask_of(elements: Iterable[int]) -> SubsetMask:
    m = 0
    for e in elements:
        m |= 1 << (e - 1)
    return m


def elements_of(mask: SubsetMask) -> list[int]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def colex_key(mask: SubsetMask) -> tuple[int, int]:
    """Sort key: cardinality first, then colex."""
    return (mask.bit_count(), mask)


def _check_ground(n: int) -> None:
    if not 0 <= n <= MAX_GROUND:
        raise BadFamily(f"ground size {n} outside [0, {MAX_GROUND}]")


class Family:
    """Immutable family of equal-size subsets of ``[n]`` in colex order.

    Backed by a sorted ``uint64`` mask array, a packed bitset over ``2^[n]``
    (for ``n <= 26``), or both; each view is derived on first use.
    """

    __slots__ = ("n", "card", "_masks", "_bits", "_len")

    def __init__(self, n: int, card: int, masks=None, *, bits=None, _trusted=False):
        _check_ground(n)
        if not 0 <= card <= n:
            raise BadFamily(f"cardinality {card} outside [0, {n}]")
        self.n = n
        self.card = card
        self._bits = None
        self._masks = None
        self._len = None
        if bits is not None:
            if n > cube.MAX_N:
                raise BadFamily(f"bitset storage needs n <= {cube.MAX_N}")
            bits = np.asarray(bits, dtype=np.uint64)
            if bits.shape != (cube.nwords(n),):
                raise BadFamily("bitset has the wrong length for this ground set")
            if not _trusted and np.any(bits & ~cube.level(n, card)):
                raise BadFamily(f"bitset holds sets of cardinality other than {card}")
            bits.setflags(write=False)
            self._bits = bits
        else:
            arr = np.unique(np.asarray(list(masks) if not isinstance(masks, np.ndarray) else masks,
                                       dtype=np.uint64))
            if not _trusted and len(arr):
                if n < 64 and int(arr[-1]) >> n:
                    raise BadFamily(f"member outside [{n}]")
                if np.any(np.bitwise_count(arr) != card):
                    raise BadFamily(f"members must all have cardinality {card}")
            arr.setflags(write=False)
            self._masks = arr

    @classmethod
    def of(cls, n: int, sets: Iterable[Iterable[int]], card: int | None = None) -> "Family":
        """Build from element lists, e.g. ``Family.of(4, [[1, 2], [2, 3]])``."""
        masks = [mask_of(s) for s in sets]
        if card is None:
            if not masks:
                raise BadFamily("cardinality of an empty family must be given")
            card = masks[0].bit_count()
        return cls(n, card, masks)

    @classmethod
    def empty(cls, n: int, card: int) -> "Family":
        return cls(n, card, np.zeros(0, dtype=np.uint64), _trusted=True)

    @classmethod
    def level(cls, n: int, card: int) -> "Family":
        if n <= cube.MAX_N:
            return cls(n, card, bits=cube.level(n, card), _trusted=True)
        return cls(n, card, [mask_of(c) for c in combinations(range(1, n + 1), card)],
                   _trusted=True)

    @property
    def masks(self) -> np.ndarray:
        if self._masks is None:
            arr = cube.to_masks(self._bits, self.n)
            arr.setflags(write=False)
            self._masks = arr
        return self._masks

    @property
    def bits(self) -> np.ndarray:
        if self._bits is None:
            if self.n > cube.MAX_N:
                raise BadFamily(f"bitset storage needs n <= {cube.MAX_N}")
            b = cube.from_masks(self._masks, self.n)
            b.setflags(write=False)
            self._bits = b
        return self._bits

    @property
    def has_bits(self) -> bool:
        return self._bits is not None

    def __len__(self) -> int:
        if self._len is None:
            if self._masks is not None:
                self._len = len(self._masks)
            else:
                self._len = cube.count(self._bits)
        return self._len

    def __iter__(self):
        return (int(m) for m in self.masks)

    def __contains__(self, mask) -> bool:
        if isinstance(mask, (list, tuple, set, frozenset)):
            mask = mask_of(mask)
        if mask.bit_count() != self.card or mask >> self.n:
            return False
        if self._bits is not None:
            return bool((int(self._bits[mask >> 6]) >> (mask & 63)) & 1)
        i = np.searchsorted(self._masks, np.uint64(mask))
        return i < len(self._masks) and int(self._masks[i]) == mask

    def __eq__(self, other) -> bool:
        if not isinstance(other, Family):
            return NotImplemented
        if (self.n, self.card) != (other.n, other.card) or len(self) != len(other):
            return False
        if self._bits is not None and other._bits is not None:
            return bool(np.array_equal(self._bits, other._bits))
        return bool(np.array_equal(self.masks, other.masks))

    __hash__ = None

    def __repr__(self) -> str:
        head = [elements_of(m) for m in list(self)[:4]]
        more = "..." if len(self) > 4 else ""
        return f"Family(n={self.n}, card={self.card}, size={len(self)}, {head}{more})"

    def sets(self) -> list[list[int]]:
        return [elements_of(m) for m in self]

    def union(self, other: "Family") -> "Family":
        self._same_space(other)
        if self.n <= cube.MAX_N and (self.has_bits or other.has_bits):
            return Family(self.n, self.card, bits=self.bits | other.bits, _trusted=True)
        return Family(self.n, self.card, np.union1d(self.masks, other.masks), _trusted=True)

    def difference(self, other: "Family") -> "Family":
        self._same_space(other)
        if self.n <= cube.MAX_N and (self.has_bits or other.has_bits):
            return Family(self.n, self.card, bits=self.bits & ~other.bits, _trusted=True)
        return Family(self.n, self.card, np.setdiff1d(self.masks, other.masks), _trusted=True)

    def intersection(self, other: "Family") -> "Family":
        self._same_space(other)
        if self.n <= cube.MAX_N and (self.has_bits or other.has_bits):
            return Family(self.n, self.card, bits=self.bits & other.bits, _trusted=True)
        return Family(self.n, self.card, np.intersect1d(self.masks, other.masks), _trusted=True)

    def complement(self) -> "Family":
        """The other sets of the same level."""
        return Family.level(self.n, self.card).difference(self)

    def _same_space(self, other: "Family") -> None:
        if (self.n, self.card) != (other.n, other.card):
            raise BadFamily("families live on different levels or ground sets")


def shadow(F: Family) -> Family:
    if F.card == 0:
        raise EmptyCardinality("the empty set has no shadow")
    n = F.n
    if F.has_bits:
        return Family(n, F.card - 1, bits=cube.shadow(F.bits, n), _trusted=True)
    m = F.masks
    parts = []
    for b in range(n):
        bit = np.uint64(1 << b)
        parts.append(m[(m & bit) != 0] ^ bit)
    return Family(n, F.card - 1, np.concatenate(parts) if parts else m, _trusted=True)


def shade(G: Family) -> Family:
    if G.card == G.n:
        raise FullCardinality("no superset of [n] of larger size exists within [n]")
    n = G.n
    if G.has_bits:
        return Family(n, G.card + 1, bits=cube.shade(G.bits, n), _trusted=True)
    m = G.masks
    parts = []
    for b in range(n):
        bit = np.uint64(1 << b)
        parts.append(m[(m & bit) == 0] | bit)
    return Family(n, G.card + 1, np.concatenate(parts), _trusted=True)


def _next_same_weight(x: int) -> int:
    # Gosper's hack
    c = x & -x
    r = x + c
    return (((r ^ x) >> 2) // c) | r


def colex_prefix(t: int, card: int, n: int) -> Family:
    """The first ``t`` ``card``-subsets of ``[n]`` in colex order."""
    total = comb(n, card)
    if not 0 <= t <= total:
        raise CountOutOfRange(f"t={t} outside [0, {total}]")
    if card == 0:
        return Family(n, 0, [0][:t], _trusted=True)
    out = []
    x = (1 << card) - 1
    for _ in range(t):
        out.append(x)
        x = _next_same_weight(x)
    return Family(n, card, np.array(out, dtype=np.uint64), _trusted=True)


@dataclass(frozen=True)
class CascadeRep:
    """``t = sum(comb(a, j) for a, j in terms)`` with ``a`` and ``j`` strictly falling."""

    terms: tuple[tuple[int, int], ...]
    t: int

    @property
    def bottom(self) -> int:
        return self.terms[-1][1]

    def value(self) -> int:
        return sum(comb(a, j) for a, j in self.terms)


def cascade_representation(t: int, card: int) -> CascadeRep:
    if t < 1:
        raise ZeroHasNoCascade("t must be positive")
    if card < 1:
        raise CountOutOfRange("cardinality must be positive")
    terms = []
    rest = t
    j = card
    while rest > 0 and j >= 1:
        a = j
        while comb(a + 1, j) <= rest:
            a += 1
        terms.append((a, j))
        rest -= comb(a, j)
        j -= 1
    if rest:
        raise CountOutOfRange(f"{t} has no cascade of height {card}")
    return CascadeRep(tuple(terms), t)


def kk_shadow_size(t: int, card: int) -> int:
    """Shadow size of the first ``t`` ``card``-sets in colex order."""
    return sum(comb(a, j - 1) for a, j in cascade_representation(t, card).terms)


def squashed_size(n: int, l: int, t: int) -> int:
    """Size of the flat antichain on levels ``l, l+1`` whose upper part is the colex prefix of length ``t``."""
    top = comb(n, l + 1)
    if not 0 <= t <= top:
        raise CountOutOfRange(f"t={t} outside [0, {top}]")
    if t == 0:
        return comb(n, l)
    return t + comb(n, l) - kk_shadow_size(t, l + 1)


def is_squashed_maximal(n: int, l: int, t: int) -> bool:
    """Whether the squashed flat antichain with ``t`` upper sets is maximal (cascade bottom >= 2)."""
    if not 0 <= t <= comb(n, l + 1):
        raise CountOutOfRange(f"t={t} outside [0, {comb(n, l + 1)}]")
    if t == 0:
        return True
    return cascade_representation(t, l + 1).bottom >= 2


def catalan_prefix_sum(l: int) -> int:
    return sum(comb(2 * i, i) // (i + 1) for i in range(1, l + 1))


_OVERLAP = (0, 0, 0, 1, 1, 3, 3, 4, 4, 7, 7)


def overlap_f(t: int) -> int:
    """Right-end bonus of the large-antichain interval; ``t - 1`` from 11 on."""
    if t < 0:
        raise CountOutOfRange("t must be non-negative")
    return _OVERLAP[t] if t <= 10 else t - 1


def level_masks(n: int, card: int) -> Sequence[int]:
    return [int(m) for m in Family.level(n, card).masks]
