"""Flat antichains and their independent maximality check."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Optional

from . import _bitcube as cube
from .errors import BadFamily
from .setfam import Family, SubsetMask, _next_same_weight, colex_key, elements_of, mask_of, shadow


@dataclass(frozen=True, eq=False)
class FlatAntichain:
    """Sets of sizes ``l`` (``lower``) and ``l + 1`` (``upper``) over ``[n]``.

    Construction only checks shapes; whether the family is an antichain, and
    whether it is maximal, is for :func:`check_maximal_flat` to say.
    """

    n: int
    l: int
    upper: Family
    lower: Family

    def __post_init__(self):
        if not 2 <= self.l + 1 <= self.n:
            raise BadFamily(f"levels ({self.l}, {self.l + 1}) do not fit in [{self.n}]")
        if (self.upper.n, self.upper.card) != (self.n, self.l + 1):
            raise BadFamily("upper family must consist of (l+1)-subsets of [n]")
        if (self.lower.n, self.lower.card) != (self.n, self.l):
            raise BadFamily("lower family must consist of l-subsets of [n]")

    @property
    def size(self) -> int:
        return len(self.upper) + len(self.lower)

    def __len__(self) -> int:
        return self.size

    def __eq__(self, other) -> bool:
        if not isinstance(other, FlatAntichain):
            return NotImplemented
        return (self.n, self.l) == (other.n, other.l) and self.upper == other.upper \
            and self.lower == other.lower

    __hash__ = None

    def masks(self) -> list[int]:
        """All members, by cardinality then colex."""
        return list(self.lower) + list(self.upper)

    def sets(self) -> list[list[int]]:
        return [elements_of(m) for m in self.masks()]

    def with_lower(self, lower: Family) -> "FlatAntichain":
        return FlatAntichain(self.n, self.l, self.upper, lower)

    def with_upper(self, upper: Family) -> "FlatAntichain":
        return FlatAntichain(self.n, self.l, upper, self.lower)

    @classmethod
    def from_sets(cls, n: int, sets) -> "FlatAntichain":
        """Split a list of element lists into the two levels they occupy."""
        masks = sorted({mask_of(s) for s in sets}, key=colex_key)
        if not masks:
            raise BadFamily("cannot infer levels of an empty family")
        cards = sorted({m.bit_count() for m in masks})
        if len(cards) > 2 or (len(cards) == 2 and cards[1] != cards[0] + 1):
            raise BadFamily(f"sets span cardinalities {cards}; not flat")
        if len(cards) == 1:
            # a single level is read as the upper part of (c-1, c) unless c = 0
            l = cards[0] - 1 if cards[0] >= 1 else 0
        else:
            l = cards[0]
        upper = [m for m in masks if m.bit_count() == l + 1]
        lower = [m for m in masks if m.bit_count() == l]
        return cls(n, l, Family(n, l + 1, upper), Family(n, l, lower))


@dataclass(frozen=True)
class VerifyReport:
    is_antichain: bool
    is_maximal: bool
    size: int
    witness: Optional[SubsetMask] = None

    def __bool__(self) -> bool:
        return self.is_maximal


def assemble_from_upper(n: int, l: int, F: Family) -> FlatAntichain:
    """``F`` together with every l-set outside its shadow."""
    if F.n != n or F.card != l + 1:
        raise BadFamily(f"expected (l+1)={l + 1}-subsets of [{n}], got card {F.card} over [{F.n}]")
    lower = shadow(F).complement()
    return FlatAntichain(n, l, F, lower)


def check_maximal_flat(A: FlatAntichain) -> VerifyReport:
    """Recompute both identities lower = L \\ shadow(upper), upper = U \\ shade(lower).

    The witness, when the family is an antichain but not maximal, is the
    colex-least set on levels ``l`` or ``l+1`` that could be added.
    """
    if A.n <= cube.MAX_N:
        antichain, lower_ok, upper_ok, first = cube.flat_check(
            A.upper.bits, A.lower.bits, A.n, A.l)
        maximal = antichain and lower_ok and upper_ok
        witness = int(first) if antichain and not maximal else None
        return VerifyReport(bool(antichain), bool(maximal), A.size, witness)
    return _check_sparse(A)


def _check_sparse(A: FlatAntichain) -> VerifyReport:
    n, l = A.n, A.l
    upper = {int(m) for m in A.upper.masks}
    lower = {int(m) for m in A.lower.masks}
    full = (1 << n) - 1
    sh = set()
    for u in upper:
        x = u
        while x:
            b = x & -x
            sh.add(u ^ b)
            x ^= b
    sd = set()
    for d in lower:
        x = full & ~d
        while x:
            b = x & -x
            sd.add(d | b)
            x ^= b
    antichain = not (lower & sh)
    # counting keeps this independent of level enumeration
    lower_ok = antichain and len(lower) + len(sh) == comb(n, l)
    upper_ok = not (upper & sd) and len(upper) + len(sd) == comb(n, l + 1)
    maximal = antichain and lower_ok and upper_ok
    witness = None
    if antichain and not maximal:
        best = None
        for card, taken in ((l, lower | sh), (l + 1, upper | sd)):
            m = (1 << card) - 1
            while not m >> n:
                if card == 0:
                    if m not in taken:
                        best = m if best is None else min(best, m)
                    break
                if m not in taken:
                    best = m if best is None else min(best, m)
                    break
                m = _next_same_weight(m)
        witness = best
    return VerifyReport(antichain, maximal, A.size, witness)
