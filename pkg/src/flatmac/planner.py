"""Size intervals per level and the dispatch that builds an antichain of any target size.

Every construction returns the antichain together with a post-order trace
that :func:`replay` turns back into the identical family.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import ceil, comb, isqrt
from typing import NamedTuple, Optional

from .errors import (
    BadT,
    LevelRange,
    OutOfLargeRange,
    OutOfLevelRange,
    OutOfTheoremRange,
    VerificationFailure,
)
from .lift import lift_add_isolated, lift_join_element, lift_pair
from .setfam import Family, catalan_prefix_sum, overlap_f
from .star import small_target_range, solve_small_target, star_construct
from .tgraph import base_case_construct, six_nine, top_row_construct
from .trace import ConstructionTrace, TraceStep
from .verify import FlatAntichain, check_maximal_flat


@dataclass(frozen=True)
class SizeInterval:
    """Inclusive range of sizes for levels (l, l+1) over [n]; empty when lo > hi."""

    n: int
    l: int
    lo: int
    hi: int

    @property
    def empty(self) -> bool:
        return self.lo > self.hi

    def __contains__(self, m: int) -> bool:
        return self.lo <= m <= self.hi

    def __len__(self) -> int:
        return max(0, self.hi - self.lo + 1)

    def __iter__(self):
        return iter(range(self.lo, self.hi + 1))

    def shifted(self, d: int) -> tuple[int, int]:
        return self.lo + d, self.hi + d

    def as_tuple(self) -> tuple[int, int]:
        return self.lo, self.hi


class Construction(NamedTuple):
    antichain: FlatAntichain
    trace: ConstructionTrace


def _check_level(n: int, l: int) -> None:
    if not 2 <= l <= (n - 2) / 2:
        raise LevelRange(f"need 2 <= l <= (n-2)/2, got n={n}, l={l}")


def top_right_end(n: int, l: int) -> int:
    """Right end C(n, l+1) - (n-l-1) * ceil((n-l)/2) shared by both level intervals."""
    return comb(n, l + 1) - (n - l - 1) * ceil((n - l) / 2)


def interval_large(n: int, l: int) -> SizeInterval:
    """Sizes built by the lifting recursion on levels (l, l+1)."""
    _check_level(n, l)
    lo = comb(n, 2) - 6 if l == 2 else comb(n, l) - 3 - catalan_prefix_sum(l)
    return SizeInterval(n, l, lo, top_right_end(n, l) + overlap_f(n - l))


def _gamma(n: int, l: int) -> int:
    k = ceil(n / 2)
    return max(3 + catalan_prefix_sum(l), (1 + (l - 1) * (n - k)) * (-(-comb(k, l) // k) - l + 2))


def interval_flat(n: int, l: int) -> SizeInterval:
    """The interval guaranteed on levels (l, l+1), with the printed ceil(C(k,l)/k) packing bound."""
    _check_level(n, l)
    if l == 2:
        return SizeInterval(n, 2, comb(n, 2) - (n + 1) ** 2 // 8, top_right_end(n, 2))
    return SizeInterval(n, l, comb(n, l) - _gamma(n, l), top_right_end(n, l))


def table_row(n: int, l: int) -> SizeInterval:
    """One cell of the tabulated intervals: left end of the flat interval, right end of the lifted one."""
    return SizeInterval(n, l, interval_flat(n, l).lo, interval_large(n, l).hi)


# (n, l) -> t for the three level pairs whose gap needs its own core size
GAP_FILLERS = {(9, 3): 6, (10, 3): 6, (12, 4): 7}


def star_t(n: int, l: int) -> Optional[int]:
    """Core ground size used for the star construction on (n, l), or None if unusable."""
    if (n, l) in GAP_FILLERS:
        return GAP_FILLERS[(n, l)]
    if l == 2:
        t = n // 2 if n % 4 in (0, 1) else (n + 2) // 2
        return t if 2 < t <= n - 2 else None
    t = ceil(n / 2)
    return t if l + 3 <= t <= n - l else None


def interval_star(n: int, l: int) -> SizeInterval:
    """Sizes reachable by the star construction at the level's core size (empty if none)."""
    _check_level(n, l)
    t = star_t(n, l)
    if t is None:
        return SizeInterval(n, l, 1, 0)
    lo, hi = small_target_range(n, l, t)
    return SizeInterval(n, l, lo, hi)


def interval_level(n: int, l: int) -> SizeInterval:
    """Everything :func:`construct_in_level` can build: the star range joined to the lifted range."""
    large = interval_large(n, l)
    star = interval_star(n, l)
    if star.empty or star.hi < large.lo - 1:
        return large
    return SizeInterval(n, l, min(star.lo, large.lo), large.hi)


def theorem_interval(n: int) -> tuple[int, int]:
    k = ceil(n / 2)
    return comb(n, 2) - (n + 1) ** 2 // 8, comb(n, k) - k * ceil((k + 1) / 2)


# ---------------------------------------------------------------- constructions

_CACHE_MAX_N = 18


@lru_cache(maxsize=4096)
def _large_cached(n: int, l: int, m: int):
    return _large(n, l, m)


def _large_any(n: int, l: int, m: int):
    return _large_cached(n, l, m) if n <= _CACHE_MAX_N else _large(n, l, m)


def _large(n: int, l: int, m: int) -> tuple[FlatAntichain, tuple[TraceStep, ...]]:
    if l == 2:
        steps: list[TraceStep] = []
        A = base_case_construct(n, m, steps)
        return A, tuple(steps)
    lift1, lift2, lift3 = TraceStep("lift1"), TraceStep("lift2"), TraceStep("lift3")
    if n == 2 * l + 2:
        first = comb(2 * l + 1, l + 1)
        if m - first in interval_large(2 * l + 1, l - 1):
            A, s = _large_any(2 * l + 1, l - 1, m - first)
            return lift_join_element(A), s + (lift2,)
        second = comb(2 * l, l + 1) + comb(2 * l + 1, l - 1)
        if m - second in interval_large(2 * l, l - 1):
            A, s = _large_any(2 * l, l - 1, m - second)
            return lift_add_isolated(lift_join_element(A)), s + (lift2, lift1)
        raise OutOfLargeRange(f"size {m} not reachable for n={n}, l={l}")
    d1 = comb(n - 1, l - 1)
    if m - d1 in interval_large(n - 1, l):
        A, s = _large_any(n - 1, l, m - d1)
        return lift_add_isolated(A), s + (lift1,)
    d2 = comb(n - 1, l + 1)
    if m - d2 in interval_large(n - 1, l - 1):
        A, s = _large_any(n - 1, l - 1, m - d2)
        return lift_join_element(A), s + (lift2,)
    I3 = interval_large(n - 2, l - 1)
    rest = m - comb(n - 2, l + 1) - comb(n - 2, l - 2)
    if 2 * I3.lo <= rest <= 2 * I3.hi:
        a = min(I3.hi, rest - I3.lo)
        A1, s1 = _large_any(n - 2, l - 1, a)
        A2, s2 = _large_any(n - 2, l - 1, rest - a)
        return lift_pair(A1, A2), s1 + s2 + (lift3,)
    raise OutOfLargeRange(f"size {m} not reachable for n={n}, l={l}")


def construct_large(n: int, l: int, m: int) -> Construction:
    """Build by the lifting recursion; ``m`` must lie in :func:`interval_large`."""
    I = interval_large(n, l)
    if m not in I:
        raise OutOfLargeRange(f"size {m} outside [{I.lo}, {I.hi}] for n={n}, l={l}")
    A, steps = _large_any(n, l, m)
    return Construction(A, ConstructionTrace(steps))


def construct_star(n: int, l: int, m: int, t: Optional[int] = None) -> Construction:
    t = star_t(n, l) if t is None else t
    A = star_construct(n, l, solve_small_target(n, l, t, m))
    return Construction(A, ConstructionTrace((TraceStep("star", {"n": n, "l": l, "t": t, "m": m}),)))


def construct_in_level(n: int, l: int, m: int) -> Construction:
    """Antichain of size ``m`` on levels (l, l+1), lifted if possible, else from a star plan."""
    _check_level(n, l)
    if m in interval_large(n, l):
        return construct_large(n, l, m)
    if m in interval_star(n, l):
        return construct_star(n, l, m)
    I = interval_level(n, l)
    raise OutOfLevelRange(f"size {m} outside the constructible range [{I.lo}, {I.hi}] "
                          f"for n={n}, l={l}")


def levels12_t(n: int, m: int) -> Optional[int]:
    """t with C(t, 2) + n - t = m and 2 <= t <= n, if any."""
    s = 9 - 8 * n + 8 * m
    if s < 0:
        return None
    r = isqrt(s)
    if r * r != s or (3 + r) % 2:
        return None
    t = (3 + r) // 2
    return t if 2 <= t <= n else None


def footnote_square_t(n: int) -> Optional[int]:
    """t when one less than the flat minimum C(n,2) - floor((n+1)^2/8) is C(t,2) + n - t.

    That happens exactly when s = 4(n-1)(n-2) - 8 floor((n+1)^2/8) - 7 is an odd
    square, and then t = 3/2 + sqrt(s)/2.
    """
    s = 4 * (n - 1) * (n - 2) - 8 * ((n + 1) ** 2 // 8) - 7
    if s < 0:
        return None
    r = isqrt(s)
    return (3 + r) // 2 if r * r == s and r % 2 else None


def construct_levels12(n: int, t: int) -> FlatAntichain:
    """Pairs inside [t] with the singletons outside it; size C(t, 2) + n - t."""
    if not 2 <= t <= n:
        raise BadT(f"t={t} outside [2, {n}]")
    upper = Family(n, 2, [(1 << a) | (1 << b) for b in range(t) for a in range(b)])
    lower = Family(n, 1, [1 << i for i in range(t, n)])
    return FlatAntichain(n, 1, upper, lower)


def _verified(c: Construction, m: int) -> Construction:
    r = check_maximal_flat(c.antichain)
    if not r.is_maximal or r.size != m:
        raise VerificationFailure(f"constructed family of size {r.size} (wanted {m}) "
                                  f"is {'not ' if not r.is_maximal else ''}maximal")
    return c


def choose_level(n: int, m: int) -> int:
    """Smallest l whose constructible range contains ``m``."""
    for l in range(2, (n - 2) // 2 + 1):
        if m in interval_level(n, l):
            return l
    raise OutOfLevelRange(f"no level covers size {m} for n={n}")


def construct_main(n: int, m: int) -> Construction:
    """A verified flat maximal antichain of size ``m`` over [n].

    Sizes in the main interval go to the smallest covering level; sizes of the
    form C(t, 2) + n - t below it are built on levels 1 and 2.
    """
    if n < 6:
        raise OutOfTheoremRange(n, m, (0, -1), f"ground sizes below 6 are not supported (n={n})")
    lo, hi = theorem_interval(n)
    if not lo <= m <= hi:
        t = levels12_t(n, m)
        if t is not None and m < lo:
            A = construct_levels12(n, t)
            c = Construction(A, ConstructionTrace((TraceStep("level12", {"n": n, "t": t}),)))
            return _verified(c, m)
        raise OutOfTheoremRange(n, m, (lo, hi))
    return _verified(construct_in_level(n, choose_level(n, m), m), m)


def replay(trace: ConstructionTrace) -> FlatAntichain:
    """Rebuild the antichain a trace describes."""
    stack: list[FlatAntichain] = []
    for step in trace:
        p = step.params
        if step.rule == "base":
            if (p["n"], p["m"]) != (6, 9):
                raise ValueError(f"unknown base antichain {p}")
            stack.append(six_nine())
        elif step.rule == "topRow":
            stack.append(top_row_construct(p["n"], p["m"]))
        elif step.rule == "star":
            stack.append(star_construct(p["n"], p["l"],
                                        solve_small_target(p["n"], p["l"], p["t"], p["m"])))
        elif step.rule == "level12":
            stack.append(construct_levels12(p["n"], p["t"]))
        elif step.rule == "lift1":
            stack.append(lift_add_isolated(stack.pop()))
        elif step.rule == "lift2":
            stack.append(lift_join_element(stack.pop()))
        elif step.rule == "lift3":
            A2 = stack.pop()
            A1 = stack.pop()
            stack.append(lift_pair(A1, A2))
        else:
            raise ValueError(f"unknown trace rule {step.rule!r}")
    if len(stack) != 1:
        raise ValueError(f"trace leaves {len(stack)} antichains on the stack")
    return stack[0]
