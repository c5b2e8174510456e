"""Maximal flat antichains from a shadow-disjoint core with attached star elements.

Take l-sets F of [t] that pairwise share at most l-2 elements. Each core set
A is extended by the elements of its star X(A) within {t+1, ..., n}; those
(l+1)-sets, together with every l-set outside their shadow, form a maximal
antichain of size C(n, l) - |F| - (l-1) * sum |X(A)|.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb

import numpy as np

from .errors import BadCore, BadPlan, OutOfSmallRange
from .setfam import Family, mask_of
from .verify import FlatAntichain, assemble_from_upper


@dataclass(frozen=True)
class StarPlan:
    """Core l-sets of [t] and how many star elements each receives (from t+1 upwards)."""

    t: int
    core: Family
    star_sizes: tuple[int, ...]

    @property
    def s(self) -> int:
        return len(self.core)

    @property
    def alpha(self) -> int:
        return sum(self.star_sizes)


@lru_cache(maxsize=None)
def _sum_class(t: int, l: int) -> tuple[int, ...]:
    classes: dict[int, list[int]] = {}
    for c in combinations(range(1, t + 1), l):
        classes.setdefault(sum(c) % t, []).append(mask_of(c))
    best = max(sorted(classes), key=lambda r: len(classes[r]))
    return tuple(classes[best])


def sum_class_family(t: int, l: int) -> Family:
    """Largest class of l-subsets of [t] by element sum mod t (ties: smallest residue).

    Two sets with the same sum mod t cannot differ in a single element, so
    the class is pairwise shadow-disjoint.
    """
    if not 2 <= l < t:
        raise BadCore(f"need 2 <= l < t, got l={l}, t={t}")
    return Family(t, l, np.array(_sum_class(t, l), dtype=np.uint64), _trusted=True)


def sum_class_size(t: int, l: int) -> int:
    if not 2 <= l < t:
        raise BadCore(f"need 2 <= l < t, got l={l}, t={t}")
    return len(_sum_class(t, l))


def is_shadow_disjoint(masks) -> bool:
    """No two members share an (l-1)-subset, i.e. they meet in at most l-2 elements."""
    masks = [int(m) for m in masks]
    for a, b in combinations(masks, 2):
        if (a & b).bit_count() >= a.bit_count() - 1:
            return False
    return True


def _check_plan(n: int, l: int, plan: StarPlan) -> None:
    t = plan.t
    if not 2 <= l < t < n:
        raise BadPlan(f"need 2 <= l < t < n, got l={l}, t={t}, n={n}")
    if plan.core.card != l or any(int(m) >> t for m in plan.core.masks):
        raise BadPlan(f"core must consist of {l}-subsets of [{t}]")
    if len(plan.star_sizes) != plan.s:
        raise BadPlan("one star size per core member is required")
    if any(not 1 <= x <= n - t for x in plan.star_sizes):
        raise BadPlan(f"star sizes must lie in [1, {n - t}]")
    if not is_shadow_disjoint(plan.core.masks):
        raise BadPlan("core members must be pairwise shadow-disjoint")


def star_construct(n: int, l: int, plan: StarPlan) -> FlatAntichain:
    """Core member A gets the stars A + {t+1}, ..., A + {t+|X(A)|}."""
    _check_plan(n, l, plan)
    upper = [int(A) | (1 << (plan.t + j)) for A, x in zip(plan.core.masks, plan.star_sizes)
             for j in range(x)]
    A = assemble_from_upper(n, l, Family(n, l + 1, upper, _trusted=True))
    assert A.size == comb(n, l) - plan.s - (l - 1) * plan.alpha
    return A


def small_target_range(n: int, l: int, t: int) -> tuple[int, int]:
    """Sizes reachable with core size up to the sum-class size at t."""
    sigma = sum_class_size(t, l)
    return comb(n, l) - (1 + (l - 1) * (n - t)) * (sigma - l + 2), comb(n, l) - (l - 1) ** 2 - 1


def solve_small_target(n: int, l: int, t: int, m: int) -> StarPlan:
    """Core size s and star total alpha with C(n, l) - s - (l-1) * alpha = m."""
    # l = 2 also accepts small t; the bound t >= l + 3 only serves to keep s >= 0
    if l < 2 or t > n - l or t <= l or (l > 2 and t < l + 3):
        raise OutOfSmallRange(f"t={t} not admissible for n={n}, l={l}")
    lo, hi = small_target_range(n, l, t)
    if not lo <= m <= hi:
        raise OutOfSmallRange(f"size {m} outside [{lo}, {hi}] for n={n}, l={l}, t={t}")
    x = comb(n, l) - m
    sigma = sum_class_size(t, l)
    cap = min(x // l, sigma)
    s = cap - (cap - x) % (l - 1) if l > 2 else cap
    alpha = (x - s) // (l - 1)
    assert 1 <= s <= alpha <= (n - t) * s
    base, extra = divmod(alpha, s)
    sizes = tuple(base + (i < extra) for i in range(s))
    core = Family(n, l, np.array(_sum_class(t, l)[:s], dtype=np.uint64), _trusted=True)
    return StarPlan(t, core, sizes)
