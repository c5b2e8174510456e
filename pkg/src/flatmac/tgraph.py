"""Maximal flat antichains on levels 2 and 3 from T-graphs.

A graph G on [n] in which every edge lies in a triangle gives a maximal
antichain: its triangles as 3-sets plus its non-edges as 2-sets. Graphs are
stored by their complement edge list, which stays small for the dense graphs
used here.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import ceil, comb
from typing import Optional

import numpy as np

from .errors import (
    NotProperlyLabeled,
    NotTGraph,
    OutOfBaseInterval,
    OutOfTopRow,
    StarterIndexOutOfRange,
    TooManyDeletions,
)
from .lift import lift_add_isolated
from .setfam import Family, mask_of, overlap_f
from .trace import TraceStep
from .verify import FlatAntichain, assemble_from_upper

Edge = tuple[int, int]


def _edge(a: int, b: int) -> Edge:
    return (a, b) if a > b else (b, a)


@dataclass(frozen=True)
class ForestComplementGraph:
    """Graph on [n] given by the edges of its complement, each stored as (larger, smaller), sorted."""

    n: int
    comp_edges: tuple[Edge, ...]

    def __post_init__(self):
        seen = set()
        out = []
        for a, b in self.comp_edges:
            e = _edge(a, b)
            if e[1] < 1 or e[0] > self.n or e[0] == e[1]:
                raise ValueError(f"edge {e} is not a pair within [{self.n}]")
            if e in seen:
                raise ValueError(f"duplicate complement edge {e}")
            seen.add(e)
            out.append(e)
        object.__setattr__(self, "comp_edges", tuple(sorted(out)))

    @classmethod
    def from_edges(cls, n: int, edges) -> "ForestComplementGraph":
        """From the edges of G itself."""
        have = {_edge(a, b) for a, b in edges}
        comp = [e for e in ((b, a) for a, b in combinations(range(1, n + 1), 2)) if e not in have]
        return cls(n, tuple(comp))

    def degrees(self) -> list[int]:
        """Complement degrees, index 0 unused."""
        deg = [0] * (self.n + 1)
        for a, b in self.comp_edges:
            deg[a] += 1
            deg[b] += 1
        return deg

    def adjacency(self) -> list[set[int]]:
        adj = [set() for _ in range(self.n + 1)]
        for a, b in self.comp_edges:
            adj[a].add(b)
            adj[b].add(a)
        return adj

    def is_forest(self) -> bool:
        parent = list(range(self.n + 1))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in self.comp_edges:
            ra, rb = find(a), find(b)
            if ra == rb:
                return False
            parent[ra] = rb
        return True

    def is_starter(self) -> bool:
        return len(self.comp_edges) == ceil((self.n - 2) / 2) and self.is_forest()

    def relabel(self, perm: dict[int, int]) -> "ForestComplementGraph":
        return ForestComplementGraph(self.n, tuple(_edge(perm[a], perm[b])
                                                   for a, b in self.comp_edges))


@dataclass(frozen=True)
class TGraphStats:
    edges: int
    triangles: int
    comp_line_edges: int
    comp_triangles: int


def _triangles(n: int, adj_missing: list[set[int]]) -> int:
    return sum(1 for a, b, c in combinations(range(1, n + 1), 3)
               if b not in adj_missing[a] and c not in adj_missing[a] and c not in adj_missing[b])


def tgraph_stats(G: ForestComplementGraph) -> TGraphStats:
    """Edge and triangle counts of G and its complement; t(G) is counted directly."""
    adj = G.adjacency()
    line = sum(comb(d, 2) for d in G.degrees())
    comp_tri = sum(1 for a, b in G.comp_edges for c in adj[a] & adj[b] if c > a)
    return TGraphStats(
        edges=comb(G.n, 2) - len(G.comp_edges),
        triangles=_triangles(G.n, adj),
        comp_line_edges=line,
        comp_triangles=comp_tri,
    )


def phi(G: ForestComplementGraph) -> int:
    """Inclusion-exclusion size t(G) + e(complement); the antichain size when G is a T-graph."""
    adj = G.adjacency()
    line = sum(comb(d, 2) for d in G.degrees())
    comp_tri = sum(1 for a, b in G.comp_edges for c in adj[a] & adj[b] if c > a)
    e = len(G.comp_edges)
    return comb(G.n, 3) - (G.n - 3) * e + line - comp_tri


def tgraph_to_antichain(G: ForestComplementGraph) -> FlatAntichain:
    """Triangles of G as 3-sets, non-edges as 2-sets."""
    n = G.n
    triples = Family.level(n, 3).masks
    keep = np.ones(len(triples), dtype=bool)
    for a, b in G.comp_edges:
        e = np.uint64(mask_of((a, b)))
        keep &= (triples & e) != e
    upper = Family(n, 3, triples[keep], _trusted=True)
    A = assemble_from_upper(n, 2, upper)
    comp = Family(n, 2, [mask_of(e) for e in G.comp_edges])
    if A.lower != comp:
        # some edge of G is in no triangle; report the colex-least one
        bad = int(A.lower.difference(comp).masks[0])
        a, b = (i + 1 for i in range(n) if bad >> i & 1)
        raise NotTGraph((b, a))
    return A


# ---------------------------------------------------------------- starters


def istar_bound(n: int) -> int:
    """Largest starter index realized by the catalog below."""
    if n < 3:
        raise StarterIndexOutOfRange(f"starters need n >= 3, got {n}")
    small = {3: 0, 4: 0, 5: 1, 6: 1, 7: 3, 8: 3, 9: 4, 10: 4, 11: 7, 12: 7}
    if n in small:
        return small[n]
    return n - 2 if n % 2 else n - 3


def _matching(n: int) -> list[Edge]:
    return [_edge(n - j, j) for j in range(1, ceil((n - 2) / 2) + 1)]


def _extend(n0: int, edges: list[Edge], t: int) -> tuple[int, list[Edge]]:
    """Hang t new leaves on the smallest leaf and add t isolated vertices; e(L) grows by C(t+1, 2)."""
    deg = {}
    for a, b in edges:
        deg[a] = deg.get(a, 0) + 1
        deg[b] = deg.get(b, 0) + 1
    leaf = min(v for v, d in deg.items() if d == 1)
    return n0 + 2 * t, edges + [_edge(n0 + j, leaf) for j in range(1, t + 1)]


def _catalog(n: int, i: int) -> list[Edge]:
    if n % 2 == 0:
        return _catalog(n - 1, i)
    if i == 0:
        return _matching(n)

    def ext(n0, i0, t):
        m, edges = _extend(n0, _catalog(n0, i0), t)
        assert m == n
        return edges

    if n == 5:
        return ext(3, 0, 1)
    if n == 7:
        return ext(5, i - 1, 1) if i <= 2 else [(2, 1), (3, 1), (4, 1)]
    if n == 9:
        return ext(7, i - 1, 1)
    if n == 11:
        if i <= 2:
            return ext(9, i - 1, 1)
        if i <= 6:
            return ext(7, i - 3, 2)
        return [(2, 1), (3, 1), (4, 1), (5, 1), (6, 5)]
    if n == 13:
        if i <= 5:
            return ext(11, i - 1, 1)
        if i <= 9:
            return ext(7, i - 6, 3)
        return ext(5, i - 10, 4)
    if n == 15:
        return ext(13, i - 1, 1) if i <= 9 else ext(7, i - 10, 4)
    if n == 17:
        if i <= 9:
            return ext(15, i - 1, 1)
        if i <= 14:
            return ext(9, i - 10, 4)
        return ext(7, 0, 5)
    return ext(n - 2, i - 1, 1) if i <= 5 else ext(n - 6, i - 6, 3)


def build_starter(n: int, i: int) -> ForestComplementGraph:
    """A starter whose complement forest has exactly ``i`` pairs of adjacent edges."""
    if n < 3 or not 0 <= i <= istar_bound(n):
        bound = istar_bound(n) if n >= 3 else 0
        raise StarterIndexOutOfRange(f"starter index {i} outside [0, {bound}] for n={n}")
    return ForestComplementGraph(n, tuple(_catalog(n, i)))


def is_properly_labeled(G: ForestComplementGraph) -> bool:
    """Complement edges are exactly {n-j, b_j}, j = 1..E, with b_j < n-j."""
    n = G.n
    E = ceil((n - 2) / 2)
    big = sorted((a for a, _ in G.comp_edges), reverse=True)
    return len(G.comp_edges) == E and big == [n - j for j in range(1, E + 1)]


def properly_label(G: ForestComplementGraph) -> ForestComplementGraph:
    """Relabel so n is isolated and n-1, n-2, ... are peeled leaves of the complement forest."""
    n = G.n
    if not G.is_forest():
        raise NotProperlyLabeled("complement is not a forest")
    adj = G.adjacency()
    isolated = [v for v in range(1, n + 1) if not adj[v]]
    if not isolated:
        raise NotProperlyLabeled("complement forest has no isolated vertex")
    perm = {isolated[-1]: n}
    label = n - 1
    while any(adj[v] for v in range(1, n + 1)):
        leaf = max(v for v in range(1, n + 1) if len(adj[v]) == 1)
        (other,) = adj[leaf]
        adj[leaf].clear()
        adj[other].discard(leaf)
        perm[leaf] = label
        label -= 1
    low = 1
    for v in range(1, n + 1):
        if v not in perm:
            perm[v] = low
            low += 1
    return G.relabel(perm)


def alpha(n: int, j: int) -> int:
    """Size drop when the j-th edge {n, n-j} is deleted from a properly labeled starter."""
    return n - j - 3 if j <= ceil((n - 2) / 2) else n - j - 2


def deletion_sequence(G0: ForestComplementGraph, t: int) -> ForestComplementGraph:
    """Remove the edges {n, n-1}, ..., {n, n-t} from G0."""
    n = G0.n
    if not 0 <= t <= n - 3:
        raise TooManyDeletions(f"t={t} outside [0, {n - 3}]")
    if not is_properly_labeled(G0):
        raise NotProperlyLabeled("starter must be properly labeled")
    extra = tuple(_edge(n, n - j) for j in range(1, t + 1))
    return ForestComplementGraph(n, G0.comp_edges + extra)


# ---------------------------------------------------------------- constructions


def top_row_range(n: int) -> tuple[int, int]:
    E = ceil((n - 2) / 2)
    lo = comb(n, 3) - comb(n - 2, 2) - (n - 4) * E
    hi = comb(n, 3) - (n - 3) * E + istar_bound(n)
    return lo, hi


def top_row_graph(n: int, m: int) -> ForestComplementGraph:
    """The T-graph whose antichain has size m."""
    if n < 6:
        raise OutOfTopRow(f"top row construction needs n >= 6, got {n}")
    lo, hi = top_row_range(n)
    if not lo <= m <= hi:
        raise OutOfTopRow(f"size {m} outside [{lo}, {hi}] for n={n}")
    if (n, m) == (10, 91):
        return ForestComplementGraph(10, ((10, 9), (2, 1), (3, 1), (4, 1), (5, 1)))
    m0 = comb(n, 3) - (n - 3) * ceil((n - 2) / 2)
    t, drop = 0, 0
    while m0 - drop > m:
        t += 1
        drop += alpha(n, t)
    i = m - m0 + drop
    return deletion_sequence(properly_label(build_starter(n, i)), t)


def top_row_construct(n: int, m: int) -> FlatAntichain:
    A = tgraph_to_antichain(top_row_graph(n, m))
    assert A.size == m
    return A


def base_case_range(n: int) -> tuple[int, int]:
    return comb(n, 2) - 6, comb(n, 3) - (n - 3) * ceil((n - 2) / 2) + overlap_f(n - 2)


_SIX_NINE = ((1, 2, 5), (1, 2, 6), (3, 4, 5), (3, 4, 6))


def six_nine() -> FlatAntichain:
    """The size-9 antichain on [6] made of four triples."""
    return assemble_from_upper(6, 2, Family.of(6, _SIX_NINE))


def base_case_construct(n: int, m: int, steps: Optional[list] = None) -> FlatAntichain:
    """Any size in the l = 2 interval; appends trace steps to ``steps`` if given."""
    if n < 6:
        raise OutOfBaseInterval(f"base case needs n >= 6, got {n}")
    lo, hi = base_case_range(n)
    if not lo <= m <= hi:
        raise OutOfBaseInterval(f"size {m} outside [{lo}, {hi}] for n={n}")
    if (n, m) == (6, 9):
        if steps is not None:
            steps.append(TraceStep("base", {"n": 6, "m": 9}))
        return six_nine()
    if m >= top_row_range(n)[0]:
        if steps is not None:
            steps.append(TraceStep("topRow", {"n": n, "m": m}))
        return top_row_construct(n, m)
    A = lift_add_isolated(base_case_construct(n - 1, m - (n - 1), steps))
    if steps is not None:
        steps.append(TraceStep("lift1", {}))
    return A
