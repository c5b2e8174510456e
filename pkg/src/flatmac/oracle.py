"""Exhaustive size spectra of flat maximal antichains for tiny ground sets.

Nothing here uses the constructions; the sweeps rely only on the fact that a
flat antichain F + (level l minus shadow F) is maximal exactly when every
(l+1)-set outside F has an l-subset outside shadow F.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from math import comb

import numpy as np
from numba import njit

from .errors import SearchTooLarge

MAX_BITS = 24
MAX_TGRAPH_N = 8


@dataclass(frozen=True)
class SpectrumResult:
    n: int
    l: int
    sizes: tuple[int, ...]
    count_explored: int

    def __contains__(self, m: int) -> bool:
        return m in set(self.sizes)

    @property
    def min(self) -> int:
        return self.sizes[0]

    @property
    def max(self) -> int:
        return self.sizes[-1]


def _shadow_index_masks(n: int, l: int) -> np.ndarray:
    """For each (l+1)-set, the bitmask of the indices of its l-subsets within level l."""
    lower = {c: i for i, c in enumerate(combinations(range(n), l))}
    out = []
    for c in combinations(range(n), l + 1):
        m = 0
        for drop in range(l + 1):
            m |= 1 << lower[c[:drop] + c[drop + 1:]]
        out.append(m)
    return np.array(out, dtype=np.uint64)


@njit(cache=True)
def _sweep_down(shadows, n_lower, start, stop, seen):
    for D in range(start, stop):
        d = np.uint64(D)
        covered = np.uint64(0)
        f = 0
        for s in shadows:
            if s & d == s:
                f += 1
                covered |= s
        pc = 0
        while covered:
            covered &= covered - np.uint64(1)
            pc += 1
        seen[f + n_lower - pc] = True


@njit(cache=True)
def _sweep_up(shadows, n_lower, start, stop, seen):
    nu = shadows.shape[0]
    for F in range(start, stop):
        covered = np.uint64(0)
        f = 0
        for j in range(nu):
            if (F >> j) & 1:
                f += 1
                covered |= shadows[j]
        ok = True
        for j in range(nu):
            if not (F >> j) & 1 and shadows[j] & covered == shadows[j]:
                ok = False
                break
        if ok:
            pc = 0
            c = covered
            while c:
                c &= c - np.uint64(1)
                pc += 1
            seen[f + n_lower - pc] = True


def _blocks(bits: int):
    """Index ranges split by the top 8 bits of the index."""
    nblk = 1 << min(8, bits)
    step = (1 << bits) // nblk
    return [(i * step, (i + 1) * step) for i in range(nblk)]


def _run_block(args):
    kind, shadows, n_lower, start, stop, width = args
    seen = np.zeros(width, dtype=np.bool_)
    (_sweep_down if kind == "down" else _sweep_up)(shadows, n_lower, start, stop, seen)
    return seen


def _sweep(kind: str, shadows, n_lower: int, bits: int, workers: int) -> np.ndarray:
    width = len(shadows) + n_lower + 1
    jobs = [(kind, shadows, n_lower, a, b, width) for a, b in _blocks(bits)]
    seen = np.zeros(width, dtype=np.bool_)
    if workers > 1:
        with ProcessPoolExecutor(workers) as ex:
            for part in ex.map(_run_block, jobs):
                seen |= part
    else:
        for job in jobs:
            seen |= _run_block(job)
    return seen


def enumerate_flat_spectrum(n: int, l: int, workers: int = 1) -> SpectrumResult:
    """All sizes of maximal antichains on levels (l, l+1) over [n], by sweeping every D within level l.

    D determines F(D), the (l+1)-sets whose whole shadow lies in D; the
    resulting antichain is always maximal, and every maximal one arises from
    D = shadow of its upper part.
    """
    bits = comb(n, l)
    if bits > MAX_BITS:
        raise SearchTooLarge(f"C({n},{l}) = {bits} exceeds {MAX_BITS}")
    if l + 1 > n:
        raise SearchTooLarge(f"level {l + 1} does not exist in [{n}]")
    seen = _sweep("down", _shadow_index_masks(n, l), bits, bits, workers)
    return SpectrumResult(n, l, tuple(int(i) for i in np.flatnonzero(seen)), 1 << bits)


def enumerate_flat_spectrum_by_upper(n: int, l: int, workers: int = 1) -> SpectrumResult:
    """Same spectrum, sweeping every upper family F and keeping the maximal ones."""
    bits = comb(n, l + 1)
    if bits > MAX_BITS:
        raise SearchTooLarge(f"C({n},{l + 1}) = {bits} exceeds {MAX_BITS}")
    if comb(n, l) > 63:
        raise SearchTooLarge("lower level too wide for the shadow masks")
    seen = _sweep("up", _shadow_index_masks(n, l), comb(n, l), bits, workers)
    return SpectrumResult(n, l, tuple(int(i) for i in np.flatnonzero(seen)), 1 << bits)


@njit(cache=True)
def _sweep_graphs(tri, n_edges, stop, seen):
    for g in range(stop):
        gg = np.uint64(g)
        covered = np.uint64(0)
        nt = 0
        for t in tri:
            if t & gg == t:
                covered |= t
                nt += 1
        if covered == gg:
            pc = 0
            c = gg
            while c:
                c &= c - np.uint64(1)
                pc += 1
            seen[nt + n_edges - pc] = True


def enumerate_tgraph_spectrum(n: int) -> SpectrumResult:
    """Sizes t(G) + e(complement of G) over all graphs G on [n] with every edge in a triangle."""
    if n > MAX_TGRAPH_N:
        raise SearchTooLarge(f"n={n} exceeds {MAX_TGRAPH_N}")
    edges = {e: i for i, e in enumerate(combinations(range(n), 2))}
    tri = np.array([(1 << edges[(a, b)]) | (1 << edges[(a, c)]) | (1 << edges[(b, c)])
                    for a, b, c in combinations(range(n), 3)], dtype=np.uint64)
    ne = len(edges)
    seen = np.zeros(len(tri) + ne + 1, dtype=np.bool_)
    _sweep_graphs(tri, ne, 1 << ne, seen)
    return SpectrumResult(n, 2, tuple(int(i) for i in np.flatnonzero(seen)), 1 << ne)


def enumerate_flat_sizes_small_upper(n: int, l: int, max_upper: int) -> SpectrumResult:
    """Sizes of maximal antichains on levels (l, l+1) whose upper part has at most ``max_upper`` sets.

    A partial spectrum for levels too wide for the full sweep.
    """
    shadows = [int(x) for x in _shadow_index_masks(n, l)]
    nu, nl = len(shadows), comb(n, l)
    if nl > 63:
        raise SearchTooLarge("lower level too wide for the shadow masks")
    explored = sum(comb(nu, r) for r in range(max_upper + 1))
    if explored > 1 << MAX_BITS:
        raise SearchTooLarge(f"{explored} upper families exceed the search budget")
    sizes = set()
    for r in range(max_upper + 1):
        for F in combinations(range(nu), r):
            covered = 0
            for j in F:
                covered |= shadows[j]
            chosen = set(F)
            if all(j in chosen or shadows[j] & ~covered for j in range(nu)):
                sizes.add(r + nl - covered.bit_count())
    return SpectrumResult(n, l, tuple(sorted(sizes)), explored)
