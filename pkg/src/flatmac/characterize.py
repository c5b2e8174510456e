"""Closed-form membership tests for sizes of maximal antichains."""

from __future__ import annotations

from math import ceil, comb

from .errors import NotNearTop, SizeRange


def _quadruple_offsets(t_max: int):
    """All values C(a,2) + C(b,2) + c with a >= b >= c >= 0 and a + b <= t, keyed by minimal t."""
    for t in range(t_max + 1):
        for a in range(t + 1):
            for b in range(min(a, t - a) + 1):
                for c in range(b + 1):
                    yield t, a, b, comb(a, 2) + comb(b, 2) + c


def quadruple_form(n: int, m: int) -> bool:
    """m = C(n,k) - t*l + C(a,2) + C(b,2) + c with l in {k, n-k}, t <= k, a >= b >= c >= 0, a + b <= t."""
    k = ceil(n / 2)
    top = comb(n, k)
    for l in {k, n - k}:
        for t, _, _, v in _quadruple_offsets(k):
            if top - t * l + v == m:
                return True
    return False


def levels12_form(n: int, m: int) -> bool:
    """m = C(t,2) + n - t for some t in 0..n (singletons outside [t], pairs inside)."""
    return any(comb(t, 2) + n - t == m for t in range(n + 1))


def _check_size(n: int, m: int) -> int:
    k = ceil(n / 2)
    if not 1 <= m <= comb(n, k):
        raise SizeRange(f"size {m} outside [1, {comb(n, k)}] for n={n}")
    return k


def is_mac_size(n: int, m: int) -> bool:
    """Whether some maximal antichain in the n-cube has exactly m members."""
    k = _check_size(n, m)
    return m <= comb(n, k) - k * ceil((k + 1) / 2) or quadruple_form(n, m)


def flat_conditions(n: int, m: int) -> tuple[bool, bool, bool]:
    """The three alternative conditions for a flat maximal antichain of size m."""
    k = _check_size(n, m)
    main = comb(n, 2) - (n + 1) ** 2 // 8 <= m <= comb(n, k) - k * ceil((k + 1) / 2)
    return main, quadruple_form(n, m), levels12_form(n, m)


def is_flat_mac_size(n: int, m: int) -> bool:
    """Whether some maximal antichain on two consecutive levels has exactly m members."""
    return any(flat_conditions(n, m))


def near_top_window(n: int, l: int) -> tuple[int, int]:
    """Open window of sizes above the guaranteed interval on levels (l, l+1)."""
    return comb(n, l + 1) - (n - l - 1) * ceil((n - l) / 2), comb(n, l + 1)


def near_top_gap_form(n: int, l: int, m: int) -> bool:
    """m = C(n,l+1) - t(n-l-1) + C(a,2) + C(b,2) + c, t in 1..n-l+1, a >= b >= c >= 0, 1 <= a+b <= t.

    Necessary for m in the window to be a size on levels (l, l+1); known to be
    sufficient only for l >= 4.
    """
    lo, hi = near_top_window(n, l)
    if not lo < m < hi:
        raise NotNearTop(f"size {m} outside the open window ({lo}, {hi}) for n={n}, l={l}")
    for t, a, b, v in _quadruple_offsets(n - l + 1):
        if t >= 1 and a + b >= 1 and hi - t * (n - l - 1) + v == m:
            return True
    return False
