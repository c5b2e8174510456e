"""Three ways of turning maximal flat antichains on a smaller ground set into one on ``[n]``.

Inputs are trusted to be maximal; outputs are exactly as large as the
closed-form size predicts and maximal whenever the inputs are.
"""

from __future__ import annotations

import numpy as np

from . import _bitcube as cube
from .errors import GroundMismatch, LevelRange
from .setfam import Family
from .verify import FlatAntichain


def _level_masks(n: int, k: int) -> np.ndarray:
    if k < 0 or k > n:
        return np.zeros(0, dtype=np.uint64)
    return Family.level(n, k).masks


def _with(masks: np.ndarray, elems: int) -> np.ndarray:
    return np.asarray(masks, dtype=np.uint64) | np.uint64(elems)


def _family(n: int, card: int, parts) -> Family:
    """Family over [n] from (masks, added element mask) parts on disjoint blocks."""
    arrays = [_with(m, add) for m, add in parts if len(m)]
    if not arrays:
        return Family.empty(n, card)
    return Family(n, card, np.concatenate(arrays), _trusted=True)


def lift_add_isolated(A: FlatAntichain) -> FlatAntichain:
    """Keep ``A`` and add every l-set containing the new element n; size grows by C(n-1, l-1)."""
    n, l = A.n + 1, A.l
    if not 2 <= l <= n - 1:
        raise LevelRange(f"adding an isolated element needs 2 <= l <= n-1, got l={l}, n={n}")
    if n <= cube.MAX_N:
        lower = cube.join_halves(A.lower.bits, cube.level(n - 1, l - 1), n)
        upper = cube.join_halves(A.upper.bits, cube.empty(n - 1), n)
        return FlatAntichain(n, l, Family(n, l + 1, bits=upper, _trusted=True),
                             Family(n, l, bits=lower, _trusted=True))
    top = 1 << (n - 1)
    lower = _family(n, l, [(A.lower.masks, 0), (_level_masks(n - 1, l - 1), top)])
    upper = _family(n, l + 1, [(A.upper.masks, 0)])
    return FlatAntichain(n, l, upper, lower)


def lift_join_element(A: FlatAntichain) -> FlatAntichain:
    """Put n into every member of ``A`` (levels l-1, l over [n-1]) and add all (l+1)-subsets of [n-1]."""
    n, l = A.n + 1, A.l + 1
    if not 3 <= l <= n - 2:
        raise LevelRange(f"joining an element needs 3 <= l <= n-2, got l={l}, n={n}")
    if n <= cube.MAX_N:
        lower = cube.join_halves(cube.empty(n - 1), A.lower.bits, n)
        upper = cube.join_halves(cube.level(n - 1, l + 1), A.upper.bits, n)
        return FlatAntichain(n, l, Family(n, l + 1, bits=upper, _trusted=True),
                             Family(n, l, bits=lower, _trusted=True))
    top = 1 << (n - 1)
    lower = _family(n, l, [(A.lower.masks, top)])
    upper = _family(n, l + 1, [(_level_masks(n - 1, l + 1), 0), (A.upper.masks, top)])
    return FlatAntichain(n, l, upper, lower)


def lift_pair(A1: FlatAntichain, A2: FlatAntichain) -> FlatAntichain:
    """Combine two antichains on levels l-1, l over [n-2] into one on levels l, l+1 over [n].

    ``A1`` receives element n-1, ``A2`` element n; the l-sets containing both
    and the (l+1)-subsets of [n-2] complete the family. ``A1 is A2`` is fine.
    """
    if A1.n != A2.n:
        raise GroundMismatch(f"ground sets differ: {A1.n} vs {A2.n}")
    if A1.l != A2.l:
        raise GroundMismatch(f"levels differ: {A1.l} vs {A2.l}")
    n, l = A1.n + 2, A1.l + 1
    if not 3 <= l <= n - 3:
        raise LevelRange(f"pairing needs 3 <= l <= n-3, got l={l}, n={n}")
    if n <= cube.MAX_N:
        m = n - 2
        z = cube.empty(m)
        lower = cube.join_halves(
            cube.join_halves(z, A1.lower.bits, n - 1),
            cube.join_halves(A2.lower.bits, cube.level(m, l - 2), n - 1), n)
        upper = cube.join_halves(
            cube.join_halves(cube.level(m, l + 1), A1.upper.bits, n - 1),
            cube.join_halves(A2.upper.bits, z, n - 1), n)
        return FlatAntichain(n, l, Family(n, l + 1, bits=upper, _trusted=True),
                             Family(n, l, bits=lower, _trusted=True))
    a, b = 1 << (n - 2), 1 << (n - 1)
    lower = _family(n, l, [(A1.lower.masks, a), (A2.lower.masks, b),
                           (_level_masks(n - 2, l - 2), a | b)])
    upper = _family(n, l + 1, [(_level_masks(n - 2, l + 1), 0), (A1.upper.masks, a),
                               (A2.upper.masks, b)])
    return FlatAntichain(n, l, upper, lower)
