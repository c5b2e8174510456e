from functools import cmp_to_key
from itertools import combinations
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from flatmac.errors import CountOutOfRange, EmptyCardinality, FullCardinality, ZeroHasNoCascade
from flatmac.setfam import (
    Family,
    cascade_representation,
    catalan_prefix_sum,
    colex_prefix,
    is_squashed_maximal,
    kk_shadow_size,
    overlap_f,
    shade,
    shadow,
    squashed_size,
)


# -- independent oracles -------------------------------------------------------

def colex_cmp(a, b):
    """A before B iff the largest element of the symmetric difference lies in B."""
    d = set(a) ^ set(b)
    if not d:
        return 0
    return -1 if max(d) in b else 1


def brute_colex(t, card, n):
    sets = sorted(combinations(range(1, n + 1), card), key=cmp_to_key(colex_cmp))
    return [list(s) for s in sets[:t]]


def brute_shadow(sets):
    return {tuple(x for x in s if x != e) for s in sets for e in s}


def brute_shade(sets, n):
    return {tuple(sorted(set(s) | {e})) for s in sets for e in range(1, n + 1) if e not in s}


# -- shadow / shade ------------------------------------------------------------

def test_shadow_of_empty_set_rejected():
    with pytest.raises(EmptyCardinality):
        shadow(Family.of(4, [[]]))


def test_shadow_single_triple():
    assert shadow(Family.of(5, [[1, 2, 3]])).sets() == [[1, 2], [1, 3], [2, 3]]


def test_shadow_of_colex_prefix_of_14_triples():
    F = colex_prefix(14, 3, 8)
    expected = brute_shadow([tuple(s) for s in brute_colex(14, 3, 8)])
    assert {tuple(s) for s in shadow(F).sets()} == expected
    assert len(expected) == 14


def test_shade_examples():
    assert shade(Family.of(4, [[1, 2]])).sets() == [[1, 2, 3], [1, 2, 4]]
    assert len(shade(Family.empty(4, 2))) == 0
    assert shade(Family.level(5, 2)) == Family.level(5, 3)


def test_shade_of_full_level_rejected():
    with pytest.raises(FullCardinality):
        shade(Family.level(4, 4))


@settings(max_examples=60, deadline=None)
@given(st.integers(4, 9).flatmap(lambda n: st.tuples(
    st.just(n), st.integers(1, n - 1).flatmap(lambda k: st.tuples(
        st.just(k), st.sets(st.sampled_from(list(combinations(range(1, n + 1), k))), max_size=12))))))
def test_shadow_and_shade_match_brute_force(args):
    n, (k, sets) = args
    F = Family.of(n, sets, card=k)
    assert {tuple(s) for s in shadow(F).sets()} == brute_shadow(sets)
    assert {tuple(s) for s in shade(F).sets()} == brute_shade(sets, n)


@settings(max_examples=40, deadline=None)
@given(st.integers(4, 9).flatmap(lambda n: st.tuples(
    st.just(n), st.integers(2, n - 1).flatmap(lambda k: st.tuples(
        st.just(k), st.sets(st.sampled_from(list(combinations(range(1, n + 1), k))),
                            min_size=1, max_size=10))))))
def test_closure_monotonicity(args):
    n, (k, sets) = args
    F = Family.of(n, sets, card=k)
    assert F.difference(shadow(shade(F))).masks.size == 0
    assert F.difference(shade(shadow(F))).masks.size == 0


def test_sparse_and_bitset_shadow_agree_above_bitset_limit():
    F = Family.of(30, [[1, 2, 3, 30], [5, 9, 29, 30]])
    assert {tuple(s) for s in shadow(F).sets()} == brute_shadow([(1, 2, 3, 30), (5, 9, 29, 30)])
    assert len(shade(F)) == len(brute_shade([(1, 2, 3, 30), (5, 9, 29, 30)], 30))


# -- colex prefixes ------------------------------------------------------------

def test_colex_prefix_examples():
    assert colex_prefix(1, 3, 6).sets() == [[1, 2, 3]]
    assert colex_prefix(4, 3, 6).sets() == [[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]]
    assert len(shadow(colex_prefix(6, 3, 13))) == 9


def test_colex_prefix_out_of_range():
    with pytest.raises(CountOutOfRange):
        colex_prefix(21, 3, 6)


@pytest.mark.parametrize("card", [1, 2, 3, 4])
def test_colex_prefix_matches_comparison_sort(card):
    n = 8
    assert colex_prefix(comb(n, card), card, n).sets() == brute_colex(comb(n, card), card, n)


def test_colex_prefix_extends_by_one_larger_set():
    prev = []
    for t in range(1, comb(7, 3) + 1):
        cur = colex_prefix(t, 3, 7).sets()
        assert cur[:-1] == prev
        assert all(colex_cmp(p, cur[-1]) < 0 for p in prev)
        prev = cur


# -- cascades and Kruskal-Katona -----------------------------------------------

@pytest.mark.parametrize("t,card,terms", [
    (10, 3, [(5, 3)]),
    (14, 3, [(5, 3), (3, 2), (1, 1)]),
    (1, 3, [(3, 3)]),
])
def test_cascade_examples(t, card, terms):
    assert list(cascade_representation(t, card).terms) == terms


def test_cascade_of_zero_rejected():
    with pytest.raises(ZeroHasNoCascade):
        cascade_representation(0, 3)


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 5000), st.integers(1, 7))
def test_cascade_round_trip_and_strict_decrease(t, card):
    rep = cascade_representation(t, card)
    assert rep.value() == t
    tops = [a for a, _ in rep.terms]
    idx = [j for _, j in rep.terms]
    assert idx[0] == card
    assert all(x > y for x, y in zip(tops, tops[1:]))
    assert all(x > y for x, y in zip(idx, idx[1:]))
    assert tops[-1] >= idx[-1] >= 1


@pytest.mark.parametrize("t,card,size", [(10, 3, 10), (14, 3, 14), (1, 3, 3)])
def test_kk_shadow_size_examples(t, card, size):
    assert kk_shadow_size(t, card) == size


@pytest.mark.parametrize("card", [2, 3, 4])
def test_kk_formula_matches_brute_force_shadow_n12(card):
    n = 12
    order = brute_colex(comb(n, card), card, n)
    sh = set()
    for t, s in enumerate(order, start=1):
        sh |= {tuple(x for x in s if x != e) for e in s}
        assert kk_shadow_size(t, card) == len(sh)


# -- size functions ------------------------------------------------------------

def test_squashed_size_examples():
    assert squashed_size(13, 2, 0) == 78
    assert squashed_size(13, 2, 6) == 75 == comb(13, 2) - catalan_prefix_sum(2)
    assert squashed_size(13, 2, comb(13, 3)) == 286


@pytest.mark.parametrize("n,l", [(9, 2), (10, 3), (11, 4), (13, 2)])
def test_squashed_minimum_is_level_minus_catalan_sum(n, l):
    sizes = [squashed_size(n, l, t) for t in range(comb(n, l + 1) + 1)]
    assert min(sizes) >= comb(n, l) - catalan_prefix_sum(l)


def test_squashed_maximality_matches_direct_check():
    from flatmac.verify import assemble_from_upper, check_maximal_flat

    n, l = 8, 2
    for t in range(comb(n, l + 1) + 1):
        A = assemble_from_upper(n, l, colex_prefix(t, l + 1, n))
        assert check_maximal_flat(A).is_maximal == is_squashed_maximal(n, l, t)
        assert A.size == squashed_size(n, l, t)


def test_catalan_prefix_sums():
    assert [catalan_prefix_sum(l) for l in (2, 3, 4)] == [3, 8, 22]
    assert comb(9, 3) - 3 - catalan_prefix_sum(3) == 73
    assert comb(10, 4) - 3 - catalan_prefix_sum(4) == 185


def test_overlap_f_printed_values():
    assert [overlap_f(t) for t in range(11)] == [0, 0, 0, 1, 1, 3, 3, 4, 4, 7, 7]
    assert overlap_f(5) == 3
    assert overlap_f(11) == 10
    assert overlap_f(2) == 0
    assert overlap_f(40) == 39
