"""End-to-end acceptance checks, one marker per criterion.

The summary printed at the end of the run lists one PASS/FAIL line per criterion.
"""

import random
import re
from itertools import combinations
from math import ceil, comb
from pathlib import Path

import pytest

from flatmac.characterize import flat_conditions, is_flat_mac_size
from flatmac.errors import OutOfTheoremRange
from flatmac.lift import lift_add_isolated, lift_join_element, lift_pair
from flatmac.oracle import enumerate_flat_spectrum, enumerate_tgraph_spectrum
from flatmac.planner import (
    construct_in_level,
    construct_levels12,
    construct_main,
    interval_flat,
    interval_large,
    interval_level,
    replay,
    table_row,
    theorem_interval,
)
from flatmac.report import large_flat_table
from flatmac.setfam import Family, colex_prefix, is_squashed_maximal, kk_shadow_size, overlap_f
from flatmac.star import StarPlan, small_target_range, solve_small_target, star_construct
from flatmac.tgraph import (
    ForestComplementGraph,
    build_starter,
    deletion_sequence,
    istar_bound,
    phi,
    properly_label,
    tgraph_stats,
    tgraph_to_antichain,
)
from flatmac.verify import assemble_from_upper, check_maximal_flat

PAPER = Path(__file__).resolve().parents[1] / "paper.md"


def verified(A, m):
    r = check_maximal_flat(A)
    return r.is_maximal and r.size == m


def printed_table():
    """Rows of the tabulated intervals as printed: n -> [(lo, hi) or None per level 2, 3, 4]."""
    rows = {}
    for line in PAPER.read_text().splitlines():
        m = re.match(r"\s*\$(\d+)\$ & (.*)\\\\", line)
        if m and 8 <= int(m.group(1)) <= 14:
            cells = [c.strip() for c in m.group(2).split("&")]
            rows[int(m.group(1))] = [
                None if c == "--" else tuple(map(int, re.findall(r"\d+", c))) for c in cells]
    return rows


# -- 1 -------------------------------------------------------------------------

@pytest.mark.criterion(1, "tabulated intervals for n=8..14 reproduced and every size built")
def test_table_intervals_match_print():
    rows = printed_table()
    assert sorted(rows) == list(range(8, 15))
    for n, cells in rows.items():
        for l, cell in zip((2, 3, 4), cells):
            if cell is None:
                assert l > (n - 2) / 2
            else:
                assert table_row(n, l).as_tuple() == cell
    assert table_row(9, 3).as_tuple() == (73, 114) and table_row(12, 4).as_tuple() == (470, 768)
    text = "\n".join(large_flat_table())
    for n in range(8, 15):
        assert f"${n}$ & " in text


@pytest.mark.criterion(1, "tabulated intervals for n=8..14 reproduced and every size built")
@pytest.mark.parametrize("n", range(8, 15))
def test_table_sizes_constructible(n):
    for l, cell in zip((2, 3, 4), printed_table()[n]):
        if cell is None:
            continue
        for m in range(cell[0], cell[1] + 1):
            c = construct_in_level(n, l, m)
            assert c.antichain.l == l and verified(c.antichain, m), (n, l, m)


# -- 2 -------------------------------------------------------------------------

@pytest.mark.criterion(2, "n=15 level intervals and every size in [73,6395]")
def test_fifteen_intervals():
    printed = {2: (73, 371), 3: (365, 1299), 4: (1211, 2943), 5: (2887, 4960)}
    for l, iv in printed.items():
        assert interval_flat(15, l).as_tuple() == iv
    # the last interval is printed as [C(15,6)-199, C(15,7)-40] = [4860, 6395]; the
    # expression evaluates to 4806, which is what the formula gives
    assert comb(15, 6) - 199 == 4806 != 4860
    assert interval_flat(15, 6).as_tuple() == (comb(15, 6) - 199, comb(15, 7) - 40) == (4806, 6395)
    assert interval_flat(15, 6).lo <= 4860
    assert theorem_interval(15) == (73, 6395)
    covered = set()
    for l in range(2, 7):
        covered.update(interval_flat(15, l))
    assert set(range(73, 6396)) <= covered


@pytest.mark.criterion(2, "n=15 level intervals and every size in [73,6395]")
def test_fifteen_every_size():
    for m in range(73, 6396):
        c = construct_main(15, m)      # verifies internally, raising on failure
        assert c.antichain.size == m


# -- 3 -------------------------------------------------------------------------

@pytest.mark.criterion(3, "coding example size sequence and [63,79] for (9,3,6)")
def test_coding_example_sequence():
    core = [[1, 2, 3], [1, 4, 5], [2, 4, 6], [3, 5, 6]]
    rows = []
    for s in range(1, 5):
        row = []
        for alpha in range(s, 3 * s + 1):
            base, extra = divmod(alpha, s)
            sizes = tuple(base + (i < extra) for i in range(s))
            A = star_construct(9, 3, StarPlan(6, Family.of(9, core[:s], card=3), sizes))
            assert check_maximal_flat(A).is_maximal
            row.append(A.size)
        rows.append(row)
    assert rows == [[81, 79, 77], [78, 76, 74, 72, 70],
                    [75, 73, 71, 69, 67, 65, 63], [72, 70, 68, 66, 64, 62, 60, 58, 56]]


@pytest.mark.criterion(3, "coding example size sequence and [63,79] for (9,3,6)")
def test_coding_example_target_range():
    lo, hi = small_target_range(9, 3, 6)
    assert lo <= 63 and hi == 79
    for m in range(63, 80):
        assert verified(star_construct(9, 3, solve_small_target(9, 3, 6, m)), m)


# -- 4 -------------------------------------------------------------------------

@pytest.mark.criterion(4, "shift sequence of the 14-vertex starter")
def test_shift_sequence():
    G = ForestComplementGraph(14, ((13, 10), (12, 10), (11, 10), (10, 1), (9, 1), (8, 1)))
    assert tgraph_stats(G).comp_line_edges == 9
    offsets = []
    for t in range(12):
        H = deletion_sequence(G, t)
        A = tgraph_to_antichain(H)          # raises unless every edge lies in a triangle
        assert A.size == phi(H) and check_maximal_flat(A).is_maximal
        offsets.append(comb(14, 3) - phi(H))
    assert offsets == [57, 67, 76, 84, 91, 97, 102, 107, 111, 114, 116, 117]


# -- 5 -------------------------------------------------------------------------

@pytest.mark.criterion(5, "exhaustive spectra for (6,2) and (7,2)")
def test_oracle_ground_truth():
    s6 = enumerate_flat_spectrum(6, 2)
    assert s6.min == 9 and set(range(9, 16)) <= set(s6.sizes)
    s7 = enumerate_flat_spectrum(7, 2)
    assert s7.min == 13
    assert enumerate_tgraph_spectrum(6).sizes == s6.sizes
    assert enumerate_tgraph_spectrum(7).sizes == s7.sizes
    for n, spec in ((6, s6), (7, s7)):
        for m in interval_level(n, 2):
            c = construct_in_level(n, 2, m)
            assert verified(c.antichain, m) and m in spec


# -- 6 -------------------------------------------------------------------------

def coverage_targets(n, samples=10_000, seed=2026):
    lo, hi = theorem_interval(n)
    near = set()
    for l in range(2, (n - 2) // 2 + 1):
        I = interval_flat(n, l)
        for end in (I.lo, I.hi):
            near.update(m for m in range(end - 50, end + 51) if lo <= m <= hi)
    rng = random.Random(seed + n)
    return sorted(near) + [rng.randint(lo, hi) for _ in range(samples)]


@pytest.mark.criterion(6, "main-interval coverage for n=16..24")
@pytest.mark.parametrize("n", range(16, 25))
def test_theorem_coverage(n):
    failures = []
    for m in coverage_targets(n):
        try:
            c = construct_main(n, m)
        except Exception as exc:          # record and keep going so the count is exact
            failures.append((m, repr(exc)))
            continue
        if c.antichain.size != m:
            failures.append((m, "wrong size"))
    assert failures == []


# -- 7 -------------------------------------------------------------------------

def brute_shadow_size(sets):
    return len({s[:i] + s[i + 1:] for s in sets for i in range(len(s))})


@pytest.mark.criterion(7, "invariant suites")
@pytest.mark.parametrize("card", [2, 3, 4])
def test_kruskal_katona_exact(card):
    n = 12
    order = sorted(combinations(range(1, n + 1), card), key=lambda s: s[::-1])
    for t in range(1, comb(n, card) + 1):
        assert kk_shadow_size(t, card) == brute_shadow_size(order[:t])
    assert colex_prefix(comb(n, card), card, n).sets() == [list(s) for s in order]


@pytest.mark.criterion(7, "invariant suites")
def test_lift_invariants_over_catalog():
    catalog = [assemble_from_upper(n, l, colex_prefix(t, l + 1, n))
               for n, l in ((7, 2), (8, 2), (8, 3), (9, 3))
               for t in range(comb(n, l + 1) + 1) if is_squashed_maximal(n, l, t)]
    assert len(catalog) >= 50
    for A in catalog:
        n = A.n + 1
        B = lift_add_isolated(A)
        assert B.size == A.size + comb(n - 1, A.l - 1) and check_maximal_flat(B).is_maximal
        if A.l + 1 <= n - 2:
            C = lift_join_element(A)
            assert C.size == A.size + comb(n - 1, A.l + 2) and check_maximal_flat(C).is_maximal
    pairs = [A for A in catalog if (A.n, A.l) == (8, 2)]
    rng = random.Random(0)
    for _ in range(50):
        A1, A2 = rng.choice(pairs), rng.choice(pairs)
        D = lift_pair(A1, A2)
        assert D.size == A1.size + A2.size + comb(8, 4) + comb(8, 1)
        assert check_maximal_flat(D).is_maximal


@pytest.mark.criterion(7, "invariant suites")
def test_overlap_and_aux_inequality_sweeps():
    for n in range(9, 31):
        for l in range(3, n):
            if n >= 2 * l + 3 and (l >= 5 or n >= 15):
                assert interval_flat(n, l).lo <= interval_flat(n, l - 1).hi + 1
    for n in range(11, 41):
        for l in range(3, n):
            if (l == 3 and n >= 11) or (l >= 4 and n >= 2 * l + 3):
                assert comb(n - 2, l) - comb(n - 2, l - 1) >= (n - l - 2) * (n - l)


@pytest.mark.criterion(7, "invariant suites")
def test_starter_invariants():
    for n in range(6, 21):
        assert istar_bound(n) >= overlap_f(n - 2)
        for i in range(overlap_f(n - 2) + 1):
            G = build_starter(n, i)
            st = tgraph_stats(G)
            assert G.is_forest() and len(G.comp_edges) == ceil((n - 2) / 2)
            assert st.comp_line_edges == i and st.comp_triangles == 0
            P = properly_label(G)
            A = tgraph_to_antichain(P)
            assert A.size == phi(G) and check_maximal_flat(A).is_maximal


@pytest.mark.criterion(7, "invariant suites")
def test_replay_determinism():
    rng = random.Random(7)
    for n in range(6, 21):
        lo, hi = theorem_interval(n)
        for m in (rng.randint(lo, hi) for _ in range(10)):
            c = construct_main(n, m)
            assert replay(c.trace) == c.antichain


# -- 8 -------------------------------------------------------------------------

@pytest.mark.criterion(8, "minimum-size endpoints for n=8..20")
@pytest.mark.parametrize("n", range(8, 21))
def test_minimum_endpoint(n):
    low = comb(n, 2) - (n + 1) ** 2 // 8
    assert theorem_interval(n)[0] == low
    assert verified(construct_main(n, low).antichain, low)
    if flat_conditions(n, low - 1)[2]:
        # one below the minimum is a levels-1-2 size exactly in the square cases
        c = construct_main(n, low - 1)
        assert c.antichain.l == 1 and verified(c.antichain, low - 1)
        assert n in (8, 9)
    else:
        assert not is_flat_mac_size(n, low - 1)
        with pytest.raises(OutOfTheoremRange):
            construct_main(n, low - 1)


@pytest.mark.criterion(8, "minimum-size endpoints for n=8..20")
def test_square_case_thirty_three():
    low = comb(33, 2) - 34 ** 2 // 8
    A = construct_levels12(33, 28)
    assert A.size == low - 1 == 383 and check_maximal_flat(A).is_maximal
    assert is_flat_mac_size(33, low - 1)
