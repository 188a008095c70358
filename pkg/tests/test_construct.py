import math

import pytest
from hypothesis import given, settings, strategies as st

from tangles.construct import (ConstructionError, block_family, build, c_gadget, claimed_bounds, fish,
                               greedy_bubble, greedy_oddeven, linear_total, log_tangle, quarter_sizes,
                               split_body, three_move_family)
from tangles.perm import direct_sum, identity, inversions, reverse

from .conftest import all_perms


def split_perms(a, b):
    return [direct_sum(p, q) for p in all_perms(a) for q in all_perms(b)]


@st.composite
def big_perms(draw, lo=1, hi=60):
    n = draw(st.integers(lo, hi))
    return tuple(draw(st.permutations(list(range(1, n + 1)))))


@pytest.mark.parametrize("m", range(1, 5))
def test_split_body(m):
    for p in split_perms(m, m):
        T = split_body(p)
        assert T.performs == p
        assert T.max_moves <= 4


def test_split_body_rejects_unsplit():
    with pytest.raises(ConstructionError):
        split_body((3, 1, 2, 4))
    with pytest.raises(ConstructionError):
        split_body((1, 2, 3))


@pytest.mark.parametrize("n", range(2, 9))
def test_c_gadget_small(n):
    h = (n + 1) // 2
    for p in split_perms(h, n - h):
        T = c_gadget(p, canonical=False)
        assert T.performs == p
        assert T.total_moves <= 4 * n
        # every swap sits inside the cone -x < t < x
        assert ((-T.xs < T.ts) & (T.ts < T.xs)).all()


@settings(max_examples=30, deadline=None)
@given(st.integers(9, 120), st.randoms(use_true_random=False))
def test_c_gadget_random(n, rng):
    h = (n + 1) // 2
    a = list(range(1, h + 1))
    b = list(range(1, n - h + 1))
    rng.shuffle(a)
    rng.shuffle(b)
    p = direct_sum(a, b)
    T = c_gadget(p, canonical=False)
    assert T.performs == p
    assert T.total_moves <= 4 * n
    assert ((-T.xs < T.ts) & (T.ts < T.xs)).all()


def test_c_gadget_rejects_unsplit():
    with pytest.raises(ConstructionError):
        c_gadget((3, 1, 2))


@pytest.mark.parametrize("n", range(1, 7))
def test_constructions_exhaustive(n):
    lg = math.ceil(math.log2(n)) if n > 1 else 0
    for p in all_perms(n):
        F = fish(p)
        assert F.performs == p and F.max_moves <= 5 and F.depth <= 3 * n
        L = linear_total(p)
        assert L.performs == p and L.total_moves <= 4 * n
        G = log_tangle(p)
        assert G.performs == p and G.max_moves <= lg and G.is_simple
        assert set(G.crossing_counts) == inversions(p)


@settings(max_examples=60, deadline=None)
@given(big_perms())
def test_constructions_random(p):
    for algo in ("fish", "linear", "log", "oddeven"):
        report = build(p, algo)
        assert report.ok, (algo, report.measured, report.claims)


def test_quarter_sizes_cover_every_residue():
    for n in range(4, 40):
        q = quarter_sizes(n)
        assert sum(q) == n
        assert max(q) - min(q) <= 1
        h2 = q[2] + q[3]
        assert (q[2], q[3]) == ((h2 + 1) // 2, h2 // 2)


def test_greedy_baselines():
    for n in (1, 2, 5, 8):
        assert greedy_bubble(reverse(n)).performs == reverse(n)
        assert greedy_oddeven(reverse(n)).performs == reverse(n)
        assert greedy_oddeven(reverse(n)).depth <= n
    assert greedy_oddeven(identity(4)) == greedy_bubble(identity(4))
    ratios = [greedy_bubble(reverse(n)).total_moves / n for n in (4, 8, 16)]
    assert ratios == sorted(ratios) and len(set(ratios)) == 3


def test_families():
    assert block_family(1) == (3, 2, 1)
    assert block_family(3) == (11, 4, 3, 2, 7, 6, 5, 10, 9, 8, 1)
    assert three_move_family(9) == (9, 3, 2, 6, 5, 4, 8, 7, 1)
    assert sorted(three_move_family(12)) == list(range(1, 13))
    with pytest.raises(ConstructionError):
        three_move_family(8)
    with pytest.raises(ConstructionError):
        block_family(0)


def test_build_report():
    r = build((1, 4, 2, 5, 6, 3), "fish")
    assert r.ok and r.verified["max_moves_per_path"]
    assert r.measured["corners"] == 2 * r.measured["total_moves"]
    assert claimed_bounds("linear", 100)["total_moves"] == 400
    with pytest.raises(ConstructionError):
        build((1, 2), "quick")


def test_width_one():
    for algo in ("fish", "linear", "log", "bubble", "oddeven"):
        r = build((1,), algo)
        assert r.ok and len(r.tangle) == 0
