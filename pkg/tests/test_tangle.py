import json

import pytest
from hypothesis import given, strategies as st

from tangles.perm import compose, inverse, inversions, mirror_conjugate
from tangles.tangle import (Tangle, TangleError, clusters, compress, corners, depth, drop, dump, dumps,
                            is_simple, load, loads, mirror, moves_per_path, paths, performs, stack,
                            time_reverse, total_moves, translate, union, validate)

from .conftest import (bfs_clusters, naive_corners, naive_crossings, naive_moves, naive_path,
                       naive_performs)


@st.composite
def tangles(draw, max_width=8, max_depth=8, t_offset=True):
    n = draw(st.integers(2, max_width))
    d = draw(st.integers(0, max_depth))
    t0 = draw(st.integers(-5, 5)) if t_offset else 0
    swaps = set()
    for t in range(d):
        x = 1
        while x < n:
            if draw(st.booleans()):
                swaps.add((x, t0 + t))
                x += 2
            else:
                x += 1
    return Tangle(n, swaps)


def test_validate_examples(figure1_swaps):
    assert validate(2, {(1, 0)}).swaps == {(1, 0)}
    with pytest.raises(TangleError, match="overlapping"):
        validate(3, {(1, 0), (2, 0)})
    with pytest.raises(TangleError, match="outside"):
        Tangle(3, {(3, 0)})
    with pytest.raises(TangleError):
        Tangle(0)
    assert validate(6, figure1_swaps).depth == 4


def test_overlap_message_names_the_time_step():
    with pytest.raises(TangleError, match="time 7"):
        Tangle(5, {(2, 7), (3, 7)})


def test_equality_is_up_to_vertical_translation():
    assert Tangle(3, {(1, 0), (2, 1)}) == Tangle(3, {(1, 5), (2, 6)})
    assert Tangle(3, {(1, 0)}) != Tangle(4, {(1, 0)})
    assert hash(Tangle(3, {(1, 0)})) == hash(Tangle(3, {(1, 9)}))
    assert Tangle(2, {(1, 5)}).canonical().swaps == {(1, 0)}


def test_small_examples(figure1_swaps):
    E = Tangle(4)
    assert performs(E) == (1, 2, 3, 4) and total_moves(E) == 0 and corners(E)[1] == 0
    assert clusters(E) == 0 and is_simple(E) and depth(E) == 0
    S = Tangle(2, {(1, 0)})
    assert performs(S) == (2, 1)
    assert [p.positions[1:-1] for p in paths(S)] == [(1, 2), (2, 1)]
    assert moves_per_path(S) == {1: 1, 2: 1}
    assert corners(S)[1] == 4 and clusters(S) == 1 and depth(S) == 1
    assert clusters(Tangle(2, {(1, 0), (1, 10)})) == 2
    F = Tangle(6, figure1_swaps)
    assert performs(F) == (1, 4, 2, 5, 6, 3)
    assert paths(F)[4].positions == (5, 5, 6, 6, 5, 4, 4)
    assert total_moves(F) == 7 and corners(F)[1] == 14
    assert not is_simple(F)


@given(tangles())
def test_metrics_match_reference(T):
    sw = T.swaps
    assert T.performs == naive_performs(T.width, sw)
    assert moves_per_path(T) == naive_moves(T.width, sw)
    for p in paths(T):
        assert list(p.positions) == naive_path(T.width, sw, p.element)
    ref = naive_corners(T.width, sw)
    found, weight = corners(T)
    assert {(c.x + 0.5, c.y + 0.5): c.multiplicity for c in found} == {k: v for k, v in ref.items()}
    assert weight == sum(ref.values())
    assert T.cluster_count == bfs_clusters(ref)
    assert T.crossing_counts == naive_crossings(T.width, sw)
    assert T.is_simple == all(c == 1 for c in naive_crossings(T.width, sw).values())


@given(tangles())
def test_corners_are_twice_moves(T):
    assert T.corner_count == 2 * T.total_moves


@given(tangles())
def test_simple_means_crossings_are_inversions(T):
    if T.is_simple:
        assert set(T.crossing_counts) == inversions(T.performs)


@given(tangles(max_depth=12))
def test_compress(T):
    C = compress(T)
    assert C.performs == T.performs
    assert C.corner_count == T.corner_count
    assert C.cluster_count <= T.cluster_count
    # every time step of the result holds a corner
    _, tt, _ = C._corner_arrays
    if len(C):
        assert set(range(C.t_min, C.t_max + 1)) <= set(tt.tolist())


def test_compress_examples():
    assert compress(Tangle(3)) == Tangle(3)
    assert compress(Tangle(2, {(1, 5)})).swaps == {(1, 0)}
    assert compress(Tangle(2, {(1, 0), (1, 5)})).swaps == {(1, 0), (1, 2)}


@given(tangles(), tangles())
def test_stack_composes(A, B):
    if A.width != B.width:
        with pytest.raises(TangleError):
            stack(A, B)
        return
    assert stack(A, B).performs == compose(A.performs, B.performs)


@given(tangles(), tangles(), st.integers(-3, 3))
def test_drop_composes(A, B, dt):
    B = translate(B, 0, dt, A.width) if B.width <= A.width else B
    if B.width > A.width:
        A = translate(A, 0, 0, B.width)
    D = drop(A, B)
    assert D.performs == compose(A.performs, translate(B, 0, 0, D.width).performs)
    assert len(D) == len(A) + len(B)


def test_drop_parity_and_floor():
    base = Tangle(4, {(2, 0)})
    piece = Tangle(4, {(2, 0)})
    assert drop(base, piece).swaps == {(2, 0), (2, 1)}
    assert drop(base, piece, parity=0).swaps == {(2, 0), (2, 2)}
    far = Tangle(6, {(5, 0)})
    assert drop(Tangle(6, {(1, 3)}), far).swaps == {(1, 3), (5, 3)}
    assert drop(Tangle(6, {(1, 3)}), far, floor=10).swaps == {(1, 3), (5, 10)}
    with pytest.raises(TangleError):
        drop(base, Tangle(4, {(1, 0), (3, 1)}), parity=0)


@given(tangles())
def test_reflections(T):
    assert mirror(T).performs == mirror_conjugate(T.performs)
    assert time_reverse(T).performs == inverse(T.performs)
    assert mirror(T).total_moves == T.total_moves


def test_union_rejects_repeats():
    with pytest.raises(TangleError, match="repeated"):
        union([Tangle(3, {(1, 0)}), Tangle(3, {(1, 0)})])
    with pytest.raises(TangleError, match="overlapping"):
        union([Tangle(3, {(1, 0)}), Tangle(3, {(2, 0)})])


def test_translate_width():
    T = translate(Tangle(2, {(1, 0)}), 2, 3)
    assert T.width == 4 and T.swaps == {(3, 3)}
    with pytest.raises(TangleError):
        translate(Tangle(3, {(2, 0)}), 0, 0, 2)


@given(tangles())
def test_file_roundtrip(T):
    assert loads(dumps(T)) == T
    js = json.dumps({"width": T.width, "swaps": sorted(map(list, T.swaps))})
    assert loads(js) == T


def test_file_format(tmp_path, figure1_swaps):
    T = Tangle(6, figure1_swaps)
    assert dumps(T) == "width 6\nt 0: 3 5\nt 1: 2 4\nt 2: 5\nt 3: 4\n"
    assert dumps(Tangle(2, {(1, 0), (1, 2)})) == "width 2\nt 0: 1\nt 1:\nt 2: 1\n"
    assert dumps(Tangle(3)) == "width 3\n"
    path = tmp_path / "f.tangle"
    dump(T, path)
    assert load(path) == T


@pytest.mark.parametrize("text, message", [
    ("t 0: 1\n", "width"),
    ("width x\n", "header"),
    ("width 3\nt 0: 1 2\n", "overlapping swaps at time 0"),
    ("width 3\nt 0: 1 1\n", "time 0"),
    ("width 3\nt 0: 1\nt 0: 2\n", "twice"),
    ("width 3\nrow 0: 1\n", "bad row"),
    ("width 3\nt 0: 9\n", "outside"),
])
def test_file_errors(text, message):
    with pytest.raises(TangleError, match=message):
        loads(text)


def test_large_width_trajectories():
    # positions beyond 127 must survive the direction arrays
    T = Tangle(300, {(x, x) for x in range(1, 300)})
    assert T.performs[-1] == 1
    assert T.total_moves == 300 and T.max_moves == 1
