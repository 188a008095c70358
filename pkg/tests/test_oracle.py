import json

import pytest

from tangles.construct import fish, greedy_bubble, greedy_oddeven, linear_total, log_tangle
from tangles.oracle import (SearchBudget, exists_with_max_moves, min_max_moves, min_total_moves,
                            result_record)
from tangles.perm import identity, reverse

from .conftest import all_perms

# exact optima for the reversal, recorded once from the search itself
REVERSE_TOTAL = {2: 2, 3: 4, 4: 6, 5: 8}


def test_trivial_examples():
    assert min_total_moves(identity(4)).value == 0
    assert min_total_moves((2, 1)).value == 2
    assert min_total_moves(reverse(3)).value == 4
    assert exists_with_max_moves(identity(3), 0).status == "yes"
    assert exists_with_max_moves((2, 1), 0).status == "no"
    assert min_max_moves(identity(3)).value == 0
    assert min_max_moves(reverse(3)).value in (1, 2)


@pytest.mark.parametrize("n", sorted(REVERSE_TOTAL))
def test_reverse_goldens(n):
    res = min_total_moves(reverse(n))
    assert res.status == "optimal"
    assert res.value == REVERSE_TOTAL[n] >= 2 * n - 2


def test_witnesses_verify():
    for p in all_perms(4):
        res = min_total_moves(p)
        assert res.witness.performs == p and res.witness.total_moves == res.value
        mm = min_max_moves(p)
        assert mm.witness.performs == p and mm.witness.max_moves <= mm.value


def test_pruning_is_sound_on_s4():
    for p in all_perms(4):
        assert min_total_moves(p).value == min_total_moves(p, prune=False).value
        assert min_max_moves(p).value == min_max_moves(p, prune=False).value


def test_optimum_bounds_every_construction():
    for p in all_perms(4):
        best = min_total_moves(p).value
        for build in (fish, linear_total, log_tangle, greedy_bubble, greedy_oddeven):
            assert best <= build(p).total_moves


def test_budget_exhaustion_is_reported():
    res = min_total_moves(reverse(6), SearchBudget(time_limit=0.0))
    assert res.status == "exhausted" and res.witness is None
    res = min_total_moves(reverse(4), SearchBudget(max_total_moves=3))
    assert res.status == "exhausted"
    res = exists_with_max_moves(reverse(6), 1, SearchBudget(time_limit=0.0))
    assert res.status == "exhausted"


def test_depth_budget():
    # reversing 3 elements needs 3 rows; with 2 rows nothing works
    assert min_total_moves(reverse(3), SearchBudget(max_depth=2)).status == "exhausted"
    assert min_total_moves(reverse(3), SearchBudget(max_depth=3)).value == 4
    assert exists_with_max_moves(reverse(3), 2, SearchBudget(max_depth=2)).status == "no"


def test_budget_validation():
    with pytest.raises(ValueError):
        SearchBudget(max_depth=0, max_total_moves=3)
    with pytest.raises(ValueError):
        exists_with_max_moves((2, 1), -1)


def test_record():
    rec = result_record((3, 2, 1), "total", min_total_moves(reverse(3)), "w.tangle")
    assert rec == {"permutation": "3,2,1", "objective": "total", "value": 4,
                   "status": "optimal", "witness_file": "w.tangle"}
    json.dumps(rec)
