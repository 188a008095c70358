"""
Exact search for move-optimal tangles on small widths.

The search walks over states ``(arrangement, direction of every element)``
where the direction is the element's step in the last row (-1, 0 or +1).
A row is any set of non-overlapping adjacent swaps, possibly empty.  An
element pays one move whenever it steps in a direction different from its
previous step.  The start has every element vertical, matching the padding
copy above a tangle, and the end needs no extra cost because the padding
below only ends moves.

:func:`min_total_moves` runs A* with the admissible estimate "elements that
are away from home and not already heading there".  :func:`exists_with_max_moves`
is a depth-first search with a per-element move budget and pruning based on
which elements can still move in each direction.
"""

from __future__ import annotations

import heapq
import json
import time
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

from .perm import as_perm, format_perm, identity, inverse, mirror_conjugate
from .tangle import Tangle

__all__ = [
    "SearchBudget", "SearchResult", "min_total_moves", "exists_with_max_moves",
    "min_max_moves", "result_record", "STANDARD", "EXTENDED",
]


@dataclass(frozen=True)
class SearchBudget:
    """Limits for one search.  ``None`` means unlimited.

    ``max_depth`` caps the number of rows; by default the decision search uses
    ``2kn + 1``.  ``time_limit`` is wall-clock seconds.
    """
    max_depth: Optional[int] = None
    max_total_moves: Optional[int] = None
    max_moves_per_path: Optional[int] = None
    time_limit: Optional[float] = 60.0

    def __post_init__(self):
        caps = (self.max_total_moves, self.max_moves_per_path)
        if self.max_depth is not None and self.max_depth < 1 and any(c for c in caps):
            raise ValueError("max_depth must be at least 1 when a move cap is positive")


STANDARD = SearchBudget()
EXTENDED = SearchBudget(time_limit=None)


@dataclass
class SearchResult:
    """Outcome of a search.

    ``status`` is ``"optimal"`` or ``"exhausted"`` for optimisation, and
    ``"yes"``, ``"no"`` or ``"exhausted"`` for the decision problem.  For an
    exhausted optimisation ``value`` is the best lower bound proven so far.
    """
    status: str
    value: Optional[int] = None
    witness: Optional[Tangle] = None
    states: int = 0
    elapsed: float = 0.0
    extra: dict = field(default_factory=dict)

    def __int__(self) -> int:
        return int(self.value)


@lru_cache(maxsize=None)
def _matchings(n: int) -> tuple[tuple[int, ...], ...]:
    """All sets of pairwise non-adjacent positions in 1..n-1, in lexicographic order."""
    out: list[tuple[int, ...]] = []

    def grow(start: int, acc: tuple[int, ...]):
        out.append(acc)
        for x in range(start, n):
            grow(x + 2, acc + (x,))

    grow(1, ())
    return tuple(sorted(out))


def _step(arr: tuple, row: tuple[int, ...], n: int):
    """Apply one row of swaps; return the new arrangement and the direction of every element."""
    new = list(arr)
    dirs = [0] * (n + 1)
    for x in row:
        a, b = new[x - 1], new[x]
        new[x - 1], new[x] = b, a
        dirs[a] = 1
        dirs[b] = -1
    return tuple(new), tuple(dirs)


def _witness(width: int, rows: list[tuple[int, ...]]) -> Tangle:
    return Tangle(width, [(x, t) for t, row in enumerate(rows) for x in row])


def _unwind(parent: dict, key) -> list:
    rows = []
    while parent[key] is not None:
        key, row = parent[key]
        rows.append(row)
    rows.reverse()
    return rows


# -- minimum total moves ------------------------------------------------------


def min_total_moves(pi, budget: SearchBudget = STANDARD, prune: bool = True) -> SearchResult:
    """Least total number of moves over all tangles performing ``pi``.

    With ``prune=False`` the estimate is switched off (plain Dijkstra); the
    optimum must not change.
    """
    pi = as_perm(pi)
    n = len(pi)
    started = time.monotonic()
    home = (0,) + inverse(pi)                   # home[e] = final position of e
    start = (identity(n), (0,) * (n + 1))
    if pi == identity(n):
        return SearchResult("optimal", 0, Tangle(n), 1, 0.0)
    rows_all = [r for r in _matchings(n) if r]
    tracks_depth = budget.max_depth is not None

    def estimate(arr, dirs) -> int:
        if not prune:
            return 0
        h = 0
        for p, e in enumerate(arr, 1):
            gap = home[e] - p
            if gap and dirs[e] != (1 if gap > 0 else -1):
                h += 1
        return h

    def key_of(arr, dirs, depth):
        return (arr, dirs, depth) if tracks_depth else (arr, dirs)

    k0 = key_of(*start, 0)
    best = {k0: 0}
    parent = {k0: None}
    heap = [(estimate(*start), 0, 0, k0, start, 0)]
    counter = 1
    expanded = 0
    bound = 0
    truncated = False
    while heap:
        f, g, _, key, (arr, dirs), depth = heapq.heappop(heap)
        if g > best.get(key, g):
            continue
        bound = max(bound, f)
        if arr == pi:
            rows = _unwind(parent, key)
            status = "optimal"
            return SearchResult(status, g, _witness(n, rows), expanded, time.monotonic() - started)
        expanded += 1
        if budget.time_limit is not None and time.monotonic() - started > budget.time_limit:
            return SearchResult("exhausted", bound, None, expanded, time.monotonic() - started)
        if budget.max_depth is not None and depth >= budget.max_depth:
            truncated = True
            continue
        # the empty row ends every move; a second one in a row is never useful
        candidates = rows_all if not any(dirs) else [()] + rows_all
        for row in candidates:
            narr, ndirs = _step(arr, row, n)
            cost = sum(1 for e in range(1, n + 1) if ndirs[e] and ndirs[e] != dirs[e])
            ng = g + cost
            if budget.max_total_moves is not None and ng > budget.max_total_moves:
                truncated = True
                continue
            nkey = key_of(narr, ndirs, depth + 1)
            if ng < best.get(nkey, ng + 1):
                best[nkey] = ng
                parent[nkey] = (key, row)
                heapq.heappush(heap, (ng + estimate(narr, ndirs), ng, counter, nkey, (narr, ndirs), depth + 1))
                counter += 1
    elapsed = time.monotonic() - started
    if truncated:
        return SearchResult("exhausted", bound, None, expanded, elapsed)
    raise AssertionError("every permutation is performed by some tangle")  # pragma: no cover


# -- bounded moves per path -----------------------------------------------------


def _mirror_state(arr, dirs, used, n):
    marr = tuple(n + 1 - e for e in reversed(arr))
    mdirs = (0,) + tuple(-dirs[n + 1 - e] for e in range(1, n + 1))
    mused = (0,) + tuple(used[n + 1 - e] for e in range(1, n + 1))
    return marr, mdirs, mused


def exists_with_max_moves(pi, k: int, budget: SearchBudget = STANDARD, prune: bool = True) -> SearchResult:
    """Decide whether some tangle performing ``pi`` has at most ``k`` moves on every path.

    The search is depth-first over ``(arrangement, directions, moves used)``
    with at most ``2kn + 1`` rows unless the budget says otherwise.  With
    ``prune`` on, a state is abandoned as soon as some element that still has
    to move right (or some pair that still has to cross) has no move left in
    the needed direction; every swap moves both of its elements.  When ``pi``
    equals its own mirror image, mirrored states are merged.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    pi = as_perm(pi)
    n = len(pi)
    started = time.monotonic()
    if pi == identity(n):
        return SearchResult("yes", 0, Tangle(n), 1, 0.0)
    if k == 0:
        return SearchResult("no", None, None, 1, 0.0)
    home = (0,) + inverse(pi)
    max_depth = budget.max_depth if budget.max_depth is not None else 2 * k * n + 1
    symmetric = prune and mirror_conjugate(pi) == pi
    rows_all = [r for r in _matchings(n) if r]

    def viable(arr, dirs, used) -> bool:
        can_r = [False] * (n + 1)
        can_l = [False] * (n + 1)
        for p, e in enumerate(arr, 1):
            free = used[e] < k
            can_r[e] = free or dirs[e] > 0
            can_l[e] = free or dirs[e] < 0
            gap = home[e] - p
            if gap > 0 and not can_r[e] or gap < 0 and not can_l[e]:
                return False
        for i in range(n):
            a = arr[i]
            if not can_r[a]:
                continue
            for j in range(i + 1, n):
                b = arr[j]
                if home[a] > home[b] and not can_l[b]:
                    return False
        for i in range(n):
            a = arr[i]
            if can_r[a]:
                continue
            if any(home[a] > home[arr[j]] for j in range(i + 1, n)):
                return False
        return True

    def canon(state):
        if not symmetric:
            return state
        return min(state, _mirror_state(*state, n))

    start = (identity(n), (0,) * (n + 1), (0,) * (n + 1))
    seen = {canon(start): 0}      # state -> shallowest depth reached
    parent = {start: None}
    stack = [(start, 0)]
    while stack:
        state, depth = stack.pop()
        arr, dirs, used = state
        if budget.time_limit is not None and time.monotonic() - started > budget.time_limit:
            return SearchResult("exhausted", None, None, len(seen), time.monotonic() - started)
        if depth >= max_depth:
            continue
        candidates = rows_all if not any(dirs) else [()] + rows_all
        for row in reversed(candidates):
            narr, ndirs = _step(arr, row, n)
            nused = list(used)
            ok = True
            for e in range(1, n + 1):
                if ndirs[e] and ndirs[e] != dirs[e]:
                    nused[e] += 1
                    if nused[e] > k:
                        ok = False
                        break
            if not ok:
                continue
            child = (narr, ndirs, tuple(nused))
            ckey = canon(child)
            if seen.get(ckey, max_depth + 1) <= depth + 1:
                continue
            seen[ckey] = depth + 1
            parent[child] = (state, row)
            if narr == pi:
                rows = _unwind(parent, child)
                return SearchResult("yes", k, _witness(n, rows), len(seen), time.monotonic() - started)
            if prune and not viable(narr, ndirs, child[2]):
                continue
            stack.append((child, depth + 1))
    return SearchResult("no", None, None, len(seen), time.monotonic() - started)


def min_max_moves(pi, budget: SearchBudget = STANDARD, prune: bool = True) -> SearchResult:
    """Least k such that some tangle performing ``pi`` has at most k moves per path.

    Tries k = 0, 1, 2, ... in turn; the time limit applies to the whole run.
    If it runs out, ``value`` is the smallest k not yet refuted, a lower bound.
    """
    pi = as_perm(pi)
    started = time.monotonic()
    k = 0
    states = 0
    while True:
        left = None
        if budget.time_limit is not None:
            left = budget.time_limit - (time.monotonic() - started)
            if left <= 0:
                return SearchResult("exhausted", k, None, states, time.monotonic() - started)
        sub = SearchBudget(budget.max_depth, None, None, left)
        res = exists_with_max_moves(pi, k, sub, prune=prune)
        states += res.states
        if res.status == "yes":
            return SearchResult("optimal", k, res.witness, states, time.monotonic() - started)
        if res.status == "exhausted":
            return SearchResult("exhausted", k, None, states, time.monotonic() - started)
        k += 1


def result_record(pi, objective: str, result: SearchResult, witness_file: Optional[str] = None) -> dict:
    """The JSON record printed by the ``search`` command."""
    return {
        "permutation": format_perm(pi),
        "objective": objective,
        "value": result.value,
        "status": result.status,
        "witness_file": witness_file,
    }


def dumps_record(record: dict) -> str:
    return json.dumps(record, sort_keys=True)
