"""Slow, obviously-correct reference versions of the tangle metrics."""

from __future__ import annotations

import itertools
from collections import deque

import pytest

FIGURE1_SWAPS = {(3, 0), (5, 0), (2, 1), (4, 1), (5, 2), (4, 3)}


def naive_rows(width, swaps):
    swaps = sorted(swaps, key=lambda s: (s[1], s[0]))
    if not swaps:
        return []
    t0, t1 = swaps[0][1], swaps[-1][1]
    rows = {t: [] for t in range(t0, t1 + 1)}
    for x, t in swaps:
        rows[t].append(x)
    return [rows[t] for t in range(t0, t1 + 1)]


def naive_arrangements(width, swaps):
    """Every permutation from the identity to the result, padded by one copy at each end."""
    cur = list(range(1, width + 1))
    seq = [tuple(cur), tuple(cur)]
    for row in naive_rows(width, swaps):
        for x in row:
            cur[x - 1], cur[x] = cur[x], cur[x - 1]
        seq.append(tuple(cur))
    seq.append(tuple(cur))
    return seq


def naive_performs(width, swaps):
    return naive_arrangements(width, swaps)[-1]


def naive_path(width, swaps, e):
    return [arr.index(e) + 1 for arr in naive_arrangements(width, swaps)]


def naive_steps(width, swaps, e):
    pos = naive_path(width, swaps, e)
    return [b - a for a, b in zip(pos, pos[1:])]


def naive_moves(width, swaps):
    out = {}
    for e in range(1, width + 1):
        steps = naive_steps(width, swaps, e)
        out[e] = sum(1 for i, d in enumerate(steps) if d and (i == 0 or steps[i - 1] != d))
    return out


def naive_corners(width, swaps):
    """Set of (position, time index) with weights: every change of step direction."""
    t0 = min((t for _, t in swaps), default=0)
    found = {}
    for e in range(1, width + 1):
        pos = naive_path(width, swaps, e)
        steps = [b - a for a, b in zip(pos, pos[1:])]
        for k in range(1, len(steps)):
            if steps[k] != steps[k - 1]:
                w = 2 if steps[k] and steps[k - 1] else 1
                found[(pos[k], t0 + k - 1)] = w
    return found


def bfs_clusters(points):
    """Connected components of a point set under king-move adjacency, by breadth-first search."""
    points = set(points)
    seen = set()
    count = 0
    for p in points:
        if p in seen:
            continue
        count += 1
        queue = deque([p])
        seen.add(p)
        while queue:
            x, y = queue.popleft()
            for dx, dy in itertools.product((-1, 0, 1), repeat=2):
                q = (x + dx, y + dy)
                if q in points and q not in seen:
                    seen.add(q)
                    queue.append(q)
    return count


def naive_crossings(width, swaps):
    out = {}
    arrs = naive_arrangements(width, swaps)
    for a, b in zip(arrs, arrs[1:]):
        for i in range(width - 1):
            if a[i] != b[i] and a[i] == b[i + 1]:
                key = tuple(sorted((a[i], a[i + 1])))
                out[key] = out.get(key, 0) + 1
    return out


def brute_contains(pi, pattern):
    k = len(pattern)
    want = sorted(range(k), key=lambda i: pattern[i])
    for idx in itertools.combinations(range(len(pi)), k):
        vals = [pi[i] for i in idx]
        if sorted(range(k), key=lambda i: vals[i]) == want:
            return True
    return False


def all_perms(n):
    return list(itertools.permutations(range(1, n + 1)))


@pytest.fixture
def figure1_swaps():
    return set(FIGURE1_SWAPS)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    setattr(item, f"rep_{rep.when}", rep)


@pytest.fixture
def verdict(request):
    """Print one PASS/FAIL line for an acceptance criterion once the test body has run."""
    yield
    rep = getattr(request.node, "rep_call", None)
    status = "PASS" if rep is not None and rep.passed else "FAIL"
    label = request.node.get_closest_marker("criterion").args[0]
    capman = request.config.pluginmanager.getplugin("capturemanager")
    with capman.global_and_fixture_disabled():
        print(f"\ncriterion {label}: {status}")
