"""
Three constructions side by side
================================

Each construction builds a tangle for any permutation.  They trade
against each other: few moves per path, few moves in total, or every
pair of elements crossing at most once.
"""

import random

from tangles import fish, linear_total, log_tangle
from tangles.construct import claimed_bounds, greedy_bubble, greedy_oddeven

n = 200
pi = list(range(1, n + 1))
random.Random(7).shuffle(pi)
pi = tuple(pi)

builders = {"fish": fish, "linear": linear_total, "log": log_tangle,
            "bubble": greedy_bubble, "oddeven": greedy_oddeven}

print(f"{'':8} {'moves':>6} {'max/path':>8} {'depth':>6} {'clusters':>8} simple")
for name, build in builders.items():
    T = build(pi)
    assert T.performs == pi
    print(f"{name:8} {T.total_moves:6} {T.max_moves:8} {T.depth:6} {T.cluster_count:8} {T.is_simple}")

# the promised bounds at this width
for name in ("fish", "linear", "log"):
    print(name, claimed_bounds(name, n))

# the bubble baseline gets worse per element as n grows
for m in (8, 16, 32, 64):
    rev = tuple(range(m, 0, -1))
    print(m, greedy_bubble(rev).total_moves / m)
