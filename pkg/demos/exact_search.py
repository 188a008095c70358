"""
Exact optima on small widths
============================

For a handful of elements the space of tangles can be searched outright.
That gives true minima to hold the constructions against.
"""

from tangles import fish, linear_total, log_tangle
from tangles.construct import three_move_family
from tangles.oracle import exists_with_max_moves, min_max_moves, min_total_moves
from tangles.tangle import dumps

for n in range(2, 6):
    rev = tuple(range(n, 0, -1))
    res = min_total_moves(rev)
    print(n, res.status, res.value, f"{res.states} states")

best = min_total_moves((3, 1, 4, 2))
print(dumps(best.witness))
for build in (fish, linear_total, log_tangle):
    print(build.__name__, build((3, 1, 4, 2)).total_moves, ">=", best.value)

print("least max moves per path for 4,3,2,1:", min_max_moves((4, 3, 2, 1)).value)

# a family where some path must bend three times; this takes a few seconds
pi = three_move_family(9)
print(pi, exists_with_max_moves(pi, 2).status)
