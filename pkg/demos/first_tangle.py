"""
A first tangle
==============

A tangle on six wires, written down as a set of swap locations (x, t):
wires x and x+1 trade places at time t.  Everything else is measured
from that set.
"""

from pathlib import Path

from tangles import Tangle, to_svg
from tangles.tangle import corners, dumps, paths

T = Tangle(6, {(3, 0), (5, 0), (2, 1), (4, 1), (5, 2), (4, 3)})
print(dumps(T))

# the permutation it performs, in one-line notation
print("performs", T.performs)

# element 5 starts at position 5; its positions over time, padding rows included
print("path of 5", paths(T)[4].positions)

# a move is a maximal diagonal run; each one bends the path twice
print("moves", T.total_moves, "corners", T.corner_count, "clusters", T.cluster_count)

# elements 5 and 6 cross twice, so the tangle is not simple
print("crossings", T.crossing_counts, "simple", T.is_simple)

found, weight = corners(T)
for c in found[:4]:
    print(c)

out = Path("demo_output")
out.mkdir(exist_ok=True)
(out / "first_tangle.svg").write_text(to_svg(T))
