"""
Tangles: sequences of permutations joined by non-overlapping adjacent swaps,
with constructions that keep the number of moves small.

>>> from tangles import fish
>>> T = fish((1, 4, 2, 5, 6, 3))
>>> T.performs, T.max_moves <= 5
((1, 4, 2, 5, 6, 3), True)
"""

from .construct import (ConstructionReport, block_family, build, c_gadget, fish,
                        greedy_bubble, greedy_oddeven, linear_total, log_tangle,
                        split_body, three_move_family)
from .gadgets import (MatrixSpec, enumerate_right_reflectors, left_reflector, matrix,
                      merger, right_reflector, splitter)
from .oracle import SearchBudget, exists_with_max_moves, min_max_moves, min_total_moves
from .perm import parse_perm
from .render import RenderOptions, to_svg
from .tangle import Tangle, TangleError, compress, drop, dump, dumps, load, loads, stack

__all__ = [
    "ConstructionReport", "block_family", "build", "c_gadget", "fish", "greedy_bubble",
    "greedy_oddeven", "linear_total", "log_tangle", "split_body", "three_move_family",
    "MatrixSpec", "enumerate_right_reflectors", "left_reflector", "matrix", "merger",
    "right_reflector", "splitter", "SearchBudget", "exists_with_max_moves", "min_max_moves",
    "min_total_moves", "parse_perm", "RenderOptions", "to_svg", "Tangle", "TangleError",
    "compress", "drop", "dump", "dumps", "load", "loads", "stack",
]

__version__ = "0.1.0"
