"""
Building blocks
===============

The constructions are glued together from a few fixed shapes.  Each
shape performs exactly one family of permutations.
"""

from pathlib import Path

from tangles import to_svg
from tangles.gadgets import MatrixSpec, enumerate_right_reflectors, matrix, merger, right_reflector, splitter
from tangles.tangle import dumps

# a splitter sorts the two runs of a permutation with one descent
S = splitter((2, 4, 5, 1, 3))
print(dumps(S), S.performs, "max moves per path", S.max_moves)

# a merger is a splitter run backwards in time; its inverse has one descent
print(merger((4, 1, 5, 2, 3)).performs)

# a matrix gadget performs alpha on the left half and alpha^-1 on the right
M = matrix((2, 3, 1))
print(M.performs)
print(matrix(MatrixSpec((1, 3, 2), column_free=True)).performs)

# reflectors perform the 132-avoiding permutations, one reflector each
R = right_reflector((4, 2, 3, 1))
print(R.performs, R.is_simple)
print([len(enumerate_right_reflectors(n)) for n in range(1, 8)])

out = Path("demo_output")
out.mkdir(exist_ok=True)
(out / "matrix.svg").write_text(to_svg(M))
(out / "reflector.svg").write_text(to_svg(R))
