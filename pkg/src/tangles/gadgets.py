"""
Gadget factories: splitters, mergers, matrix gadgets and reflectors.

Each family performs exactly one pattern-restricted class of permutations:

* splitter        -- Grassmannian permutations (at most one descent)
* merger          -- inverses of Grassmannian permutations
* matrix gadget   -- ``[alpha, alpha^-1 + m]`` for any ``alpha`` in S_m
* right reflector -- 132-avoiding permutations
* left reflector  -- 213-avoiding permutations

Public factories return canonical tangles (earliest swap at time 0).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .perm import (Perm, as_perm, avoids, descents, inverse, is_grassmannian,
                   mirror_conjugate)
from .tangle import Tangle, mirror, time_reverse

__all__ = [
    "GadgetError", "MatrixSpec", "splitter", "merger", "matrix",
    "right_reflector", "left_reflector", "enumerate_right_reflectors",
    "ENUMERATION_LIMIT",
]

ENUMERATION_LIMIT = 12


class GadgetError(ValueError):
    """The requested permutation is outside the gadget's class."""


def _empty(width: int) -> Tangle:
    return Tangle(width)


def splitter(pi) -> Tangle:
    """The unique splitter performing a Grassmannian permutation.

    With the descent at ``k``, the element finishing at position ``k - j``
    makes one leftward move of ``pi(k-j) - (k-j)`` steps ending with the swap
    at ``(k - j, -j)``; the remaining elements move right to make room.
    """
    pi = as_perm(pi)
    if not is_grassmannian(pi):
        raise GadgetError(f"{pi} has more than one descent")
    xs, ts = _splitter_raw(pi)
    return Tangle.from_arrays(len(pi), xs, ts).canonical()


def _splitter_raw(pi: Perm) -> tuple[np.ndarray, np.ndarray]:
    """Splitter swaps with the last one at (k, 0); ``pi`` must be Grassmannian."""
    ds = descents(pi)
    if not ds:
        return np.empty(0, dtype=np.int64), np.empty(0, dtype=np.int64)
    k = ds[0]
    steps = np.array([pi[k - jj - 1] - (k - jj) for jj in range(k)], dtype=np.int64)
    jj = np.repeat(np.arange(k), steps)
    ii = np.arange(steps.sum()) - np.repeat(np.cumsum(steps) - steps, steps)
    return ii - jj + k, -ii - jj


def merger(pi) -> Tangle:
    """Time reflection of the splitter for ``pi^-1``."""
    pi = as_perm(pi)
    if not is_grassmannian(inverse(pi)):
        raise GadgetError(f"the inverse of {pi} has more than one descent")
    return time_reverse(splitter(inverse(pi))).canonical()


@dataclass(frozen=True)
class MatrixSpec:
    """Index permutation plus variant.

    ``truncation`` is ``"none"``, ``"right"`` (drop the swap at the right
    vertex; width 2m-1, performs alpha on the m leftmost positions) or
    ``"left"`` (drop the swap at the left vertex and shift one column left;
    width 2m-1, performs alpha^-1 on the m rightmost positions).  With
    ``column_free`` the index must fix 1, the leftmost column is empty
    anyway, and the gadget is shifted one column left.
    """
    alpha: Perm
    truncation: str = "none"
    column_free: bool = False

    def __post_init__(self):
        object.__setattr__(self, "alpha", as_perm(self.alpha))
        if self.truncation not in ("none", "left", "right"):
            raise GadgetError(f"unknown truncation {self.truncation!r}")
        if self.column_free:
            if self.alpha[0] != 1:
                raise GadgetError("a column-free matrix gadget needs alpha(1) = 1")
            if self.truncation != "none":
                raise GadgetError("column_free and truncation are exclusive")
        if self.truncation != "none" and len(self.alpha) < 2:
            raise GadgetError("truncation needs an index of size at least 2")

    @property
    def width(self) -> int:
        m = len(self.alpha)
        return 2 * m - 1 if (self.truncation != "none" or self.column_free) else 2 * m


def _matrix_raw(alpha: Perm) -> tuple[np.ndarray, np.ndarray]:
    """Swaps ``(i + j - 1, i - j)`` for all ``alpha(i) != j``; diamond with left vertex (1, 0)."""
    m = len(alpha)
    i, j = np.indices((m, m)) + 1
    keep = np.asarray(alpha)[i - 1] != j
    return (i + j - 1)[keep], (i - j)[keep]


def matrix(spec) -> Tangle:
    """Matrix gadget for a :class:`MatrixSpec` (or a bare index permutation).

    The untruncated gadget of an index in S_m performs
    ``[alpha(1..m), alpha^-1(1..m) + m]``.
    """
    if not isinstance(spec, MatrixSpec):
        spec = MatrixSpec(spec)
    alpha = spec.alpha
    m = len(alpha)
    xs, ts = _matrix_raw(alpha)
    if spec.truncation == "right":
        keep = ~((xs == 2 * m - 1) & (ts == 0))
        xs, ts = xs[keep], ts[keep]
    elif spec.truncation == "left" or spec.column_free:
        keep = ~((xs == 1) & (ts == 0))
        xs, ts = xs[keep] - 1, ts[keep]
    T = Tangle.from_arrays(spec.width, xs, ts)
    return T.canonical() if len(T) else T


def _right_reflector_raw(pi: Perm) -> tuple[np.ndarray, np.ndarray]:
    """Swaps of the right reflector for a 132-avoiding ``pi``, apex at (1, 0).

    Element n finishes at p = pi^-1(n).  A 45-degree rectangle of swaps with
    corners (1, 0) and (n - 1, 2p - n) carries the p - 1 larger elements
    (and n) leftward across the n - p smaller ones; the two blocks are
    reordered by smaller reflectors placed against its North-East and
    South-East sides.
    """
    xs_parts, ts_parts = [], []
    work = [(tuple(pi), 0, 0)]
    while work:
        p_local, dx, dt = work.pop()
        w = len(p_local)
        if w <= 1:
            continue
        p = p_local.index(w) + 1
        if p < w:
            s, u = np.indices((p, w - p))
            xs_parts.append((1 + s + u).ravel() + dx)
            ts_parts.append((s - u).ravel() + dt)
        left = p_local[:p - 1]
        right = p_local[p:]
        if len(left) > 1:
            lo = min(left) - 1
            work.append((tuple(v - lo for v in left), dx + w - p, dt - (w - p)))
        if len(right) > 1:
            work.append((right, dx + p, dt + p))
    if not xs_parts:
        return np.empty(0, dtype=np.int64), np.empty(0, dtype=np.int64)
    return np.concatenate(xs_parts), np.concatenate(ts_parts)


def right_reflector(pi) -> Tangle:
    """The right reflector performing a 132-avoiding permutation.

    Every path makes a rightward move, waits, then moves back left, so the
    result is always a simple tangle.
    """
    pi = as_perm(pi)
    if len(pi) >= 3 and not avoids(pi, (1, 3, 2)):
        raise GadgetError(f"{pi} contains the pattern 132")
    xs, ts = _right_reflector_raw(pi)
    T = Tangle.from_arrays(len(pi), xs, ts)
    return T.canonical()


def left_reflector(pi) -> Tangle:
    """Mirror image of the right reflector; performs 213-avoiding permutations."""
    pi = as_perm(pi)
    if len(pi) >= 3 and not avoids(pi, (2, 1, 3)):
        raise GadgetError(f"{pi} contains the pattern 213")
    return mirror(right_reflector(mirror_conjugate(pi))).canonical()


@lru_cache(maxsize=None)
def _reflector_shapes(n: int) -> tuple[frozenset, ...]:
    # every right reflector of width n: choose the final position p of
    # element n, then independent reflectors of widths p - 1 and n - p
    if n <= 1:
        return (frozenset(),)
    out = []
    for p in range(1, n + 1):
        rect = frozenset((1 + s + u, s - u) for s in range(p) for u in range(n - p))
        for a in _reflector_shapes(p - 1):
            upper = frozenset((x + n - p, t - (n - p)) for x, t in a)
            for b in _reflector_shapes(n - p):
                lower = frozenset((x + p, t + p) for x, t in b)
                out.append(rect | upper | lower)
    return tuple(out)


def enumerate_right_reflectors(n: int) -> list[Tangle]:
    """Every right reflector of width ``n`` (there are Catalan(n) of them)."""
    if not 1 <= n <= ENUMERATION_LIMIT:
        raise GadgetError(f"enumeration supports 1 <= n <= {ENUMERATION_LIMIT}, got {n}")
    return [Tangle(n, shape).canonical() for shape in _reflector_shapes(n)]
