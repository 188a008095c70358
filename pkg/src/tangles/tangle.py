"""
Tangles as sets of swap locations, and the metrics defined on them.

A swap at location ``(x, t)`` exchanges positions ``x`` and ``x + 1`` between
the permutation at time ``t`` and the one at time ``t + 1``.  Element ``i`` of
the permutation at time ``t`` sits at the point ``(i - 1/2, t - 1/2)``; time
grows downward.  Swap times may be any integers: two tangles are equal when
their swap sets differ by a vertical translation.

All metrics pad the tangle with one repeated permutation at each end, so every
path starts and ends with a vertical segment and the corner count is exactly
twice the move count.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

import numpy as np
from scipy import ndimage

from .perm import Perm

__all__ = [
    "Tangle", "TangleError", "Corner", "validate", "performs", "paths",
    "moves_per_path", "total_moves", "max_moves", "corners", "clusters",
    "is_simple", "depth", "compress", "translate", "union", "stack", "drop",
    "mirror", "time_reverse", "dumps", "loads", "load", "dump",
]


class TangleError(ValueError):
    """Raised for swap sets that do not form a tangle."""


class Corner(NamedTuple):
    x: float
    y: float
    multiplicity: int


def _sort_key(xs: np.ndarray, ts: np.ndarray, width: int) -> np.ndarray:
    # orders by (t, x); out-of-range x still gets a distinct key
    span = int(np.abs(xs).max()) * 2 + width + 2
    return (ts - ts.min()) * span + (xs + span // 2)


class Tangle:
    """A width and a finite set of swap locations ``(x, t)``.

    Swaps are held in two integer arrays sorted by ``(t, x)``.  Construction
    checks range and non-overlap; times are kept as given so gadgets can be
    positioned relative to each other before being combined.
    """

    def __init__(self, width: int, swaps: Iterable[tuple[int, int]] = (), *, _arrays=None):
        if width < 1:
            raise TangleError(f"width must be positive, got {width}")
        self.width = int(width)
        if _arrays is not None:
            xs, ts = _arrays
        else:
            pts = np.array(sorted({(int(x), int(t)) for x, t in swaps}), dtype=np.int64).reshape(-1, 2)
            xs, ts = pts[:, 0], pts[:, 1]
        xs = np.asarray(xs, dtype=np.int64)
        ts = np.asarray(ts, dtype=np.int64)
        if len(xs):
            order = np.argsort(_sort_key(xs, ts, self.width))
            xs, ts = xs[order], ts[order]
        self.xs = xs
        self.ts = ts
        self.xs.setflags(write=False)
        self.ts.setflags(write=False)
        self._check()

    @classmethod
    def from_arrays(cls, width: int, xs, ts) -> "Tangle":
        return cls(width, _arrays=(xs, ts))

    @classmethod
    def _presorted(cls, width: int, xs: np.ndarray, ts: np.ndarray) -> "Tangle":
        """Skip sorting; ``xs, ts`` must already be ordered by ``(t, x)``."""
        out = cls.__new__(cls)
        out.width = int(width)
        if out.width < 1:
            raise TangleError(f"width must be positive, got {width}")
        out.xs, out.ts = xs, ts
        xs.setflags(write=False)
        ts.setflags(write=False)
        out._check()
        return out

    def _check(self) -> None:
        xs, ts = self.xs, self.ts
        if len(xs) == 0:
            return
        bad = (xs < 1) | (xs > self.width - 1)
        if bad.any():
            k = int(np.argmax(bad))
            raise TangleError(f"swap position {xs[k]} at time {ts[k]} outside 1..{self.width - 1}")
        same = ts[1:] == ts[:-1]
        clash = same & (xs[1:] - xs[:-1] <= 1)
        if clash.any():
            k = int(np.argmax(clash))
            raise TangleError(
                f"overlapping swaps at time {ts[k]}: positions {xs[k]} and {xs[k + 1]}")

    # -- identity -----------------------------------------------------------

    def __len__(self) -> int:
        return len(self.xs)

    @property
    def swaps(self) -> frozenset[tuple[int, int]]:
        return frozenset(zip(self.xs.tolist(), self.ts.tolist()))

    @property
    def t_min(self) -> int:
        return int(self.ts[0]) if len(self.ts) else 0

    @property
    def t_max(self) -> int:
        return int(self.ts[-1]) if len(self.ts) else -1

    def canonical(self) -> "Tangle":
        if self.t_min == 0:
            return self
        return Tangle.from_arrays(self.width, self.xs, self.ts - self.t_min)

    def _key(self):
        return (self.width, self.xs.tobytes(), (self.ts - self.t_min).tobytes())

    def __eq__(self, other) -> bool:
        if not isinstance(other, Tangle):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        if len(self) <= 12:
            body = sorted(zip(self.xs.tolist(), self.ts.tolist()), key=lambda s: (s[1], s[0]))
            return f"Tangle({self.width}, {body})"
        return f"Tangle(width={self.width}, swaps={len(self)}, depth={self.depth})"

    def parity_classes(self) -> set[int]:
        return set(np.unique((self.xs + self.ts) % 2).tolist())

    def rows(self) -> list[tuple[int, np.ndarray]]:
        """``(t, positions)`` for every time step from t_min to t_max, empty rows included."""
        if not len(self):
            return []
        uniq, start = np.unique(self.ts, return_index=True)
        groups = dict(zip(uniq.tolist(), np.split(self.xs, start[1:])))
        empty = np.empty(0, dtype=np.int64)
        return [(t, groups.get(t, empty)) for t in range(self.t_min, self.t_max + 1)]

    # -- derived data -------------------------------------------------------

    @cached_property
    def _trace(self):
        """Positions of every element over the padded time span, plus swapped value pairs."""
        n = self.width
        rows = self.rows()
        perm = np.arange(1, n + 1, dtype=np.int64)  # perm[p-1] = element at position p
        pos = np.arange(1, n + 1, dtype=np.int64)   # pos[e-1] = position of element e
        traj = np.empty((len(rows) + 3, n), dtype=np.int32)
        traj[0] = pos
        traj[1] = pos
        lefts, rights = [], []
        for k, (_, xs) in enumerate(rows):
            if len(xs):
                a = perm[xs - 1].copy()
                b = perm[xs].copy()
                perm[xs - 1] = b
                perm[xs] = a
                pos[a - 1] = xs + 1
                pos[b - 1] = xs
                lefts.append(a)
                rights.append(b)
            traj[k + 2] = pos
        traj[-1] = pos
        if lefts:
            a = np.concatenate(lefts)
            b = np.concatenate(rights)
            pairs = np.stack([np.minimum(a, b), np.maximum(a, b)], axis=1)
        else:
            pairs = np.empty((0, 2), dtype=np.int64)
        return tuple(int(v) for v in perm), traj, pairs

    @property
    def performs(self) -> Perm:
        return self._trace[0]

    @property
    def trajectories(self) -> np.ndarray:
        """Array of shape ``(depth + 3, width)``; entry ``[k, e-1]`` is the position of element e.

        Row ``k`` is the permutation at time ``t_min - 1 + k``; the first and last
        rows are the padding copies.
        """
        return self._trace[1]

    @cached_property
    def _directions(self) -> np.ndarray:
        return np.diff(self.trajectories, axis=0).astype(np.int8)

    @cached_property
    def moves_array(self) -> np.ndarray:
        d = self._directions
        start = d != 0
        start[1:] &= d[1:] != d[:-1]
        return start.sum(axis=0)

    @cached_property
    def _corner_arrays(self):
        d = self._directions
        change = d[1:] != d[:-1]
        weight = np.where((d[1:] != 0) & (d[:-1] != 0), 2, 1) * change
        k, e = np.nonzero(change)
        # vertex row k + 1 of the trajectory array is the permutation at time t_min + k
        px = self.trajectories[k + 1, e].astype(np.int64)
        tt = (self.t_min + k).astype(np.int64)
        return px, tt, weight[k, e]

    @property
    def corner_count(self) -> int:
        return int(self._corner_arrays[2].sum())

    @property
    def total_moves(self) -> int:
        return int(self.moves_array.sum())

    @property
    def max_moves(self) -> int:
        return int(self.moves_array.max()) if self.width else 0

    @property
    def depth(self) -> int:
        return self.t_max - self.t_min + 1 if len(self) else 0

    @cached_property
    def cluster_count(self) -> int:
        px, tt, _ = self._corner_arrays
        if len(px) == 0:
            return 0
        grid = np.zeros((self.width + 2, int(tt.max() - tt.min()) + 3), dtype=bool)
        grid[px, tt - tt.min() + 1] = True
        _, count = ndimage.label(grid, structure=np.ones((3, 3), dtype=bool))
        return int(count)

    @cached_property
    def crossing_counts(self) -> dict[tuple[int, int], int]:
        """Number of swaps between each pair of elements that ever swap."""
        pairs = self._trace[2]
        if not len(pairs):
            return {}
        base = self.width + 1
        uniq, counts = np.unique(pairs[:, 0] * base + pairs[:, 1], return_counts=True)
        return dict(zip(zip((uniq // base).tolist(), (uniq % base).tolist()), counts.tolist()))

    @property
    def is_simple(self) -> bool:
        pairs = self._trace[2]
        if len(pairs) < 2:
            return True
        code = pairs[:, 0] * (self.width + 1) + pairs[:, 1]
        return len(np.unique(code)) == len(code)


# -- functional surface -----------------------------------------------------


def validate(width: int, swaps: Iterable[tuple[int, int]]) -> Tangle:
    """Check a swap set and return it as a canonical tangle (earliest swap at time 0)."""
    return Tangle(width, swaps).canonical()


def performs(T: Tangle) -> Perm:
    return T.performs


@dataclass(frozen=True)
class Path:
    element: int
    positions: tuple[int, ...]


def paths(T: Tangle) -> list[Path]:
    """One trajectory per element over the padded time span."""
    traj = T.trajectories
    return [Path(e + 1, tuple(int(p) for p in traj[:, e])) for e in range(T.width)]


def moves_per_path(T: Tangle) -> dict[int, int]:
    return {e + 1: int(m) for e, m in enumerate(T.moves_array)}


def total_moves(T: Tangle) -> int:
    return T.total_moves


def max_moves(T: Tangle) -> int:
    return T.max_moves


def corners(T: Tangle) -> tuple[list[Corner], int]:
    """Corner locations on the half-integer lattice and the weighted corner count."""
    px, tt, w = T._corner_arrays
    out = [Corner(float(x) - 0.5, float(t) - 0.5, int(m)) for x, t, m in zip(px, tt, w)]
    out.sort(key=lambda c: (c.y, c.x))
    return out, int(w.sum())


def clusters(T: Tangle) -> int:
    return T.cluster_count


def is_simple(T: Tangle) -> bool:
    return T.is_simple


def depth(T: Tangle) -> int:
    return T.depth


def compress(T: Tangle) -> Tangle:
    """Shorten every run of two or more swap-free time steps to a single one.

    Three equal consecutive permutations carry no corner in the middle one,
    so dropping it keeps performs() and the corner count, and can only merge
    clusters.  Every time step of the result carries a corner.
    """
    if not len(T):
        return T.canonical()
    uniq, inv = np.unique(T.ts, return_inverse=True)
    gaps = np.minimum(np.diff(uniq), 2)
    new_times = np.concatenate([[0], np.cumsum(gaps)])
    return Tangle.from_arrays(T.width, T.xs, new_times[inv])


def translate(T: Tangle, dx: int = 0, dt: int = 0, new_width: int | None = None) -> Tangle:
    """Shift every swap by ``(dx, dt)`` inside a tangle of ``new_width`` (default: grown by dx)."""
    if new_width is None:
        new_width = T.width + dx
    # shifting keeps the (t, x) order
    return Tangle._presorted(new_width, T.xs + dx, T.ts + dt)


def union(tangles: Sequence[Tangle]) -> Tangle:
    """Combine swap sets; the result must still be non-overlapping."""
    tangles = list(tangles)
    if not tangles:
        raise TangleError("union of no tangles")
    width = max(T.width for T in tangles)
    xs = np.concatenate([T.xs for T in tangles])
    ts = np.concatenate([T.ts for T in tangles])
    if not len(xs):
        return Tangle(width)
    key = _sort_key(xs, ts, width)
    order = np.argsort(key)
    key = key[order]
    if (key[1:] == key[:-1]).any():
        raise TangleError("union has repeated swap locations")
    return Tangle._presorted(width, xs[order], ts[order])


def stack(T1: Tangle, T2: Tangle) -> Tangle:
    """Run ``T1`` and then ``T2``; performs ``compose(performs(T1), performs(T2))``."""
    if T1.width != T2.width:
        raise TangleError(f"stack needs equal widths, got {T1.width} and {T2.width}")
    if not len(T1):
        return T2
    if not len(T2):
        return T1
    return union([T1, translate(T2, 0, T1.t_max + 1 - T2.t_min, T1.width)])


def drop(base: Tangle, piece: Tangle, parity: int | None = None, floor: int | None = None) -> Tangle:
    """Place ``piece`` as early as possible while still running after ``base``.

    Every piece swap is moved strictly later than every base swap touching a
    shared or neighbouring position, which is exactly what makes the union
    perform ``compose(performs(base), performs(piece))``.  With ``parity`` set,
    the shift also puts the piece's swaps on locations with ``x + t`` of that
    parity (the piece must occupy a single parity class).  ``floor`` bounds
    the earliest time the piece may start when nothing constrains it;
    by default the start of ``base``.  Returns the union.
    """
    width = max(base.width, piece.width)
    if not len(piece):
        return Tangle.from_arrays(width, base.xs, base.ts)
    if not len(base):
        return Tangle.from_arrays(width, piece.xs, piece.ts)
    if parity is not None and len(piece.parity_classes()) != 1:
        raise TangleError("parity placement needs a single-parity piece")
    dt = drop_offset(base.xs, base.ts, piece.xs, piece.ts, width, parity, floor)
    return union([base, translate(piece, 0, dt, width)])


def drop_offset(base_xs, base_ts, piece_xs, piece_ts, width: int,
                parity: int | None = None, floor: int | None = None) -> int:
    """Time shift used by :func:`drop`, on raw coordinate arrays (both non-empty)."""
    lo = int(base_ts.min()) if floor is None else floor
    pmin = int(piece_ts.min())
    dt = lo - pmin
    col = np.full(width + 2, np.iinfo(np.int64).min // 4, dtype=np.int64)
    np.maximum.at(col, base_xs, base_ts)
    need = np.maximum(np.maximum(col[:-2], col[1:-1]), col[2:])  # need[x-1] for x = 1..width
    dt = max(dt, int((need[piece_xs - 1] - piece_ts).max()) + 1)
    if parity is not None and (int(piece_xs[0] + piece_ts[0]) + dt - parity) % 2:
        dt += 1
    return dt


def mirror(T: Tangle) -> Tangle:
    """Left-right reflection; performs the mirror conjugate of the original."""
    return Tangle.from_arrays(T.width, T.width - T.xs, T.ts)


def time_reverse(T: Tangle) -> Tangle:
    """Top-bottom reflection; performs the inverse of the original."""
    return Tangle.from_arrays(T.width, T.xs, -T.ts)


# -- file format --------------------------------------------------------------


def dumps(T: Tangle) -> str:
    """Text form: ``width <n>`` then ``t <time>: <x1> <x2> ...`` for every time step."""
    T = T.canonical()
    lines = [f"width {T.width}"]
    for t, xs in T.rows():
        lines.append(f"t {t}:" + "".join(f" {x}" for x in xs.tolist()))
    return "\n".join(lines) + "\n"


def loads(text: str) -> Tangle:
    """Parse the text form, or the JSON mirror ``{"width": n, "swaps": [[x, t], ...]}``."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        data = json.loads(stripped)
        return Tangle(int(data["width"]), [(int(x), int(t)) for x, t in data["swaps"]])
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("width "):
        raise TangleError("missing 'width <n>' header")
    try:
        width = int(lines[0].split()[1])
    except (IndexError, ValueError) as exc:
        raise TangleError(f"bad header {lines[0]!r}") from exc
    swaps = []
    seen = set()
    for ln in lines[1:]:
        head, sep, rest = ln.partition(":")
        parts = head.split()
        if not sep or len(parts) != 2 or parts[0] != "t":
            raise TangleError(f"bad row {ln!r}")
        try:
            t = int(parts[1])
            xs = [int(v) for v in rest.split()]
        except ValueError as exc:
            raise TangleError(f"bad row {ln!r}") from exc
        if t in seen:
            raise TangleError(f"time step {t} listed twice")
        seen.add(t)
        if len(set(xs)) != len(xs):
            raise TangleError(f"overlapping swaps at time {t}: repeated position")
        swaps.extend((x, t) for x in xs)
    return Tangle(width, swaps)


def dump(T: Tangle, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(dumps(T))


def load(path) -> Tangle:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())
