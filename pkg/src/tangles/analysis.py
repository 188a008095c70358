"""
Batch measurements over permutation corpora.

Every number in a :class:`StatsRecord` is recomputed from the tangle that a
construction returns; nothing is copied from the construction's own claims.
The summaries are descriptive only.
"""

from __future__ import annotations

import csv
import hashlib
import itertools
import random
import statistics
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, fields
from typing import IO, Iterable, Iterator, Sequence

from .construct import ALGORITHMS
from .perm import Perm, format_perm

__all__ = [
    "StatsRecord", "SummaryRow", "CSV_HEADER", "sample_permutations",
    "measure_one", "run_corpus", "tradeoff_summary", "write_csv", "read_csv",
    "perm_hash",
]

EXHAUSTIVE = "exhaustive"


@dataclass(frozen=True)
class StatsRecord:
    n: int
    perm_hash: str
    algorithm: str
    seed: int | None
    total_moves: int
    max_moves_per_path: int
    corners: int
    clusters: int
    depth: int
    simple: bool
    # wall-clock time is the one field that differs between runs
    runtime_s: float = field(default=0.0, compare=False)


CSV_HEADER = tuple(f.name for f in fields(StatsRecord))


def perm_hash(pi: Sequence[int]) -> str:
    return hashlib.sha1(format_perm(pi).encode()).hexdigest()[:16]


def sample_permutations(n: int, samples: int | str, seed: int | None) -> list[Perm]:
    """All of S_n for ``samples="exhaustive"``, else seeded Fisher-Yates shuffles."""
    if samples == EXHAUSTIVE:
        return list(itertools.permutations(range(1, n + 1)))
    rng = random.Random(f"{seed}:{n}")
    out = []
    for _ in range(int(samples)):
        p = list(range(1, n + 1))
        rng.shuffle(p)
        out.append(tuple(p))
    return out


def measure_one(job: tuple[str, Perm, int | None]) -> StatsRecord:
    algorithm, pi, seed = job
    started = time.perf_counter()
    T = ALGORITHMS[algorithm](pi)
    if T.performs != tuple(pi):
        raise AssertionError(f"{algorithm} does not perform {format_perm(pi)}")
    return StatsRecord(
        n=len(pi), perm_hash=perm_hash(pi), algorithm=algorithm, seed=seed,
        total_moves=T.total_moves, max_moves_per_path=T.max_moves,
        corners=T.corner_count, clusters=T.cluster_count, depth=T.depth,
        simple=T.is_simple, runtime_s=time.perf_counter() - started,
    )


def run_corpus(algorithms: Iterable[str], sizes: Iterable[int], samples: int | str = EXHAUSTIVE,
               seed: int | None = 0, workers: int = 1) -> Iterator[StatsRecord]:
    """One record per (algorithm, permutation), ordered by size, then algorithm, then sample.

    Every algorithm sees the same permutations.  ``workers > 1`` spreads the
    jobs over processes; the output order does not depend on it.
    """
    algorithms = list(algorithms)
    for a in algorithms:
        if a not in ALGORITHMS:
            raise ValueError(f"unknown algorithm {a!r}")
    jobs = [(a, pi, None if samples == EXHAUSTIVE else seed)
            for n in sizes
            for perms in [sample_permutations(n, samples, seed)]
            for a in algorithms
            for pi in perms]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            yield from pool.map(measure_one, jobs, chunksize=16)
    else:
        yield from map(measure_one, jobs)


@dataclass(frozen=True)
class SummaryRow:
    n: int
    algorithm: str
    count: int
    mean_corners: float
    max_corners: int
    mean_clusters: float
    min_clusters: int


def tradeoff_summary(records: Iterable[StatsRecord]) -> list[SummaryRow]:
    """Corner and cluster statistics per (n, algorithm)."""
    groups: dict[tuple[int, str], list[StatsRecord]] = {}
    for r in records:
        groups.setdefault((r.n, r.algorithm), []).append(r)
    if not groups:
        raise ValueError("tradeoff_summary needs at least one record")
    rows = []
    for (n, alg), rs in sorted(groups.items()):
        corners = [r.corners for r in rs]
        clusters = [r.clusters for r in rs]
        rows.append(SummaryRow(n, alg, len(rs), statistics.fmean(corners), max(corners),
                               statistics.fmean(clusters), min(clusters)))
    return rows


def write_csv(records: Iterable[StatsRecord], fh: IO[str]) -> int:
    """Write the header and one row per record; returns the number of rows."""
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(CSV_HEADER)
    count = 0
    for r in records:
        d = asdict(r)
        d["runtime_s"] = f"{r.runtime_s:.6f}"
        d["seed"] = "" if r.seed is None else r.seed
        w.writerow([d[k] for k in CSV_HEADER])
        count += 1
    return count


def read_csv(fh: IO[str]) -> list[StatsRecord]:
    rd = csv.DictReader(fh)
    if tuple(rd.fieldnames or ()) != CSV_HEADER:
        raise ValueError(f"unexpected CSV header {rd.fieldnames}")
    out = []
    for row in rd:
        out.append(StatsRecord(
            n=int(row["n"]), perm_hash=row["perm_hash"], algorithm=row["algorithm"],
            seed=int(row["seed"]) if row["seed"] else None,
            total_moves=int(row["total_moves"]), max_moves_per_path=int(row["max_moves_per_path"]),
            corners=int(row["corners"]), clusters=int(row["clusters"]), depth=int(row["depth"]),
            simple=row["simple"] == "True", runtime_s=float(row["runtime_s"]),
        ))
    return out
