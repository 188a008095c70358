"""
Corners against clusters
========================

Run each construction over a seeded sample of permutations and compare
how many corners they make and how those corners bunch together.
"""

import sys

from tangles.analysis import run_corpus, tradeoff_summary, write_csv

records = list(run_corpus(["fish", "linear", "log"], [16, 64], samples=50, seed=1))

for row in tradeoff_summary(records):
    print(f"n={row.n:<3} {row.algorithm:7} corners {row.mean_corners:8.1f} (max {row.max_corners:5})"
          f"  clusters {row.mean_clusters:6.1f} (min {row.min_clusters})")

# the raw rows, as the stats command writes them
write_csv(records[:5], sys.stdout)
