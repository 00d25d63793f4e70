"""Count ring operations of each algorithm and compare with its bound.

The linear recurrence grows with n while the Fibonacci-based routes grow
with log(n / k). Run with an optional list of sizes, e.g.
``python demos/operation_counts.py 100 10000 1000000``.
"""

import sys

from ktoeplitz.benchmark import run_grid

ns = [int(x) for x in sys.argv[1:]] or [100, 1000, 10_000, 100_000]
rows = run_grid(["d1", "d2", "d3", "d3-total", "eig", "entry"], ns, [2, 3, 5, 8])

print(f"{'algo':9} {'n':>8} {'k':>2} {'ops':>8} {'int':>4} {'bound':>10}  ok")
for row in rows:
    K = "-" if row.K is None else row.K
    Zc = "-" if row.Z is None else row.Z
    print(f"{row.algo:9} {row.n:>8} {row.k:>2} {K:>8} {Zc:>4} {row.bound!s:>10}  {row.ok}")
