"""Constructing a code: one full scan, 16n^3 buckets, pick the biggest.

Every n-bit word (minus the two constant ones) lands in exactly one
residue class (wt mod 4, f1 mod 2n, f2 mod 2n^2).  The biggest class is
the code; pigeonhole says it holds at least (2^n - 2) / 16n^3 words, so
its redundancy stays within 3 log2(n) + 4.
"""

import time

from delsub import bucket_counts, choose_params, enumerate_code, redundancy_table

n = 16
counts = bucket_counts(n)
print(f"n={n}: {counts.size} residue classes, sizes sum to {counts.sum()} = 2^{n} - 2")
print(f"class sizes: min {counts.min()}, mean {counts.mean():.3f}, max {counts.max()}")

params, stats = choose_params(n)
print(f"winner: {params} with {stats.size} codewords, redundancy {stats.redundancy:.4f}")
print("first few codewords:")
for w in list(enumerate_code(params))[:6]:
    print(f"  {w}")
print()

print(f"{'n':>4} {'size':>8} {'redundancy':>11} {'bound':>8} {'margin':>7}")
for row in redundancy_table([8, 12, 16, 20, 24]):
    print(
        f"{row.n:>4} {row.size:>8} {row.redundancy:>11.4f} "
        f"{row.bound:>8.4f} {row.margin:>7.4f}"
    )
print()

start = time.perf_counter()
choose_params(24)
print(f"the full 2^24 scan takes {time.perf_counter() - start:.2f}s single-threaded")
