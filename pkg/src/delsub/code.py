"""The residue-class code family and its exhaustive construction scan."""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .syndromes import wt_f1_f2
from .words import Word

__all__ = [
    "SCAN_CEILING",
    "CodeParams",
    "CodeStats",
    "params_from_bucket",
    "params_of",
    "is_codeword",
    "matches_value",
    "bucket_counts",
    "choose_params",
    "codeword_values",
    "enumerate_code",
    "redundancy",
]

# Full 2^n scans are supported up to here.  n <= 28 is comfortable
# single-threaded; 29..32 want several workers and some patience.
SCAN_CEILING = 32


@dataclass(frozen=True)
class CodeParams:
    """Block length together with the (c0, c1, c2) residue triple.

    A word of length n belongs to the class when its weight is c0 mod 4,
    its first-order VT syndrome is c1 mod 2n and its second-order VT
    syndrome is c2 mod 2n^2; the two constant words are excluded.
    """

    n: int
    c0: int
    c1: int
    c2: int

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError(f"block length must be >= 2, got {self.n}")
        if not 0 <= self.c0 < 4:
            raise ValueError(f"c0 must lie in [0, 4), got {self.c0}")
        if not 0 <= self.c1 < 2 * self.n:
            raise ValueError(f"c1 must lie in [0, {2 * self.n}), got {self.c1}")
        if not 0 <= self.c2 < 2 * self.n * self.n:
            raise ValueError(f"c2 must lie in [0, {2 * self.n * self.n}), got {self.c2}")

    @property
    def bucket_index(self) -> int:
        """Position of this triple in the flat (c0, c1, c2) counter table."""
        n = self.n
        return (self.c0 * 2 * n + self.c1) * (2 * n * n) + self.c2


def params_from_bucket(n: int, index: int) -> CodeParams:
    m1 = 2 * n
    m2 = 2 * n * n
    if not 0 <= index < 4 * m1 * m2:
        raise ValueError(f"bucket index {index} out of range for n={n}")
    c2 = index % m2
    rest = index // m2
    return CodeParams(n, rest // m1, rest % m1, c2)


@dataclass(frozen=True)
class CodeStats:
    """Size of one residue class and the redundancy it implies."""

    n: int
    size: int

    @property
    def redundancy(self) -> float | None:
        """n - log2(size); None for an empty class."""
        if self.size == 0:
            return None
        return self.n - math.log2(self.size)


def redundancy(stats: CodeStats) -> float:
    """n - log2(size).  Empty classes have no defined redundancy."""
    if stats.size < 1:
        raise ValueError("empty code has undefined redundancy")
    return stats.n - math.log2(stats.size)


def params_of(x: Word) -> CodeParams:
    """The residue triple whose class would contain x."""
    wt, f1, f2 = wt_f1_f2(x.value, x.n)
    n = x.n
    return CodeParams(n, wt & 3, f1 % (2 * n), f2 % (2 * n * n))


def matches_value(p: CodeParams, value: int) -> bool:
    """Membership test on a packed value, skipping Word construction."""
    if value == 0 or value == (1 << p.n) - 1:
        return False
    wt, f1, f2 = wt_f1_f2(value, p.n)
    n = p.n
    return wt & 3 == p.c0 and f1 % (2 * n) == p.c1 and f2 % (2 * n * n) == p.c2


def is_codeword(x: Word, p: CodeParams) -> bool:
    """True iff x is non-constant and carries exactly the residues of p."""
    if x.n != p.n:
        raise ValueError(f"word length {x.n} does not match code length {p.n}")
    return matches_value(p, x.value)


def _half_tables(bit_count: int, top_position: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Per-pattern (wt, f1, f2) over all 2^bit_count patterns.

    Bit j (LSB first) of a pattern carries word position top_position - j.
    """
    size = 1 << bit_count
    idx = np.arange(size, dtype=np.uint32)
    wt = np.zeros(size, dtype=np.int32)
    f1 = np.zeros(size, dtype=np.int32)
    f2 = np.zeros(size, dtype=np.int32)
    for j in range(bit_count):
        i = top_position - j
        mask = ((idx >> j) & 1).astype(np.int32)
        wt += mask
        f1 += mask * i
        f2 += mask * (i * (i + 1) // 2)
    return wt, f1, f2


def _check_scan_n(n: int) -> None:
    if not 2 <= n <= SCAN_CEILING:
        raise ValueError(f"full scan supports 2 <= n <= {SCAN_CEILING}, got {n}")


def _hi_lo_split(n: int) -> tuple[int, int]:
    a = n // 2
    return a, n - a


def _bucket_counts_blocked(n: int, workers: int) -> np.ndarray:
    """Count all 16n^3 residue classes by combining two half-word tables.

    Words split into a high half (positions 1..a) and a low half; the
    syndrome of a word is the sum of its halves' contributions, so one
    broadcast add per chunk covers 2^a x 2^b words at vector speed.
    """
    a, b = _hi_lo_split(n)
    wt_hi, f1_hi, f2_hi = _half_tables(a, a)
    wt_lo, f1_lo, f2_lo = _half_tables(b, n)
    m1 = 2 * n
    m2 = 2 * n * n
    buckets = 4 * m1 * m2
    rows_per_chunk = max(1, (1 << 22) >> b)

    def scan(lo_row: int, hi_row: int) -> np.ndarray:
        counts = np.zeros(buckets, dtype=np.int64)
        for r0 in range(lo_row, hi_row, rows_per_chunk):
            r1 = min(r0 + rows_per_chunk, hi_row)
            c0 = (wt_hi[r0:r1, None] + wt_lo[None, :]) & 3
            c1 = (f1_hi[r0:r1, None] + f1_lo[None, :]) % m1
            c2 = (f2_hi[r0:r1, None] + f2_lo[None, :]) % m2
            idx = (c0 * m1 + c1) * m2 + c2
            counts += np.bincount(idx.ravel(), minlength=buckets)
        return counts

    if workers <= 1:
        return scan(0, 1 << a)
    bounds = np.linspace(0, 1 << a, workers + 1).astype(int)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(lambda r: scan(*r), zip(bounds[:-1], bounds[1:])))
    total = np.zeros(buckets, dtype=np.int64)
    for part in parts:
        total += part  # exact integer merge: order-independent
    return total


def _bucket_counts_gray(n: int) -> np.ndarray:
    """Reference scan visiting words in Gray-code order.

    Each step flips one bit, so (wt, f1, f2) move by (+-1, +-i, +-i(i+1)/2)
    for the flipped position i.  Slower than the blocked scan but checkable
    against it, and the incremental updates are exercised on every word.
    """
    m1 = 2 * n
    m2 = 2 * n * n
    counts = [0] * (4 * m1 * m2)
    counts[0] = 1  # word 0^n, visited at step 0
    wt = f1 = f2 = 0
    g = 0
    for k in range(1, 1 << n):
        bit = (k & -k).bit_length() - 1
        g ^= 1 << bit
        i = n - bit
        if g >> bit & 1:
            wt += 1
            f1 += i
            f2 += i * (i + 1) >> 1
        else:
            wt -= 1
            f1 -= i
            f2 -= i * (i + 1) >> 1
        counts[((wt & 3) * m1 + f1 % m1) * m2 + f2 % m2] += 1
    return np.asarray(counts, dtype=np.int64)


def _strip_constant_words(counts: np.ndarray, n: int) -> None:
    # 0^n and 1^n are excluded from every class by definition.
    counts[0] -= 1
    wt = n
    f1 = n * (n + 1) // 2
    f2 = n * (n + 1) * (n + 2) // 6
    counts[((wt & 3) * 2 * n + f1 % (2 * n)) * (2 * n * n) + f2 % (2 * n * n)] -= 1


def bucket_counts(n: int, *, engine: str = "blocked", workers: int = 1) -> np.ndarray:
    """Size of every residue class, the two constant words excluded.

    The flat layout is index = (c0 * 2n + c1) * 2n^2 + c2, so ascending
    index order is lexicographic (c0, c1, c2) order.
    """
    _check_scan_n(n)
    if engine == "blocked":
        counts = _bucket_counts_blocked(n, workers)
    elif engine == "gray":
        counts = _bucket_counts_gray(n)
    else:
        raise ValueError(f"unknown engine {engine!r}; expected 'blocked' or 'gray'")
    _strip_constant_words(counts, n)
    return counts


def choose_params(
    n: int, *, workers: int = 1, engine: str = "blocked"
) -> tuple[CodeParams, CodeStats]:
    """Largest residue class at length n; ties break to the smallest triple.

    One full scan of {0,1}^n bucket-counts the 16n^3 classes, so the
    winner holds at least (2^n - 2) / 16n^3 words.  The result does not
    depend on the worker count.
    """
    counts = bucket_counts(n, engine=engine, workers=workers)
    best = int(np.argmax(counts))  # first maximum = smallest (c0, c1, c2)
    return params_from_bucket(n, best), CodeStats(n, int(counts[best]))


def codeword_values(p: CodeParams, *, workers: int = 1) -> np.ndarray:
    """All members of the class as packed values, ascending."""
    n = p.n
    _check_scan_n(n)
    a, b = _hi_lo_split(n)
    wt_hi, f1_hi, f2_hi = _half_tables(a, a)
    wt_lo, f1_lo, f2_lo = _half_tables(b, n)
    m1 = 2 * n
    m2 = 2 * n * n
    rows_per_chunk = max(1, (1 << 22) >> b)

    def scan(lo_row: int, hi_row: int) -> list[np.ndarray]:
        parts = []
        for r0 in range(lo_row, hi_row, rows_per_chunk):
            r1 = min(r0 + rows_per_chunk, hi_row)
            hit = (
                ((wt_hi[r0:r1, None] + wt_lo[None, :]) & 3 == p.c0)
                & ((f1_hi[r0:r1, None] + f1_lo[None, :]) % m1 == p.c1)
                & ((f2_hi[r0:r1, None] + f2_lo[None, :]) % m2 == p.c2)
            )
            rows, cols = np.nonzero(hit)
            if rows.size:
                parts.append(((rows.astype(np.uint64) + r0) << b) | cols.astype(np.uint64))
        return parts

    if workers <= 1:
        parts = scan(0, 1 << a)
    else:
        bounds = np.linspace(0, 1 << a, workers + 1).astype(int)
        with ThreadPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(lambda r: scan(*r), zip(bounds[:-1], bounds[1:])))
        parts = [arr for chunk in chunks for arr in chunk]

    if not parts:
        return np.empty(0, dtype=np.uint64)
    values = np.concatenate(parts)  # ascending: chunks are scanned in order
    top = np.uint64((1 << n) - 1)
    return values[(values != 0) & (values != top)]


def enumerate_code(p: CodeParams, *, workers: int = 1) -> Iterator[Word]:
    """Codewords in ascending numeric order (position 1 = most significant bit)."""
    for v in codeword_values(p, workers=workers):
        yield Word(p.n, int(v))
