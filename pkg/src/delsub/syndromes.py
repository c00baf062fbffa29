"""Weights, higher-order VT syndromes, and suffix-weight difference vectors."""

from __future__ import annotations

from typing import NamedTuple, Sequence

from .words import Word, get_bit

__all__ = [
    "SyndromeVector",
    "SuffixDiff",
    "weight",
    "wt_f1_f2",
    "vt_syndrome",
    "vt_syndrome_from_suffix_sums",
    "syndrome_vector",
    "suffix_diff",
    "sign_segments_ok",
]

SuffixDiff = tuple[int, ...]


class SyndromeVector(NamedTuple):
    """Reduced syndrome triple (wt mod 4, f1 mod 2n, f2 mod 2n^2)."""

    weight_mod4: int
    f1_mod: int
    f2_mod: int
    n: int


def weight(x: Word) -> int:
    """Number of 1-symbols in x."""
    return x.value.bit_count()


def wt_f1_f2(value: int, n: int) -> tuple[int, int, int]:
    """Exact (weight, f1, f2) of a packed n-bit value.

    f1 sums the positions of the 1-bits, f2 sums i(i+1)/2 over those
    positions.  Every hot loop funnels through here, so it walks set
    bits only.
    """
    wt = f1 = f2 = 0
    v = value
    while v:
        low = v & -v
        i = n - low.bit_length() + 1
        wt += 1
        f1 += i
        f2 += i * (i + 1) >> 1
        v ^= low
    return wt, f1, f2


def vt_syndrome(x: Word, j: int) -> int:
    """j-th order VT syndrome, exact: the coefficient of x_i is 1^(j-1) + ... + i^(j-1).

    f1 is the classic VT checksum (coefficient i), f2 its second-order
    analogue (coefficient i(i+1)/2).
    """
    if j < 1:
        raise ValueError(f"syndrome order must be >= 1, got {j}")
    coeff = 0
    total = 0
    for i in range(1, x.n + 1):
        coeff += i ** (j - 1)
        if get_bit(x.value, x.n, i):
            total += coeff
    return total


def vt_syndrome_from_suffix_sums(x: Word, j: int) -> int:
    """Same syndrome from the rearranged sum: (suffix weight from i) * i^(j-1).

    Kept as an independent route so the two summation orders can be
    cross-checked against each other.
    """
    if j < 1:
        raise ValueError(f"syndrome order must be >= 1, got {j}")
    suffix = 0
    total = 0
    for i in range(x.n, 0, -1):
        suffix += get_bit(x.value, x.n, i)
        total += suffix * i ** (j - 1)
    return total


def syndrome_vector(x: Word) -> SyndromeVector:
    """Canonical nonnegative residues (wt mod 4, f1 mod 2n, f2 mod 2n^2)."""
    wt, f1, f2 = wt_f1_f2(x.value, x.n)
    n = x.n
    return SyndromeVector(wt & 3, f1 % (2 * n), f2 % (2 * n * n), n)


def suffix_diff(x: Word, x2: Word) -> SuffixDiff:
    """u with u_i = (suffix weight of x from i) - (suffix weight of x2 from i).

    u is the all-zero vector exactly when x == x2.
    """
    if x.n != x2.n:
        raise ValueError(f"length mismatch: {x.n} vs {x2.n}")
    u = []
    a = b = 0
    for i in range(x.n, 0, -1):
        a += get_bit(x.value, x.n, i)
        b += get_bit(x2.value, x2.n, i)
        u.append(a - b)
    u.reverse()
    return tuple(u)


def sign_segments_ok(
    u: Sequence[int],
    breakpoints: Sequence[int],
    *,
    first_segment_from_one: bool = True,
) -> bool:
    """True iff every segment cut by the breakpoints is sign-constant.

    Breakpoints p_1 < ... < p_m split [1, n] into segments ending at each
    p_j and finally at n; a segment passes when it does not contain both a
    positive and a negative entry (zeros are compatible with either sign).
    By default the first segment starts at position 1, the stricter of the
    two conventions; with first_segment_from_one=False it starts at
    position 2, leaving u_1 unconstrained.
    """
    n = len(u)
    bps = list(breakpoints)
    if any(not 1 <= p <= n for p in bps):
        raise ValueError(f"breakpoints out of range [1, {n}]: {bps}")
    if any(bps[k] >= bps[k + 1] for k in range(len(bps) - 1)):
        raise ValueError(f"breakpoints must be strictly ascending: {bps}")
    starts = [1 if first_segment_from_one else 2] + [p + 1 for p in bps]
    ends = bps + [n]
    for a, b in zip(starts, ends):
        seg = u[a - 1 : b]
        if any(v > 0 for v in seg) and any(v < 0 for v in seg):
            return False
    return True
