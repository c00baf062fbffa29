"""List decoding of a received (n-1)-bit word against one residue class."""

from __future__ import annotations

from dataclasses import dataclass

from .channel import ErrorEvent, Substitution, WeightWindowError, classify_weight_delta
from .code import CodeParams, matches_value
from .words import Word, delete_bit, flip_bit, get_bit, insert_bit

__all__ = [
    "DecodeResult",
    "ListBoundError",
    "all_witnesses",
    "canonical_witness",
    "list_decode_brute",
    "list_decode",
]


class ListBoundError(RuntimeError):
    """More than two codewords cover one received word: the class is broken."""


@dataclass(frozen=True)
class DecodeResult:
    """Candidate codewords (at most two) with canonical witnesses.

    `examined` counts membership tests and is the cost knob the pruned
    decoder is measured by.
    """

    candidates: list[tuple[Word, ErrorEvent]]
    examined: int

    @property
    def words(self) -> list[Word]:
        return [w for w, _ in self.candidates]


def all_witnesses(x: Word, y: Word) -> list[ErrorEvent]:
    """Every event mapping x to y: substitution events first, then by (d, e)."""
    n = x.n
    if y.n != n - 1:
        raise ValueError(f"received length {y.n} does not fit original length {n}")
    subs = []
    dels = []
    for d in range(1, n + 1):
        base = delete_bit(x.value, n, d)
        diff = base ^ y.value
        if diff == 0:
            dels.append(ErrorEvent(d, None))
        elif diff & (diff - 1) == 0:
            # One mismatch after the deletion: a single flip explains it.
            q = n - diff.bit_length()  # 1-based position of the mismatch in y
            subs.append(ErrorEvent(d, q if q < d else q + 1))
    return subs + dels


def canonical_witness(x: Word, y: Word) -> ErrorEvent:
    """Deterministic witness: smallest (d, e) with a substitution when one exists."""
    witnesses = all_witnesses(x, y)
    if not witnesses:
        raise ValueError(f"{y} is not reachable from {x}")
    return witnesses[0]


def _collect(found: set[int], y: Word, p: CodeParams, examined: int) -> DecodeResult:
    words = [Word(p.n, v) for v in sorted(found)]
    if len(words) > 2:
        raise ListBoundError(
            f"{len(words)} codewords of {p} reach {y}; the two-candidate bound is broken"
        )
    return DecodeResult([(w, canonical_witness(w, y)) for w in words], examined)


def list_decode_brute(y: Word, p: CodeParams) -> DecodeResult:
    """Definitional decoder: insert one bit anywhere, flip at most one other, filter.

    Candidates number 2n^2; membership filtering keeps exactly the
    codewords whose corruption ball contains y.
    """
    n = p.n
    if y.n != n - 1:
        raise ValueError(f"received length {y.n} does not fit code length {n}")
    examined = 0
    found: set[int] = set()
    for d in range(1, n + 1):
        for b in (0, 1):
            base = insert_bit(y.value, n - 1, d, b)
            examined += 1
            if matches_value(p, base):
                found.add(base)
            for e in range(1, n + 1):
                if e == d:
                    continue
                cand = flip_bit(base, n, e)
                examined += 1
                if matches_value(p, cand):
                    found.add(cand)
    return _collect(found, y, p, examined)


def list_decode(y: Word, p: CodeParams) -> DecodeResult:
    """Weight-pruned decoder; extensionally equal to list_decode_brute.

    The received weight determines the deleted symbol and the substitution
    direction, so only one insertion value and one flip direction survive:
    about a quarter of the brute-force candidates.
    """
    n = p.n
    if y.n != n - 1:
        raise ValueError(f"received length {y.n} does not fit code length {n}")
    try:
        cls = classify_weight_delta(p.c0, y.weight, n)
    except WeightWindowError:
        return DecodeResult([], 0)
    inserted = cls.deleted_value
    # The substitution happened on the way out; decoding flips it back.
    flip_from = 1 if cls.substitution is Substitution.ZERO_TO_ONE else 0
    examined = 0
    found: set[int] = set()
    for d in range(1, n + 1):
        base = insert_bit(y.value, n - 1, d, inserted)
        for e in range(1, n + 1):
            if e == d or get_bit(base, n, e) != flip_from:
                continue
            cand = flip_bit(base, n, e)
            examined += 1
            if matches_value(p, cand):
                found.add(cand)
    return _collect(found, y, p, examined)
