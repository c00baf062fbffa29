"""Exhaustive desk-scale verification of the construction's guarantees.

Everything here is enumeration, not proof: corruption balls of whole
classes are intersected, syndrome-equal word pairs are scanned for
sign-splittable difference vectors, and the weight-drop table is checked
on every word/event combination.  Sampled shortcuts live only in the
separate smoke mode and are labeled as such.
"""

from __future__ import annotations

import math
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .channel import (
    WEIGHT_DELTA_TABLE,
    ErrorEvent,
    Substitution,
    classify_weight_delta,
    iter_events,
)
from .code import CodeParams, CodeStats, choose_params, codeword_values, redundancy
from .decoder import DecodeResult, ListBoundError, all_witnesses, list_decode
from .syndromes import suffix_diff, vt_syndrome
from .words import Word, delete_bit, flip_bit, get_bit

__all__ = [
    "VERIFY_CEILING",
    "Collision",
    "VerifyReport",
    "CollisionOrderingResult",
    "SignSplitResult",
    "RedundancyRow",
    "verify_list_size",
    "verify_collision_ordering",
    "verify_single_deletion",
    "verify_sign_split",
    "verify_weight_deltas",
    "redundancy_table",
    "classify_case",
    "witness_pair_cases",
    "predicted_suffix_profile",
    "full_report",
    "smoke_report",
]

# Ball-coverage checks scan the whole class and its corruption balls.
VERIFY_CEILING = 28


@dataclass(frozen=True)
class Collision:
    """Two codewords whose corruption balls share the received word y."""

    x: Word
    x_prime: Word
    y: Word
    witness1: ErrorEvent
    witness2: ErrorEvent


@dataclass
class VerifyReport:
    """Outcome of the per-class checks; None marks a check that did not run."""

    params: CodeParams
    code_size: int
    redundancy: float | None
    max_list_size: int | None = None
    collision_count: int | None = None
    collision_pairs: list[Collision] = field(default_factory=list)
    lemma2_violations: int | None = None
    single_deletion_ok: bool | None = None
    elapsed: float = 0.0


def _ball_values(x: int, n: int) -> set[int]:
    """Corruption ball of a packed value: every deletion, then any one flip."""
    out: set[int] = set()
    for d in range(1, n + 1):
        base = delete_bit(x, n, d)
        out.add(base)
        for q in range(n - 1):
            out.add(base ^ (1 << q))
    return out


def _add_cover(cover: dict[int, tuple[int, ...]], y: int, x: int) -> None:
    # Keep the three smallest covering codewords: enough to tell 2 from
    # broken, and independent of scan partitioning.
    cur = cover.get(y)
    if cur is None:
        cover[y] = (x,)
    elif x not in cur:
        cover[y] = tuple(sorted(cur + (x,)))[:3]


def _coverage(values: Sequence[int], n: int, workers: int) -> dict[int, tuple[int, ...]]:
    """Received value -> covering codewords (three smallest kept)."""

    def scan(chunk: Sequence[int]) -> dict[int, tuple[int, ...]]:
        cov: dict[int, tuple[int, ...]] = {}
        for x in chunk:
            for y in _ball_values(x, n):
                _add_cover(cov, y, x)
        return cov

    vals = [int(v) for v in values]
    if workers <= 1:
        return scan(vals)
    bounds = np.linspace(0, len(vals), workers + 1).astype(int)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(scan, [vals[a:b] for a, b in zip(bounds[:-1], bounds[1:])]))
    merged: dict[int, tuple[int, ...]] = {}
    for part in parts:
        for y, xs in part.items():
            for x in xs:
                _add_cover(merged, y, x)
    return merged


def _check_verify_n(n: int) -> None:
    if n > VERIFY_CEILING:
        raise ValueError(f"ball-coverage checks support n <= {VERIFY_CEILING}, got {n}")


def _collisions(
    cover: dict[int, tuple[int, ...]], n: int, limit: int
) -> tuple[int, list[Collision]]:
    hits = sorted((y, xs) for y, xs in cover.items() if len(xs) >= 2)
    records: list[Collision] = []
    count = 0
    for y, xs in hits:
        yw = Word(n - 1, y)
        for a, b in combinations(xs, 2):
            count += 1
            if len(records) < limit:
                xa, xb = Word(n, a), Word(n, b)
                wa = all_witnesses(xa, yw)[0]
                wb = all_witnesses(xb, yw)[0]
                if wa.d > wb.d:  # present with d1 <= d2
                    xa, xb, wa, wb = xb, xa, wb, wa
                records.append(Collision(xa, xb, yw, wa, wb))
    return count, records


def verify_list_size(
    p: CodeParams, *, workers: int = 1, max_collisions: int = 100
) -> VerifyReport:
    """Intersect every codeword's corruption ball; report the worst overlap.

    max_list_size <= 2 is the pass condition.  Collision records are
    capped at max_collisions; the count stays exact.
    """
    _check_verify_n(p.n)
    start = time.perf_counter()
    values = codeword_values(p, workers=workers)
    cover = _coverage(values, p.n, workers)
    stats = CodeStats(p.n, len(values))
    count, records = _collisions(cover, p.n, max_collisions)
    report = VerifyReport(
        params=p,
        code_size=stats.size,
        redundancy=stats.redundancy,
        max_list_size=max((len(xs) for xs in cover.values()), default=0),
        collision_count=count,
        collision_pairs=records,
    )
    report.elapsed = time.perf_counter() - start
    return report


def classify_case(d1: int, e1: int, d2: int, e2: int) -> str:
    """Merged ordering case of the four positions, assuming d1 <= d2.

    Only case "iv" (both substitutions strictly between the deletions,
    d1 < e1 <= d2 and d1 <= e2 < d2) can occur for two distinct members
    of one class; every other case forces the words to be equal.
    """
    if d1 > d2:
        raise ValueError("expected d1 <= d2")
    if e1 == d1 or e2 == d2:
        raise ValueError("substitution positions must differ from their deletions")
    a = 1 if e1 < d1 else (2 if e1 <= d2 else 3)
    b = 1 if e2 < d1 else (2 if e2 < d2 else 3)
    return {
        (1, 1): "i",
        (1, 2): "ii",
        (2, 1): "ii",
        (1, 3): "iii",
        (3, 1): "iii",
        (2, 2): "iv",
        (2, 3): "v",
        (3, 2): "v",
        (3, 3): "vi",
    }[(a, b)]


def witness_pair_cases(
    x: Word, x_prime: Word, y: Word
) -> list[tuple[str, ErrorEvent, ErrorEvent]]:
    """Ordering case of every substitution-witness pair, relabeled so d1 <= d2.

    The returned events follow the relabeled order: the first event is the
    one with the smaller deletion position (taken from x or x_prime as
    needed).
    """
    wits_x = [w for w in all_witnesses(x, y) if w.e is not None]
    wits_xp = [w for w in all_witnesses(x_prime, y) if w.e is not None]
    out = []
    for wa in wits_x:
        for wb in wits_xp:
            w1, w2 = (wa, wb) if wa.d <= wb.d else (wb, wa)
            out.append((classify_case(w1.d, w1.e, w2.d, w2.e), w1, w2))
    return out


@dataclass
class CollisionOrderingResult:
    """Interleaving statistics over every collision's witness pairs."""

    collisions: int
    witness_pairs: int
    violations: int  # witness pairs falling outside case "iv"
    case_counts: dict[str, int]
    weight_mismatches: int  # colliding pairs with unequal weights
    deleted_symbol_mismatches: int  # witness pairs with x_{d1} != x'_{d2}


def verify_collision_ordering(p: CodeParams, *, workers: int = 1) -> CollisionOrderingResult:
    """Check every collision of the class against the required interleaving.

    For each pair of codewords reaching a common received word, every
    substitution-witness pair (relabeled so d1 <= d2) must satisfy
    d1 < e1 <= d2 and d1 <= e2 < d2; the deleted symbols must agree and
    the two weights must be equal.
    """
    _check_verify_n(p.n)
    values = codeword_values(p, workers=workers)
    cover = _coverage(values, p.n, workers)
    n = p.n
    collisions = pairs = violations = wt_bad = del_bad = 0
    case_counts: dict[str, int] = {}
    for y, xs in sorted(cover.items()):
        if len(xs) < 2:
            continue
        yw = Word(n - 1, y)
        for a, b in combinations(xs, 2):
            collisions += 1
            xa, xb = Word(n, a), Word(n, b)
            if xa.weight != xb.weight:
                wt_bad += 1
            wits_a = [w for w in all_witnesses(xa, yw) if w.e is not None]
            wits_b = [w for w in all_witnesses(xb, yw) if w.e is not None]
            for wa in wits_a:
                for wb in wits_b:
                    # Relabel so the first event has the smaller deletion
                    # position, swapping the words along with the events.
                    if wa.d <= wb.d:
                        w1, w2, first, second = wa, wb, a, b
                    else:
                        w1, w2, first, second = wb, wa, b, a
                    case = classify_case(w1.d, w1.e, w2.d, w2.e)
                    pairs += 1
                    case_counts[case] = case_counts.get(case, 0) + 1
                    if case != "iv":
                        violations += 1
                    if get_bit(first, n, w1.d) != get_bit(second, n, w2.d):
                        del_bad += 1
    return CollisionOrderingResult(
        collisions, pairs, violations, case_counts, wt_bad, del_bad
    )


def _deletion_balls_disjoint(values: Iterable[int], n: int) -> bool:
    seen: dict[int, int] = {}
    for x in values:
        reach = {delete_bit(x, n, d) for d in range(1, n + 1)}
        for y in reach:
            other = seen.get(y)
            if other is not None and other != x:
                return False
            seen[y] = x
    return True


def verify_single_deletion(p: CodeParams) -> bool:
    """True iff no two distinct codewords share a pure-deletion result."""
    _check_verify_n(p.n)
    return _deletion_balls_disjoint((int(v) for v in codeword_values(p)), p.n)


@dataclass
class SignSplitResult:
    """Pair-scan outcome for one (n, segment count) setting."""

    n: int
    m: int
    pairs_checked: int  # distinct pairs with equal exact syndromes f1..f_{m+1}
    counterexamples: int  # splittable pairs, first segment anchored at 1
    relaxed_counterexamples: int  # same with the first segment starting at 2


def _splittable(u: Sequence[int], m: int, first_from_one: bool) -> bool:
    """Can m breakpoints cut u into sign-constant segments?"""
    n = len(u)
    pos = [0] * (n + 1)
    neg = [0] * (n + 1)
    for i, v in enumerate(u, 1):
        pos[i] = pos[i - 1] + (v > 0)
        neg[i] = neg[i - 1] + (v < 0)

    def ok(a: int, b: int) -> bool:
        if a > b:
            return True
        return not (pos[b] - pos[a - 1] and neg[b] - neg[a - 1])

    start = 1 if first_from_one else 2
    if m == 1:
        return any(ok(start, p1) and ok(p1 + 1, n) for p1 in range(1, n + 1))
    return any(
        ok(start, p1) and ok(p1 + 1, p2) and ok(p2 + 1, n)
        for p1 in range(1, n)
        for p2 in range(p1 + 1, n + 1)
    )


def verify_sign_split(n: int, m: int) -> SignSplitResult:
    """Scan all pairs with equal exact syndromes for splittable difference vectors.

    A counterexample is a pair of distinct words whose f1..f_{m+1} agree
    as exact integers and whose suffix-difference vector can be cut into
    m+1 sign-constant segments; zero counterexamples means equal syndromes
    plus a sign split force equality.  Words are bucketed by syndrome
    tuple first, so only genuinely colliding pairs are compared.
    """
    if m not in (1, 2):
        raise ValueError(f"segment parameter must be 1 or 2, got {m}")
    if not 1 <= n <= 14:
        raise ValueError(f"double-exhaustive scan supports n <= 14, got {n}")
    buckets: dict[tuple[int, ...], list[int]] = {}
    for v in range(1 << n):
        w = Word(n, v)
        key = tuple(vt_syndrome(w, j) for j in range(1, m + 2))
        buckets.setdefault(key, []).append(v)
    pairs = strict = relaxed = 0
    for group in buckets.values():
        for a, b in combinations(group, 2):
            u = suffix_diff(Word(n, a), Word(n, b))
            pairs += 1
            if _splittable(u, m, True):
                strict += 1
            if _splittable(u, m, False):
                relaxed += 1
    return SignSplitResult(n, m, pairs, strict, relaxed)


def verify_weight_deltas(n: int) -> int:
    """Check the weight-drop table and the one-substitution re-expression.

    Brute force over every word and every event: the weight drop must
    match the (deleted symbol, substitution) table row, and for every
    non-constant word each reachable received word must also be reachable
    by an event using exactly the symbols the received weight implies.
    Returns the number of violations.
    """
    if not 2 <= n <= 12:
        raise ValueError(f"event-exhaustive check supports 2 <= n <= 12, got {n}")
    violations = 0
    for v in range(1 << n):
        wt_x = v.bit_count()
        by_y: dict[int, list[ErrorEvent]] = {}
        for ev in iter_events(n):
            w = v if ev.e is None else flip_bit(v, n, ev.e)
            y = delete_bit(w, n, ev.d)
            if ev.e is None:
                sub = Substitution.NONE
            elif get_bit(v, n, ev.e) == 0:
                sub = Substitution.ZERO_TO_ONE
            else:
                sub = Substitution.ONE_TO_ZERO
            if wt_x - y.bit_count() != WEIGHT_DELTA_TABLE[(get_bit(v, n, ev.d), sub)]:
                violations += 1
            by_y.setdefault(y, []).append(ev)
        if v == 0 or v == (1 << n) - 1:
            continue  # constant words are exempt from the re-expression clause
        for y, events in by_y.items():
            cls = classify_weight_delta(wt_x & 3, y.bit_count(), n)
            wanted_from = 0 if cls.substitution is Substitution.ZERO_TO_ONE else 1
            if not any(
                ev.e is not None
                and get_bit(v, n, ev.d) == cls.deleted_value
                and get_bit(v, n, ev.e) == wanted_from
                for ev in events
            ):
                violations += 1
    return violations


@dataclass(frozen=True)
class RedundancyRow:
    n: int
    size: int
    redundancy: float
    bound: float  # 3 log2 n + 4
    margin: float  # bound - redundancy; negative would break the guarantee


def redundancy_table(n_list: Iterable[int], *, workers: int = 1) -> list[RedundancyRow]:
    """Best-class redundancy against the 3 log2 n + 4 guarantee, one row per n."""
    rows = []
    for n in n_list:
        _, stats = choose_params(n, workers=workers)
        r = redundancy(stats)
        bound = 3 * math.log2(n) + 4
        rows.append(RedundancyRow(n, stats.size, r, bound, bound - r))
    return rows


def _case_lambdas(case: str, d1: int, e1: int, d2: int, e2: int) -> tuple[int, int]:
    if case in ("i", "iii", "vi"):
        return min(e1, e2), max(e1, e2)
    if case == "ii":
        # e1 < d1 <= e2 < d2  or  e2 < d1 < e1 <= d2
        return (e1, e2 + 1) if e1 < d1 else (e2, e1)
    if case == "v":
        # d1 < e1 <= d2 < e2  or  d1 <= e2 < d2 < e1
        return (e1, e2) if e1 <= d2 else (e2 + 1, e1)
    raise ValueError(f"no closed-form profile for case {case!r}")


def predicted_suffix_profile(
    x: Word, x_prime: Word, w1: ErrorEvent, w2: ErrorEvent
) -> tuple[int, ...]:
    """Closed-form suffix-difference vector for a colliding pair.

    Defined for ordering cases i, ii, iii, v and vi of the witness pair
    (w1 on x, w2 on x_prime, d1 <= d2, both with substitutions); case iv
    has no closed form.  Assumes equal weights mod 4, which forces the
    deleted symbols to agree.
    """
    n = x.n
    if x_prime.n != n:
        raise ValueError("words must have equal length")
    if w1.e is None or w2.e is None:
        raise ValueError("profiles need substitution witnesses on both sides")
    d1, e1, d2, e2 = w1.d, w1.e, w2.d, w2.e
    case = classify_case(d1, e1, d2, e2)
    lam1, lam2 = _case_lambdas(case, d1, e1, d2, e2)
    xb = x.bit
    pb = x_prime.bit
    u = [0] * (n + 1)  # 1-based

    def fill(lo: int, hi: int, val) -> None:
        for i in range(lo, hi + 1):
            u[i] = val(i) if callable(val) else val

    if case == "i":
        fill(lam1 + 1, lam2, xb(lam2) - pb(lam2))
        fill(d1 + 1, d2, lambda i: xb(i) - pb(d2))
    elif case == "ii":
        step = xb(lam2) - pb(lam2 - 1)
        fill(lam1 + 1, d1, step)
        fill(d1 + 1, lam2 - 1, lambda i: xb(i) + step - pb(d2))
        fill(lam2, d2, lambda i: xb(i) - pb(d2))
    elif case == "iii":
        step = xb(lam2) - pb(lam2)
        fill(lam1 + 1, d1, step)
        fill(d1 + 1, d2, lambda i: xb(i) + step - pb(d2))
        fill(d2 + 1, lam2, step)
    elif case == "v":
        step = xb(lam2) - pb(lam2)
        fill(d1 + 1, lam1 - 1, lambda i: xb(i) - pb(d2))
        fill(lam1, d2, lambda i: xb(i) + step - pb(d2))
        fill(d2 + 1, lam2, step)
    else:  # case "vi"
        fill(d1 + 1, d2, lambda i: xb(i) - pb(d2))
        fill(lam1 + 1, lam2, xb(lam2) - pb(lam2))
    return tuple(u[1:])


def _params_dict(p: CodeParams) -> dict:
    return {"c0": p.c0, "c1": p.c1, "c2": p.c2}


ALL_CHECKS = ("list2", "lemma2", "sign", "table1", "deletion")
DEFAULT_CHECKS = ("list2", "lemma2", "deletion")


def full_report(
    n: int,
    params: CodeParams | None = None,
    *,
    checks: Sequence[str] = DEFAULT_CHECKS,
    workers: int = 1,
    max_collisions: int = 100,
    timing: bool = False,
) -> tuple[dict, bool]:
    """Run the selected checks and assemble one report dict.

    Returns (report, passed).  Timing is opt-in so identical runs emit
    byte-identical JSON.
    """
    unknown = [c for c in checks if c not in ALL_CHECKS]
    if unknown:
        raise ValueError(f"unknown checks {unknown}; available: {', '.join(ALL_CHECKS)}")
    start = time.perf_counter()
    auto = params is None
    if auto:
        params, _ = choose_params(n, workers=workers)
    elif params.n != n:
        raise ValueError(f"params are for n={params.n}, not n={n}")

    values = codeword_values(params)
    stats = CodeStats(n, len(values))
    report: dict = {
        "n": n,
        "params": _params_dict(params),
        "auto_params": auto,
        "checks": list(checks),
        "code_size": stats.size,
        "redundancy": stats.redundancy,
        "max_list_size": None,
        "collision_count": None,
        "collision_pairs": None,
        "lemma2_violations": None,
        "sign_counterexamples": None,
        "table1_violations": None,
        "single_deletion_ok": None,
    }
    passed = True

    if "list2" in checks:
        r = verify_list_size(params, workers=workers, max_collisions=max_collisions)
        report["max_list_size"] = r.max_list_size
        report["collision_count"] = r.collision_count
        report["collision_pairs"] = [
            {
                "y": str(c.y),
                "x": str(c.x),
                "x_prime": str(c.x_prime),
                "d1": c.witness1.d,
                "e1": c.witness1.e,
                "d2": c.witness2.d,
                "e2": c.witness2.e,
            }
            for c in r.collision_pairs
        ]
        passed &= r.max_list_size <= 2
    if "lemma2" in checks:
        r = verify_collision_ordering(params, workers=workers)
        report["lemma2_violations"] = r.violations
        report["lemma2_cases"] = dict(sorted(r.case_counts.items()))
        report["lemma2_weight_mismatches"] = r.weight_mismatches
        report["lemma2_deleted_symbol_mismatches"] = r.deleted_symbol_mismatches
        passed &= (
            r.violations == 0
            and r.weight_mismatches == 0
            and r.deleted_symbol_mismatches == 0
        )
    if "sign" in checks:
        r = verify_sign_split(n, 1)
        report["sign_counterexamples"] = r.counterexamples
        report["sign_relaxed_counterexamples"] = r.relaxed_counterexamples
        report["sign_pairs_checked"] = r.pairs_checked
        passed &= r.counterexamples == 0
    if "table1" in checks:
        v = verify_weight_deltas(n)
        report["table1_violations"] = v
        passed &= v == 0
    if "deletion" in checks:
        ok = verify_single_deletion(params)
        report["single_deletion_ok"] = ok
        passed &= ok

    report["pass"] = passed
    if timing:
        report["elapsed"] = time.perf_counter() - start
    return report, passed


def smoke_report(
    n: int,
    params: CodeParams | None = None,
    *,
    samples: int = 20,
    seed: int = 0,
    workers: int = 1,
) -> tuple[dict, bool]:
    """Sampled spot checks where full ball coverage is not worth the wait.

    Smoke, not verification: random corruptions of randomly drawn
    codewords must decode back, and no decode may ever list more than
    two candidates.
    """
    rng = random.Random(seed)
    auto = params is None
    if auto:
        params, _ = choose_params(n, workers=workers)
    elif params.n != n:
        raise ValueError(f"params are for n={params.n}, not n={n}")
    members = [int(v) for v in codeword_values(params, workers=workers)]
    decode_trials = completeness_failures = bound_failures = 0
    max_list_seen = 0

    def probe(y: Word) -> DecodeResult | None:
        nonlocal bound_failures, max_list_seen
        try:
            res = list_decode(y, params)
        except ListBoundError:
            bound_failures += 1
            return None
        max_list_seen = max(max_list_seen, len(res.candidates))
        return res

    for _ in range(samples):
        if members:
            x = rng.choice(members)
            d = rng.randrange(1, n + 1)
            e = rng.choice([None] + [i for i in range(1, n + 1) if i != d])
            w = x if e is None else flip_bit(x, n, e)
            res = probe(Word(n - 1, delete_bit(w, n, d)))
            decode_trials += 1
            if res is not None and Word(n, x) not in res.words:
                completeness_failures += 1
        probe(Word(n - 1, rng.randrange(0, 1 << (n - 1))))
    passed = completeness_failures == 0 and bound_failures == 0
    report = {
        "mode": "smoke",
        "n": n,
        "params": _params_dict(params),
        "auto_params": auto,
        "samples": samples,
        "seed": seed,
        "decode_trials": decode_trials,
        "max_list_seen": max_list_seen,
        "completeness_failures": completeness_failures,
        "bound_failures": bound_failures,
        "pass": passed,
    }
    return report, passed
