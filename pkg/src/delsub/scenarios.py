"""Bundled corruption scenarios with known suffix-difference profiles.

Three hand-checked pairs of 16-bit words that reach the same received
word under different event orderings (cases i, ii and iii).  They anchor
the regression tests and the `examples` CLI subcommand: the corruption
equalities, the printed difference vectors, the closed-form profiles and
the sign-split claims must all reproduce exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .channel import ErrorEvent, apply_del_sub
from .syndromes import sign_segments_ok, suffix_diff
from .verifier import classify_case, predicted_suffix_profile
from .words import Word

__all__ = ["Scenario", "ScenarioCheck", "SCENARIOS", "replay"]


@dataclass(frozen=True)
class Scenario:
    """A colliding word pair with its witnesses and expected difference vector."""

    name: str
    x: Word
    x_prime: Word
    received: Word
    witness1: ErrorEvent  # maps x to received
    witness2: ErrorEvent  # maps x_prime to received
    case: str  # interleaving case of (witness1, witness2)
    split_point: int | None  # sign-split breakpoint; None = one sign throughout
    max_abs_u: int
    u: tuple[int, ...]


def _w(text: str) -> Word:
    return Word.from_text(text)


SCENARIOS: tuple[Scenario, ...] = (
    Scenario(
        name="subs-left-of-both-deletions",
        x=_w("1101101000101110"),
        x_prime=_w("1001111001011010"),
        received=_w("110111100101110"),
        witness1=ErrorEvent(10, 6),
        witness2=ErrorEvent(14, 2),
        case="i",
        split_point=6,
        max_abs_u=1,
        u=(0, 0, -1, -1, -1, -1, 0, 0, 0, 0, 1, 0, 1, 1, 0, 0),
    ),
    Scenario(
        name="subs-split-by-the-deletions",
        x=_w("1001011101001110"),
        x_prime=_w("1101111000011010"),
        received=_w("110111101001110"),
        witness1=ErrorEvent(5, 2),
        witness2=ErrorEvent(14, 9),
        case="ii",
        split_point=9,
        max_abs_u=2,
        u=(0, 0, 1, 1, 1, 2, 2, 2, 1, 1, 0, 0, 1, 1, 0, 0),
    ),
    Scenario(
        name="subs-flanking-both-deletions",
        x=_w("1001010101001111"),
        x_prime=_w("1101101010001101"),
        received=_w("100110101001101"),
        witness1=ErrorEvent(5, 15),
        witness2=ErrorEvent(10, 2),
        case="iii",
        split_point=None,
        max_abs_u=2,
        u=(0, 0, 1, 1, 1, 2, 1, 2, 1, 2, 1, 1, 1, 1, 1, 0),
    ),
)


@dataclass
class ScenarioCheck:
    """Replay outcome for one scenario."""

    name: str
    u: tuple[int, ...]
    ok: bool
    failures: list[str]


def _check(s: Scenario) -> ScenarioCheck:
    failures = []
    if apply_del_sub(s.x, s.witness1) != s.received:
        failures.append("corrupting x does not give the received word")
    if apply_del_sub(s.x_prime, s.witness2) != s.received:
        failures.append("corrupting x_prime does not give the received word")
    u = suffix_diff(s.x, s.x_prime)
    if u != s.u:
        failures.append(f"difference vector is {u}, expected {s.u}")
    if classify_case(s.witness1.d, s.witness1.e, s.witness2.d, s.witness2.e) != s.case:
        failures.append("witness ordering falls in the wrong case")
    if predicted_suffix_profile(s.x, s.x_prime, s.witness1, s.witness2) != s.u:
        failures.append("closed-form profile disagrees with the difference vector")
    breakpoints = [] if s.split_point is None else [s.split_point]
    if not sign_segments_ok(u, breakpoints):
        failures.append("claimed sign split does not hold")
    if max(abs(v) for v in u) > s.max_abs_u:
        failures.append(f"|u_i| exceeds {s.max_abs_u}")
    return ScenarioCheck(s.name, u, not failures, failures)


def replay() -> list[ScenarioCheck]:
    """Re-derive every bundled scenario from scratch and diff it against the fixture."""
    return [_check(s) for s in SCENARIOS]
