"""Gaps between consecutive e-power ending positions, and the searches behind Table 1.

A census streams every balanced word of a length, records each word's
e-power endings, and aggregates the largest gap.  Censuses can be split by
fixed-length prefixes and run in a process pool; aggregation is order
independent, so sharded and sequential results are identical.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Optional

from .balanced import balanced_codes, enumerate_balanced
from .quadratic import QuadraticIrrational
from .sturmian import ZERO, mechanical_word
from .words import (
    as_rational,
    ceil_mul,
    check_binary,
    e_power_endings,
    endings_mask,
    from_code,
    power_plan,
    to_code,
)

log = logging.getLogger(__name__)

# (5 + sqrt 5) / 2: the Fibonacci word has no powers of this exponent
POWER_THRESHOLD = QuadraticIrrational(5, 1, 2, 5)

SHARD_PREFIX = 8


class NoPowerError(ValueError):
    """A balanced word without the required e-power occurrences was found."""


@dataclass(frozen=True)
class GapReport:
    endings: tuple[int, ...]
    gaps: tuple[int, ...]
    max_gap: Optional[int]

    @classmethod
    def from_endings(cls, endings) -> "GapReport":
        endings = tuple(endings)
        gaps = tuple(b - a for a, b in zip(endings, endings[1:]))
        return cls(endings, gaps, max(gaps) if gaps else None)


def gap_report(w: str, e, max_period: Optional[int] = None) -> GapReport:
    return GapReport.from_endings(e_power_endings(w, e, max_period))


def _mask_gaps(mask: int) -> list[str]:
    """Zero runs strictly between consecutive set bits; run length + 1 is the gap."""
    return bin(mask)[2:].rstrip("0").split("1")[1:-1]


def check_exponent(e) -> Fraction:
    e = as_rational(e)
    if e < 1:
        raise ValueError("exponent must be at least 1")
    if POWER_THRESHOLD.compare(e) <= 0:
        raise ValueError(f"exponent {e} is not below (5+sqrt(5))/2")
    return e


@dataclass(frozen=True)
class Census:
    """Aggregate over all balanced words of one length."""

    length: int
    e: Fraction
    max_period: Optional[int]
    words: int = 0
    max_gap: Optional[int] = None
    witness: Optional[str] = None  # lexicographically least word attaining max_gap
    min_endings: Optional[int] = None
    gap_values: frozenset = field(default_factory=frozenset)

    def merge(self, other: "Census") -> "Census":
        if self.words == 0:
            return other
        if other.words == 0:
            return self
        mine, theirs = self.max_gap or 0, other.max_gap or 0
        if mine != theirs:
            best = self if mine > theirs else other
            max_gap, witness = best.max_gap, best.witness
        else:
            max_gap = self.max_gap
            witnesses = [w for w in (self.witness, other.witness) if w is not None]
            witness = min(witnesses) if witnesses else None
        return replace(
            self,
            words=self.words + other.words,
            max_gap=max_gap,
            witness=witness,
            min_endings=min(self.min_endings, other.min_endings),
            gap_values=self.gap_values | other.gap_values,
        )


def _census_shard(length: int, e: Fraction, max_period: Optional[int], prefix: str) -> Census:
    plan = power_plan(length, e, max_period)
    words = 0
    best = 0
    witness = None
    min_endings = None
    values: set[int] = set()
    for code in balanced_codes(length, prefix):
        words += 1
        mask = endings_mask(code, length, plan)
        count = mask.bit_count()
        if min_endings is None or count < min_endings:
            min_endings = count
        if count < 2:
            continue
        runs = _mask_gaps(mask)
        top = max(map(len, runs)) + 1
        values.update(len(r) + 1 for r in runs)
        if top > best:
            best, witness = top, from_code(code, length)
    return Census(length, e, max_period, words, best or None, witness, min_endings,
                  frozenset(values))


def census(length: int, e, max_period: Optional[int] = None, jobs: int = 1) -> Census:
    """Gap statistics over every balanced word of ``length``."""
    e = as_rational(e)
    if e < 1:
        raise ValueError("exponent must be at least 1")
    if length < 1:
        raise ValueError("length must be positive")
    if jobs <= 1 or length <= SHARD_PREFIX:
        return _census_shard(length, e, max_period, "")
    prefixes = list(enumerate_balanced(SHARD_PREFIX))
    total = Census(length, e, max_period)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        parts = pool.map(_census_shard, *zip(*[(length, e, max_period, p) for p in prefixes]))
        for part in parts:
            total = total.merge(part)
    return total


def max_gap_over_balanced(length: int, e, max_period: Optional[int], jobs: int = 1) -> tuple[int, str]:
    """Largest consecutive-ending gap over all balanced words, with the least witness."""
    result = census(length, e, max_period, jobs)
    if result.max_gap is None:
        raise NoPowerError(f"no balanced word of length {length} has two {result.e}-power endings")
    return result.max_gap, result.witness


def _ends_here(e: Fraction, max_period: Optional[int] = None):
    """Prune predicate: does an e-power end at the last position of the prefix?"""

    def prune(code: int, m: int) -> bool:
        p = 1
        while max_period is None or p <= max_period:
            length = ceil_mul(e, p)
            if length > m:
                return False
            x = code >> (m - length)
            if not (x ^ (x >> p)) & ((1 << (length - p)) - 1):
                return True
            p += 1
        return False

    return prune


def witness_without_e_power(e, n: int, max_period: Optional[int] = None) -> Optional[str]:
    """Lexicographically least balanced word of length n with no e-power factor."""
    e = as_rational(e)
    if e < 1:
        raise ValueError("exponent must be at least 1")
    for code in balanced_codes(n, prune=_ends_here(e, max_period)):
        return from_code(code, n)
    return None


@dataclass(frozen=True)
class UniversalLength:
    n: int
    witness: str  # e-power-free balanced word of length n - 1


def minimal_universal_length(e, cap: int = 200) -> Optional[UniversalLength]:
    """Smallest n <= cap such that every balanced word of length n contains an e-power."""
    e = check_exponent(e)
    deepest = [0]

    def seen(code: int, m: int) -> None:
        if m > deepest[0]:
            deepest[0] = m

    for _ in balanced_codes(cap, prune=_ends_here(e), depth_hook=seen):
        return None  # an e-power-free word of length cap exists
    n = deepest[0] + 1
    return UniversalLength(n, witness_without_e_power(e, n - 1))


def min_power_period(w: str, e) -> Optional[int]:
    """Smallest period of an e-power occurring in w, or None."""
    check_binary(w)
    e = as_rational(e)
    return _min_power_period(to_code(w), len(w), power_plan(len(w), e))


def _min_power_period(code: int, n: int, plan) -> Optional[int]:
    for entry in plan:
        if endings_mask(code, n, [entry]):
            return entry[0]
    return None


def period_bound(e, n: int) -> int:
    """Smallest k such that every balanced word of length n has an e-power of period <= k."""
    e = as_rational(e)
    if e < 1:
        raise ValueError("exponent must be at least 1")
    plan = power_plan(n, e)
    worst = 0
    for code in balanced_codes(n):
        p = _min_power_period(code, n, plan)
        if p is None:
            raise NoPowerError(f"balanced word {from_code(code, n)} contains no {e}-power")
        worst = max(worst, p)
    return worst


def prefix_gap_census(gamma: QuadraticIrrational, beta: QuadraticIrrational, e,
                      max_period: Optional[int], prefix_len: int) -> set[int]:
    """Distinct consecutive-ending gaps in a prefix of the mechanical word."""
    e = as_rational(e)
    word = mechanical_word(gamma, beta, prefix_len)
    plan = power_plan(prefix_len, e, max_period)
    return {len(r) + 1 for r in _mask_gaps(endings_mask(to_code(word), prefix_len, plan))}


@dataclass(frozen=True)
class ExponentRow:
    e: Fraction
    n: int
    p: int
    g: int
    gamma: QuadraticIrrational

    def __post_init__(self):
        check_exponent(self.e)
        if min(self.n, self.p, self.g) < 1:
            raise ValueError(f"row entries must be positive: {self}")


TABLE1 = (
    ExponentRow(Fraction(5, 2), 9, 3, 6, QuadraticIrrational(5, 1, 10, 5)),
    ExponentRow(Fraction(8, 3), 15, 5, 9, QuadraticIrrational(-1, 1, 1, 2)),
    ExponentRow(Fraction(3), 17, 5, 10, QuadraticIrrational(-1, 1, 1, 2)),
    ExponentRow(Fraction(16, 5), 30, 8, 17, QuadraticIrrational(25, -1, 62, 5)),
    ExponentRow(Fraction(23, 7), 50, 13, 27, QuadraticIrrational(59, 1, 158, 5)),
    ExponentRow(Fraction(10, 3), 69, 18, 37, QuadraticIrrational(217, -1, 298, 5)),
)


@dataclass(frozen=True)
class RowCheck:
    """Recomputed values for one table row, next to the published ones."""

    row: ExponentRow
    n: Optional[int]
    p: Optional[int]
    g: Optional[int]
    g_wide: Optional[int]  # gap over the 2n window, expected to equal g
    witness: Optional[str]
    gamma_gaps: frozenset

    @property
    def status(self) -> dict[str, bool]:
        return {
            "n": self.n == self.row.n,
            "p": self.p == self.row.p,
            "g": self.g == self.row.g and self.g_wide == self.row.g,
            "gamma": self.row.g in self.gamma_gaps,
        }

    @property
    def ok(self) -> bool:
        return all(self.status.values())


def verify_row(row: ExponentRow, prefix_len: int = 10**5, jobs: int = 1) -> RowCheck:
    found = minimal_universal_length(row.e)
    n = found.n if found else None
    p = g = g_wide = witness = None
    if n is not None:
        p = period_bound(row.e, n)
        g, witness = max_gap_over_balanced(2 * n - 2, row.e, p, jobs)
        g_wide, _ = max_gap_over_balanced(2 * n, row.e, p, jobs)
    cutoff = p if p is not None else row.p
    gamma_gaps = frozenset(prefix_gap_census(row.gamma, ZERO, row.e, cutoff, prefix_len))
    log.info("row e=%s: n=%s p=%s g=%s (2n window %s)", row.e, n, p, g, g_wide)
    return RowCheck(row, n, p, g, g_wide, witness, gamma_gaps)


def table1_verify(prefix_len: int = 10**5, jobs: int = 1) -> list[RowCheck]:
    return [verify_row(row, prefix_len, jobs) for row in TABLE1]
