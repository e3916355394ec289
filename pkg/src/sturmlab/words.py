"""Finite-word primitives: periods, exponents, e-powers, balance, complexity.

Binary words are plain ``str`` objects over ``"01"``.  Period and exponent
functions also accept any other string (or sequence), so ``"entente"`` works.
Exponents are :class:`fractions.Fraction` values; every ``ceil(e * p)`` is
done in integer arithmetic.

Ending positions are 0-based indices of the last symbol of an occurrence.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Sequence

import numpy as np

Rational = Fraction


def parse_rational(text: str) -> Fraction:
    """Parse ``"num/den"`` or a bare integer into a Fraction."""
    text = text.strip()
    num, sep, den = text.partition("/")
    try:
        if sep:
            return Fraction(int(num), int(den))
        return Fraction(int(num))
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"malformed rational {text!r}") from None


def as_rational(e) -> Fraction:
    if isinstance(e, str):
        return parse_rational(e)
    if isinstance(e, float):
        raise TypeError("exponents must be exact; pass a Fraction, int or 'num/den'")
    return Fraction(e)


def ceil_mul(e: Fraction, p: int) -> int:
    """Exact ceil(e * p)."""
    return -((-e.numerator * p) // e.denominator)


def check_binary(w: str) -> str:
    if not isinstance(w, str) or w.strip("01"):
        raise ValueError(f"not a binary word: {w!r}")
    return w


def to_code(w: str) -> int:
    """Pack a binary word into an int with bit i equal to w[i]."""
    return int(w[::-1], 2) if w else 0


def from_code(code: int, n: int) -> str:
    return format(code, f"0{n}b")[::-1] if n else ""


def has_period(w: Sequence, p: int) -> bool:
    if p < 1:
        raise ValueError("period must be positive")
    return all(w[i] == w[i + p] for i in range(len(w) - p))


def least_period(w: Sequence) -> int:
    """Smallest period of a nonempty word (length minus its longest border)."""
    n = len(w)
    if n == 0:
        raise ValueError("the empty word has no period")
    border = [0] * n
    k = 0
    for i in range(1, n):
        while k and w[i] != w[k]:
            k = border[k - 1]
        if w[i] == w[k]:
            k += 1
        border[i] = k
    return n - border[-1]


def exponent_of(w: Sequence) -> Fraction:
    return Fraction(len(w), least_period(w))


def is_e_power(w: Sequence, e) -> bool:
    e = as_rational(e)
    if e < 1:
        raise ValueError("exponent must be at least 1")
    return ceil_mul(e, least_period(w)) == len(w)


def is_balanced(w: str) -> bool:
    """True iff all factors of equal length have 1-counts within 1 of each other."""
    check_binary(w)
    n = len(w)
    if n < 3:
        return True
    prefix = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.frombuffer(w.encode(), dtype=np.uint8) - 48, out=prefix[1:])
    for length in range(2, n):
        counts = prefix[length:] - prefix[:-length]
        if counts.max() - counts.min() > 1:
            return False
    return True


def subword_complexity(w: str, length: int) -> int:
    if length < 0 or length > len(w):
        raise ValueError(f"factor length {length} out of range for a word of length {len(w)}")
    return len({w[i:i + length] for i in range(len(w) - length + 1)})


@dataclass(frozen=True)
class PowerOccurrence:
    end: int
    period: int
    length: int

    def __post_init__(self):
        if self.period < 1 or self.length < self.period:
            raise ValueError(f"invalid occurrence {self}")
        if self.end - self.length + 1 < 0:
            raise ValueError(f"occurrence {self} starts before the word")

    @property
    def start(self) -> int:
        return self.end - self.length + 1


def power_plan(n: int, e: Fraction, max_period: Optional[int] = None) -> list[tuple[int, int, int]]:
    """``(period, length, matches)`` triples for every period whose occurrence fits in n symbols.

    ``matches`` is length - period, the number of consecutive positions j with
    w[j] == w[j + period] that an occurrence needs.
    """
    if e < 1:
        raise ValueError("exponent must be at least 1")
    top = (n * e.denominator) // e.numerator + 1
    if max_period is not None:
        top = min(top, max_period)
    plan = []
    for p in range(1, top + 1):
        length = ceil_mul(e, p)
        if length > n:
            break
        plan.append((p, length, length - p))
    return plan


def endings_mask(code: int, n: int, plan) -> int:
    """Bitmask of ending positions of occurrences described by ``plan``.

    Bit j of ``~(code ^ code >> p)`` says w[j] == w[j+p]; runs of ``matches``
    such bits are found by doubling shifts.
    """
    result = 0
    for p, length, need in plan:
        span = n - p
        if need == 0:
            runs = (1 << (n - length + 1)) - 1
        else:
            runs = ~(code ^ (code >> p)) & ((1 << span) - 1)
            have = 1
            while have < need and runs:
                step = min(have, need - have)
                runs &= runs >> step
                have += step
        result |= runs << (length - 1)
    return result


def mask_positions(mask: int) -> list[int]:
    bits = bin(mask)[:1:-1]
    return [i for i, ch in enumerate(bits) if ch == "1"]


def e_power_endings(w: str, e, max_period: Optional[int] = None) -> list[int]:
    """Sorted 0-based indices n at which some factor of period p <= max_period
    and length ceil(e*p) ends.  ``max_period=None`` means unbounded."""
    check_binary(w)
    e = as_rational(e)
    if max_period is not None and max_period < 1:
        raise ValueError("max_period must be positive")
    n = len(w)
    return mask_positions(endings_mask(to_code(w), n, power_plan(n, e, max_period)))


def power_occurrences(w: str, e, max_period: Optional[int] = None) -> Iterator[PowerOccurrence]:
    """Every (end, period) pair witnessing an ending, ordered by end then period."""
    check_binary(w)
    e = as_rational(e)
    n = len(w)
    plan = power_plan(n, e, max_period)
    code = to_code(w)
    per_end: dict[int, list[PowerOccurrence]] = {}
    for entry in plan:
        for end in mask_positions(endings_mask(code, n, [entry])):
            per_end.setdefault(end, []).append(PowerOccurrence(end, entry[0], entry[1]))
    for end in sorted(per_end):
        yield from per_end[end]
