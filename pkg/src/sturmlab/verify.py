"""Named claim checks used by ``sturmlab verify``."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .balanced import balanced_count, enumerate_balanced
from .gaps import (
    TABLE1,
    census,
    minimal_universal_length,
    prefix_gap_census,
    verify_row,
    witness_without_e_power,
)
from .pell import from_pell, sturmian_from_pell, to_pell
from .sturmian import FIBONACCI_SLOPE, SQRT2_MINUS_1, ZERO, fibonacci_word, mechanical_word
from .words import (
    ceil_mul,
    e_power_endings,
    is_balanced,
    least_period,
    subword_complexity,
)

SAMPLE_EXPONENTS = tuple(Fraction(x) for x in ("2", "5/2", "8/3", "3", "16/5", "23/7", "10/3"))
LEMMA1_WORD = "0010100101001001"


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str


def check_counts() -> list[Check]:
    c17 = sum(1 for _ in enumerate_balanced(17))
    c32 = sum(1 for _ in enumerate_balanced(32))
    bad = [n for n in range(31) if sum(1 for _ in enumerate_balanced(n)) != balanced_count(n)]
    return [
        Check("count-17", c17 == 594, f"{c17} balanced words of length 17"),
        Check("count-32", c32 == 3650, f"{c32} balanced words of length 32"),
        Check("count-formula", not bad, f"formula mismatches at {bad}" if bad else "n <= 30 agree"),
    ]


def check_lemma1() -> list[Check]:
    short = witness_without_e_power(3, 17, max_period=5)
    any_period = minimal_universal_length(3)
    free16 = witness_without_e_power(3, 16)
    word_ok = is_balanced(LEMMA1_WORD) and not e_power_endings(LEMMA1_WORD, 3)
    return [
        Check("lemma1-period5", short is None,
              "every balanced word of length 17 has a cube of period <= 5" if short is None
              else f"cube-free (period <= 5) word {short}"),
        Check("lemma1-minimal", any_period is not None and any_period.n == 17,
              f"minimal universal length {any_period.n if any_period else None}"),
        Check("lemma1-witness", word_ok and free16 is not None,
              f"{LEMMA1_WORD} balanced and cube-free: {word_ok}; least witness {free16}"),
    ]


def check_theorem1(jobs: int = 1, prefix_len: int = 10**5) -> list[Check]:
    result = census(32, 3, 5, jobs)
    gaps = prefix_gap_census(SQRT2_MINUS_1, ZERO, 3, None, prefix_len)
    return [
        Check("theorem1-census", result.max_gap == 10,
              f"max gap {result.max_gap} over {result.words} words, witness {result.witness}"),
        Check("theorem1-two-endings", (result.min_endings or 0) >= 2,
              f"fewest cube endings in one word: {result.min_endings}"),
        Check("theorem1-sqrt2", gaps == {1, 7, 10}, f"gaps {sorted(gaps)} in {prefix_len} symbols"),
    ]


def check_rampersad(prefix_len: int = 10**5) -> list[Check]:
    gaps = prefix_gap_census(FIBONACCI_SLOPE, ZERO, 3, None, prefix_len)
    first = e_power_endings(fibonacci_word(40), 3)[:5]
    return [
        Check("rampersad-gaps", gaps <= {1, 2, 3, 4, 8, 9} and max(gaps) == 9,
              f"gaps {sorted(gaps)} in {prefix_len} symbols"),
        Check("rampersad-first", first == [13, 22, 23, 26, 34], f"first endings {first}"),
    ]


def check_table1(prefix_len: int = 10**5, jobs: int = 1) -> list[Check]:
    checks = []
    for row in TABLE1:
        rc = verify_row(row, prefix_len, jobs)
        bad = [k for k, v in rc.status.items() if not v]
        checks.append(Check(
            f"table1-{row.e}", rc.ok,
            f"n={rc.n} p={rc.p} g={rc.g} (2n window {rc.g_wide}), gamma {row.gamma} "
            f"{'shows' if row.g in rc.gamma_gaps else 'lacks'} gap {row.g}"
            + (f"; mismatched {bad}" if bad else ""),
        ))
    return checks


def check_generators(length: int = 10**4) -> list[Check]:
    pell_ok = mechanical_word(SQRT2_MINUS_1, ZERO, length) == sturmian_from_pell(length)
    fib_ok = mechanical_word(FIBONACCI_SLOPE, ZERO, length) == fibonacci_word(length)
    return [
        Check("generators-pell", pell_ok, f"sqrt(2)-1 mechanical vs Pell word, {length} symbols"),
        Check("generators-fibonacci", fib_ok, f"(3-sqrt(5))/2 mechanical vs morphism, {length} symbols"),
    ]


def check_numeration(limit: int = 10**5) -> list[Check]:
    reps = [to_pell(m) for m in range(limit + 1)]
    round_trip = all(from_pell(r) == m for m, r in enumerate(reps))
    shortlex = all((len(a), a) < (len(b), b) for a, b in zip(reps, reps[1:]))
    named = to_pell(7) == "110" and to_pell(10) == "200"
    return [
        Check("pell-round-trip", round_trip, f"m <= {limit}"),
        Check("pell-values", named, f"7 -> {to_pell(7)}, 10 -> {to_pell(10)}"),
        Check("pell-shortlex", shortlex, f"m <= {limit}"),
    ]


def all_pairs_balanced(w: str) -> bool:
    n = len(w)
    for length in range(1, n + 1):
        counts = [w.count("1", i, i + length) for i in range(n - length + 1)]
        if any(abs(x - y) > 1 for x, y in itertools.product(counts, counts)):
            return False
    return True


def check_oracles(max_len: int = 14, balance_len: int = 12) -> list[Check]:
    mismatch = None
    for n in range(max_len + 1):
        for bits in itertools.product("01", repeat=n):
            w = "".join(bits)
            periods = {(i, j): least_period(w[i:j]) for i in range(n) for j in range(i + 1, n + 1)}
            for e in SAMPLE_EXPONENTS:
                # factor w[i:j] is an e-power iff ceil(e * per) == j - i
                expect = {j - 1 for (i, j), p in periods.items() if ceil_mul(e, p) == j - i}
                if set(e_power_endings(w, e)) != expect:
                    mismatch = (w, e)
                    break
            if mismatch:
                break
        if mismatch:
            break
    bal_bad = next(
        ("".join(b) for n in range(balance_len + 1) for b in itertools.product("01", repeat=n)
         if is_balanced("".join(b)) != all_pairs_balanced("".join(b))),
        None,
    )
    return [
        Check("oracle-endings", mismatch is None,
              f"lengths <= {max_len}" if mismatch is None else f"mismatch at {mismatch}"),
        Check("oracle-balance", bal_bad is None,
              f"lengths <= {balance_len}" if bal_bad is None else f"mismatch at {bal_bad}"),
    ]


TABLE1_SLOPES = tuple(dict.fromkeys(row.gamma for row in TABLE1)) + (FIBONACCI_SLOPE,)


def check_sturmian(length: int = 10**4, max_factor: int = 20) -> list[Check]:
    checks = []
    for gamma in TABLE1_SLOPES:
        w = mechanical_word(gamma, ZERO, length)
        complexity = [subword_complexity(w, k) for k in range(max_factor + 1)]
        ok = is_balanced(w) and complexity == list(range(1, max_factor + 2))
        checks.append(Check(f"sturmian-{gamma}", ok, f"balanced, complexity l+1 for l <= {max_factor}"
                            if ok else f"complexity {complexity}"))
    return checks


def check_all(jobs: int = 1, prefix_len: int = 10**5) -> list[Check]:
    groups: list[Callable[[], list[Check]]] = [
        check_counts,
        check_lemma1,
        lambda: check_theorem1(jobs, prefix_len),
        lambda: check_rampersad(prefix_len),
        lambda: check_table1(prefix_len, jobs),
        check_generators,
        check_numeration,
        check_oracles,
        check_sturmian,
    ]
    return [c for group in groups for c in group()]
