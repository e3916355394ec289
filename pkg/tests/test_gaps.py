from fractions import Fraction

import pytest

from sturmlab.balanced import enumerate_balanced
from sturmlab.gaps import (
    TABLE1,
    ExponentRow,
    GapReport,
    NoPowerError,
    census,
    gap_report,
    max_gap_over_balanced,
    min_power_period,
    minimal_universal_length,
    period_bound,
    prefix_gap_census,
    witness_without_e_power,
)
from sturmlab.quadratic import QuadraticIrrational
from sturmlab.sturmian import FIBONACCI_SLOPE, SQRT2_MINUS_1, ZERO, fibonacci_word, mechanical_word
from sturmlab.words import e_power_endings, is_balanced


def naive_census(length, e, max_period):
    """Max gap and least witness straight from gap_report on every word."""
    best, witness = None, None
    for w in enumerate_balanced(length):
        g = gap_report(w, e, max_period).max_gap
        if g is not None and (best is None or g > best):
            best, witness = g, w
    return best, witness


def test_gap_report_fibonacci():
    rep = gap_report(fibonacci_word(40), 3)
    assert rep.endings[:5] == (13, 22, 23, 26, 34)
    assert rep.gaps[:4] == (9, 1, 3, 8)
    assert rep.max_gap == max(rep.gaps)


def test_gap_report_without_pairs():
    assert gap_report("0000", 3, 1) == GapReport((2, 3), (1,), 1)
    assert gap_report("010", 3) == GapReport((), (), None)
    assert gap_report("000", 3) == GapReport((2,), (), None)


@pytest.mark.parametrize("length,e,max_period,expected", [
    (32, 3, 5, 10), (16, Fraction(5, 2), 3, 6), (3, 1, 1, 1),
])
def test_max_gap_examples(length, e, max_period, expected):
    gap, witness = max_gap_over_balanced(length, e, max_period)
    assert gap == expected
    assert gap_report(witness, e, max_period).max_gap == expected


@pytest.mark.parametrize("length,e,max_period", [(20, 3, 5), (24, Fraction(8, 3), 5), (18, 2, None)])
def test_census_matches_naive(length, e, max_period):
    result = census(length, e, max_period)
    assert (result.max_gap, result.witness) == naive_census(length, e, max_period)


def test_census_signals_missing_pairs():
    with pytest.raises(NoPowerError):
        max_gap_over_balanced(3, 3, 1)


def test_sharded_census_is_identical():
    assert census(40, 3, 5, jobs=2) == census(40, 3, 5)


def test_two_cube_endings_forced():
    result = census(32, 3, 5)
    assert result.words == 3650
    assert result.min_endings >= 2


def test_witness_without_cube():
    w = witness_without_e_power(3, 16)
    assert w is not None and is_balanced(w) and e_power_endings(w, 3) == []
    lemma_word = "0010100101001001"
    assert is_balanced(lemma_word) and e_power_endings(lemma_word, 3) == []
    assert witness_without_e_power(3, 17) is None
    assert witness_without_e_power(Fraction(5, 2), 9) is None


@pytest.mark.parametrize("e,n", [(3, 17), (Fraction(5, 2), 9), (Fraction(8, 3), 15), (Fraction(10, 3), 69)])
def test_minimal_universal_length(e, n):
    found = minimal_universal_length(e)
    assert found.n == n
    assert len(found.witness) == n - 1 and is_balanced(found.witness)
    assert e_power_endings(found.witness, e) == []
    # every balanced word one symbol longer still contains an e-power
    assert all(e_power_endings(w, e) for w in enumerate_balanced(n + 1))


def test_minimal_universal_length_cap_and_range():
    assert minimal_universal_length(3, cap=16) is None
    assert minimal_universal_length(1).n == 1
    for bad in (Fraction(37, 10), Fraction(1, 2), 4):
        with pytest.raises(ValueError):
            minimal_universal_length(bad)


@pytest.mark.parametrize("e,n,p", [(3, 17, 5), (Fraction(5, 2), 9, 3), (Fraction(23, 7), 50, 13)])
def test_period_bound(e, n, p):
    assert period_bound(e, n) == p


def test_period_bound_is_max_of_min():
    words = list(enumerate_balanced(17))
    assert max(min_power_period(w, 3) for w in words) == period_bound(3, 17)
    with pytest.raises(NoPowerError):
        period_bound(3, 16)


def test_prefix_census():
    assert prefix_gap_census(SQRT2_MINUS_1, ZERO, 3, None, 10**4) == {1, 7, 10}
    # cubes of period 12 occur too, so the cutoff drops endings but not the bound
    assert prefix_gap_census(SQRT2_MINUS_1, ZERO, 3, 5, 10**4) == {1, 10}
    w = mechanical_word(SQRT2_MINUS_1, ZERO, 10**4)
    assert set(e_power_endings(w, 3, 5)) < set(e_power_endings(w, 3))
    fib = prefix_gap_census(FIBONACCI_SLOPE, ZERO, 3, None, 10**4)
    assert fib <= {1, 2, 3, 4, 8, 9} and max(fib) == 9
    assert prefix_gap_census(SQRT2_MINUS_1, ZERO, 3, None, 1) == set()


def test_exponent_row_invariants():
    assert len(TABLE1) == 6
    with pytest.raises(ValueError):
        ExponentRow(Fraction(4), 1, 1, 1, SQRT2_MINUS_1)
    with pytest.raises(ValueError):
        ExponentRow(Fraction(3), 0, 1, 1, SQRT2_MINUS_1)
    assert TABLE1[3].gamma == QuadraticIrrational.parse("(25-1*sqrt(5))/62")
