"""Power occurrences in Sturmian and balanced binary words."""

from .balanced import balanced_count, enumerate_balanced, euler_phi
from .gaps import (
    TABLE1,
    Census,
    ExponentRow,
    GapReport,
    census,
    gap_report,
    max_gap_over_balanced,
    minimal_universal_length,
    period_bound,
    prefix_gap_census,
    table1_verify,
    witness_without_e_power,
)
from .pell import from_pell, is_valid_pell, pell_numbers, sturmian_from_pell, to_pell, trailing_zeros_odd
from .quadratic import QuadraticIrrational, compare_to_rational, floor_linear
from .sturmian import fibonacci_word, mechanical_word
from .words import (
    PowerOccurrence,
    e_power_endings,
    exponent_of,
    has_period,
    is_balanced,
    is_e_power,
    least_period,
    subword_complexity,
)

__version__ = "0.1.0"
