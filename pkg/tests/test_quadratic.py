import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from sturmlab.quadratic import QuadraticIrrational, compare_to_rational, floor_linear, sign_of_surd
from sturmlab.sturmian import FIBONACCI_SLOPE, SQRT2_MINUS_1, ZERO

mpmath.mp.dps = 60


def high_precision(x: QuadraticIrrational):
    return (x.a + x.b * mpmath.sqrt(x.d)) / x.c


def test_canonical_form():
    x = QuadraticIrrational(2, -2, -4, 5)
    assert (x.a, x.b, x.c, x.d) == (-1, 1, 2, 5)
    assert QuadraticIrrational(3, 0, 2, 7).d == 0
    with pytest.raises(ValueError):
        QuadraticIrrational(1, 1, 1, 9)
    with pytest.raises(ValueError):
        QuadraticIrrational(1, 1, 0, 2)


@pytest.mark.parametrize("text", ["(-1+1*sqrt(2))/1", "(3-1*sqrt(5))/2", "(217-1*sqrt(5))/298", "(3+0*sqrt(0))/2"])
def test_text_round_trip(text):
    assert str(QuadraticIrrational.parse(text)) == text


@pytest.mark.parametrize("text", ["(0+1*sqrt(2))/1-1", "sqrt(2)", "(1+1*sqrt(2))/0", "(1+x*sqrt(2))/1"])
def test_parse_rejects(text):
    with pytest.raises(ValueError):
        QuadraticIrrational.parse(text)


def test_floor_linear_examples():
    assert floor_linear(0, SQRT2_MINUS_1, ZERO) == 0
    assert floor_linear(3, SQRT2_MINUS_1, ZERO) == int(mpmath.floor(3 * high_precision(SQRT2_MINUS_1))) == 1
    assert floor_linear(5, FIBONACCI_SLOPE, ZERO) == int(mpmath.floor(5 * high_precision(FIBONACCI_SLOPE))) == 1


def test_floor_linear_rejects_mixed_radicands():
    with pytest.raises(ValueError):
        floor_linear(1, SQRT2_MINUS_1, QuadraticIrrational(0, 1, 3, 5))


def test_compare_examples():
    assert compare_to_rational(QuadraticIrrational(5, 1, 2, 5), "7/2") == 1
    assert compare_to_rational(SQRT2_MINUS_1, "1/2") == -1
    assert compare_to_rational(QuadraticIrrational.rational("3/2"), "3/2") == 0


surds = st.builds(
    lambda a, b, c, d: QuadraticIrrational(a, b, c, d),
    st.integers(-10**6, 10**6), st.integers(-10**3, 10**3), st.integers(1, 10**4),
    st.sampled_from([2, 3, 5, 6, 7, 10, 13, 1999]),
)


@given(st.integers(0, 10**9), surds, st.fractions(min_value=0, max_value=1, max_denominator=1000))
def test_floor_linear_against_high_precision(n, gamma, beta):
    beta = QuadraticIrrational.rational(beta)
    expected = mpmath.floor(n * high_precision(gamma) + high_precision(beta))
    assert floor_linear(n, gamma, beta) == int(expected)


@given(surds, st.fractions(max_denominator=10**4))
def test_compare_against_high_precision(x, q):
    diff = high_precision(x) - mpmath.mpf(q.numerator) / q.denominator
    assert compare_to_rational(x, q) == (diff > 0) - (diff < 0)


@given(st.integers(-10**6, 10**6), st.integers(-10**6, 10**6), st.sampled_from([0, 2, 3, 5, 8]))
def test_sign_of_surd(u, v, d):
    value = u + v * mpmath.sqrt(d)
    assert sign_of_surd(u, v, d) == (value > 0) - (value < 0)
