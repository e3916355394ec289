"""Exact generators for mechanical (Sturmian) words and the Fibonacci word."""

from __future__ import annotations

from .quadratic import QuadraticIrrational, common_radicand, floor_surd

SQRT2_MINUS_1 = QuadraticIrrational(-1, 1, 1, 2)
FIBONACCI_SLOPE = QuadraticIrrational(3, -1, 2, 5)  # (3 - sqrt 5) / 2
ZERO = QuadraticIrrational.rational(0)

SLOPE_ALIASES = {
    "sqrt2-1": SQRT2_MINUS_1,
    "fib": FIBONACCI_SLOPE,
}


def parse_slope(text: str) -> QuadraticIrrational:
    alias = SLOPE_ALIASES.get(text.strip().lower())
    return alias if alias is not None else QuadraticIrrational.parse(text)


def mechanical_word(gamma: QuadraticIrrational, beta: QuadraticIrrational = ZERO,
                    length: int = 0) -> str:
    """Symbols floor((i+2)g + b) - floor((i+1)g + b) for i in range(length).

    The slope must be irrational in (0, 1) and the intercept in [0, 1).
    """
    if gamma.is_rational:
        raise ValueError("slope must be irrational")
    if gamma.compare(0) <= 0 or gamma.compare(1) >= 0:
        raise ValueError(f"slope {gamma} is not in (0, 1)")
    if beta.compare(0) < 0 or beta.compare(1) >= 0:
        raise ValueError(f"intercept {beta} is not in [0, 1)")
    if length < 0:
        raise ValueError("length must be nonnegative")
    d = common_radicand(gamma, beta)
    c = gamma.c * beta.c
    u0, du = beta.a * gamma.c, gamma.a * beta.c
    v0, dv = beta.b * gamma.c, gamma.b * beta.c
    out = []
    prev = floor_surd(u0 + du, v0 + dv, d, c)
    for k in range(2, length + 2):
        cur = floor_surd(u0 + k * du, v0 + k * dv, d, c)
        out.append(str(cur - prev))
        prev = cur
    return "".join(out)


def fibonacci_word(length: int) -> str:
    """Prefix of the fixed point of 0 -> 01, 1 -> 0."""
    if length < 0:
        raise ValueError("length must be nonnegative")
    word = "0"
    table = str.maketrans({"0": "01", "1": "0"})
    while len(word) < length:
        word = word.translate(table)
    return word[:length]
