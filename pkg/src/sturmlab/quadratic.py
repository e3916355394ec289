"""Exact quadratic irrationals (a + b*sqrt(d)) / c over arbitrary-precision ints."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

_TEXT = re.compile(
    r"^\(\s*([+-]?\d+)\s*([+-])\s*(\d+)\s*\*\s*sqrt\(\s*(\d+)\s*\)\s*\)\s*/\s*(\d+)$"
)


def _is_square(x: int) -> bool:
    return x >= 0 and isqrt(x) ** 2 == x


def sign_of_surd(u: int, v: int, d: int) -> int:
    """Sign of u + v*sqrt(d), exactly."""
    if v == 0 or d == 0:
        return (u > 0) - (u < 0)
    if u >= 0 and v >= 0:
        return 1
    if u <= 0 and v <= 0:
        return -1
    # opposite signs: compare u^2 with v^2 d
    diff = u * u - v * v * d
    if diff == 0:
        return 0
    dominant = u if diff > 0 else v
    return 1 if dominant > 0 else -1


@dataclass(frozen=True)
class QuadraticIrrational:
    """The real number (a + b*sqrt(d)) / c, kept in canonical form.

    Canonical means c > 0, gcd(a, b, c) == 1, and d == 0 whenever b == 0.
    A nonzero b requires d to be a non-square.
    """

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        a, b, c, d = self.a, self.b, self.c, self.d
        if c == 0:
            raise ValueError("denominator must be nonzero")
        if d < 0:
            raise ValueError("radicand must be nonnegative")
        if b != 0 and d != 0 and _is_square(d):
            raise ValueError(f"radicand {d} is a perfect square; pass the value as a rational")
        if b == 0 or d == 0:
            b, d = 0, 0
        if c < 0:
            a, b, c = -a, -b, -c
        g = gcd(gcd(a, b), c)
        object.__setattr__(self, "a", a // g)
        object.__setattr__(self, "b", b // g)
        object.__setattr__(self, "c", c // g)
        object.__setattr__(self, "d", d)

    @classmethod
    def rational(cls, q) -> "QuadraticIrrational":
        q = Fraction(q)
        return cls(q.numerator, 0, q.denominator, 0)

    @classmethod
    def parse(cls, text: str) -> "QuadraticIrrational":
        """Parse ``(a+b*sqrt(d))/c``, e.g. ``(-1+1*sqrt(2))/1`` for sqrt(2) - 1."""
        m = _TEXT.match(text.strip())
        if not m:
            raise ValueError(f"malformed quadratic irrational {text!r}; expected (a+b*sqrt(d))/c")
        a, sign, b, d, c = m.groups()
        b = int(b) if sign == "+" else -int(b)
        return cls(int(a), b, int(c), int(d))

    def __str__(self) -> str:
        sign = "-" if self.b < 0 else "+"
        return f"({self.a}{sign}{abs(self.b)}*sqrt({self.d}))/{self.c}"

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def __float__(self) -> float:
        # display only; never used in exact paths
        return (self.a + self.b * self.d ** 0.5) / self.c

    def compare(self, q) -> int:
        """-1, 0 or 1 as self is less than, equal to or greater than the rational q."""
        q = Fraction(q)
        u = self.a * q.denominator - q.numerator * self.c
        return sign_of_surd(u, self.b * q.denominator, self.d)


def compare_to_rational(x: QuadraticIrrational, q) -> int:
    return x.compare(q)


def common_radicand(*values: QuadraticIrrational) -> int:
    radicands = {v.d for v in values if not v.is_rational}
    if len(radicands) > 1:
        raise ValueError(f"mismatched radicands {sorted(radicands)}")
    return radicands.pop() if radicands else 0


def floor_surd(u: int, v: int, d: int, c: int) -> int:
    """floor((u + v*sqrt(d)) / c) for c > 0 and non-square d (or v == 0)."""
    if v == 0 or d == 0:
        return u // c
    r = isqrt(v * v * d)  # floor(|v| sqrt(d)); never exact since d is not a square
    s = r if v > 0 else -r - 1
    # u + s <= u + v sqrt(d) < u + s + 1, and no multiple of c lies strictly inside
    return (u + s) // c


def floor_linear(n: int, gamma: QuadraticIrrational, beta: QuadraticIrrational) -> int:
    """Exact floor(n * gamma + beta)."""
    d = common_radicand(gamma, beta)
    c = gamma.c * beta.c
    u = n * gamma.a * beta.c + beta.a * gamma.c
    v = n * gamma.b * beta.c + beta.b * gamma.c
    return floor_surd(u, v, d, c)
