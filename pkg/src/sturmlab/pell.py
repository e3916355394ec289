"""Ostrowski numeration in the Pell base 1, 2, 5, 12, 29, ...

Representations are digit strings, most significant first, e.g. ``"200"`` for
10.  A valid string has no leading zero, ends in 0 or 1, and every 2 is
immediately followed by a 0.  The empty string represents 0.
"""

from __future__ import annotations


def pell_numbers(k: int) -> list[int]:
    if k < 1:
        raise ValueError("need at least one Pell number")
    out = [1, 2]
    while len(out) < k:
        out.append(2 * out[-1] + out[-2])
    return out[:k]


def _pell_up_to(m: int) -> list[int]:
    out = [1, 2]
    while out[-1] <= m:
        out.append(2 * out[-1] + out[-2])
    return out


def is_valid_pell(digits: str) -> bool:
    if any(ch not in "012" for ch in digits):
        return False
    if digits.startswith("0") or digits.endswith("2"):
        return False
    return "21" not in digits and "22" not in digits


def to_pell(m: int) -> str:
    """Greedy Pell representation of a nonnegative integer."""
    if m < 0:
        raise ValueError("only nonnegative integers have a representation")
    if m == 0:
        return ""
    base = _pell_up_to(m)
    while base[-1] > m:
        base.pop()
    digits = []
    for value in reversed(base):
        q, m = divmod(m, value)
        digits.append(str(q))
    return "".join(digits)


def from_pell(digits: str) -> int:
    if not is_valid_pell(digits):
        raise ValueError(f"invalid Pell representation {digits!r}")
    base = pell_numbers(max(len(digits), 1))
    return sum(int(ch) * base[i] for i, ch in enumerate(reversed(digits)))


def trailing_zeros_odd(digits: str) -> bool:
    """True iff the representation is nonzero and ends in an odd run of zeros."""
    if not is_valid_pell(digits):
        raise ValueError(f"invalid Pell representation {digits!r}")
    if not digits:
        return False
    return (len(digits) - len(digits.rstrip("0"))) % 2 == 1


def sturmian_from_pell(length: int) -> str:
    """Symbol i is 1 iff the Pell representation of i + 1 ends in an odd number of zeros."""
    if length < 0:
        raise ValueError("length must be nonnegative")
    return "".join("1" if trailing_zeros_odd(to_pell(i + 1)) else "0" for i in range(length))
