"""Balanced binary words: pruned depth-first enumeration and a counting formula.

The search keeps, for every window length l, the minimum and maximum number
of 1s over the length-l factors seen so far.  All per-length quantities are
packed into fields of a single int, so extending a prefix by one symbol costs
a fixed number of big-int operations instead of a loop over window lengths.
"""

from __future__ import annotations

from typing import Callable, Iterator, Optional

from .words import check_binary, from_code

# Called with (code, length) for each new balanced prefix; True prunes it.
Prune = Callable[[int, int], bool]


class _Fields:
    """Packed-field constants for words of length up to ``n``."""

    def __init__(self, n: int):
        width = max(10, (n + 2).bit_length() + 2)
        self.width = width
        self.field = (1 << width) - 1
        ones = [0] * (n + 2)
        for m in range(1, n + 2):
            ones[m] = ones[m - 1] | (1 << (width * (m - 1)))
        self.ones = ones
        self.guard = [o << (width - 1) for o in ones]
        self.mask = [(1 << (width * m)) - 1 for m in range(n + 2)]

    def extend(self, state, a):
        """Append symbol ``a`` to a search state; None if the result is unbalanced."""
        m, code, counts, lo, hi = state
        width = self.width
        gm, om = self.guard[m], self.ones[m]
        new = (counts << width) + (self.ones[m + 1] if a else 0)
        cm = new & self.mask[m]
        if (lo + om + gm - cm) & gm != gm or (cm + om + gm - hi) & gm != gm:
            return None
        sel = (((cm + gm - lo) & gm) >> (width - 1)) * self.field
        lo = (lo & sel) | (cm & ~sel)
        sel = (((hi + gm - cm) & gm) >> (width - 1)) * self.field
        hi = (hi & sel) | (cm & ~sel)
        top = new ^ cm
        return (m + 1, code | (a << m), new, lo | top, hi | top)


def balanced_codes(n: int, prefix: str = "", prune: Optional[Prune] = None,
                   depth_hook: Optional[Callable[[int, int], None]] = None) -> Iterator[int]:
    """Yield packed codes (bit i = w[i]) of balanced words of length n, lexicographically.

    ``prefix`` restricts the search to words starting with it.  ``prune`` is
    consulted on each proper prefix that extends ``prefix``; returning True
    abandons that subtree.  ``depth_hook`` sees every surviving node.
    """
    if n < 0:
        raise ValueError("length must be nonnegative")
    check_binary(prefix)
    if len(prefix) > n:
        return
    f = _Fields(n)
    state = (0, 0, 0, 0, 0)
    for ch in prefix:
        state = f.extend(state, ch == "1")
        if state is None:
            return
    # Inlined copy of _Fields.extend: this loop is the hot path of every census.
    width, field = f.width, f.field
    ones, guard, mask = f.ones, f.guard, f.mask
    shift = width - 1
    stack = [state]
    pop, push = stack.pop, stack.append
    while stack:
        m, code, counts, lo, hi = pop()
        if m == n:
            yield code
            continue
        gm, om, mm = guard[m], ones[m], mask[m]
        for a in (1, 0):
            new = (counts << width) + (ones[m + 1] if a else 0)
            cm = new & mm
            if (lo + om + gm - cm) & gm != gm or (cm + om + gm - hi) & gm != gm:
                continue
            child = code | (a << m)
            if prune is not None and prune(child, m + 1):
                continue
            if depth_hook is not None:
                depth_hook(child, m + 1)
            sel = (((cm + gm - lo) & gm) >> shift) * field
            lo2 = (lo & sel) | (cm & ~sel)
            sel = (((hi + gm - cm) & gm) >> shift) * field
            hi2 = (hi & sel) | (cm & ~sel)
            top = new ^ cm
            push((m + 1, child, new, lo2 | top, hi2 | top))


def enumerate_balanced(n: int, prefix: str = "") -> Iterator[str]:
    """Stream the balanced binary words of length n in lexicographic order."""
    for code in balanced_codes(n, prefix):
        yield from_code(code, n)


def euler_phi(m: int) -> int:
    if m < 1:
        raise ValueError("phi is defined for positive integers")
    result = m
    q = 2
    while q * q <= m:
        if m % q == 0:
            while m % q == 0:
                m //= q
            result -= result // q
        q += 1
    if m > 1:
        result -= result // m
    return result


def balanced_count(n: int) -> int:
    """Number of balanced binary words of length n: 1 + sum (n - i + 1) phi(i)."""
    if n < 0:
        raise ValueError("length must be nonnegative")
    return 1 + sum((n - i + 1) * euler_phi(i) for i in range(1, n + 1))
