"""Laplace expansion over a commutative ring, memoized on column subsets."""

from __future__ import annotations

from typing import Callable, TypeVar

R = TypeVar("R")


def laplace_det(size: int, entry: Callable[[int, int], R], zero: R, one: R) -> R:
    """Determinant of the ``size x size`` matrix ``entry(row, col)``.

    Expands along rows top to bottom; the minor of the remaining rows depends
    only on which columns are still free, so there are at most ``2**size``
    distinct minors. Zero entries (falsy) are skipped.
    """
    if size == 0:
        return one
    entries = [[entry(r, q) for q in range(size)] for r in range(size)]
    memo: dict[int, R] = {}

    def minor(row: int, used: int) -> R:
        if row == size:
            return one
        if used in memo:
            return memo[used]
        total = zero
        sign = 1
        for q in range(size):
            bit = 1 << q
            if used & bit:
                continue
            value = entries[row][q]
            if value:
                rest = minor(row + 1, used | bit)
                if rest:
                    term = value * rest
                    total = total + term if sign > 0 else total - term
            sign = -sign
        memo[used] = total
        return total

    return minor(0, 0)
