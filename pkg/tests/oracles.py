"""Brute-force oracles, written independently of the package code paths.

Partitions here are plain tuples in decreasing order, polynomials are dicts
from exponent tuples to integer coefficients.
"""

from __future__ import annotations

from functools import lru_cache


def partition_count(n: int) -> int:
    """p(n) by the coin-change recurrence over part sizes."""
    ways = [1] + [0] * n
    for part in range(1, n + 1):
        for total in range(part, n + 1):
            ways[total] += ways[total - part]
    return ways[n]


def cells(shape: tuple[int, ...]) -> set[tuple[int, int]]:
    return {(r, col) for r, length in enumerate(shape) for col in range(length)}


def shape_of(cell_set: set[tuple[int, int]]) -> tuple[int, ...]:
    rows: dict[int, int] = {}
    for r, _ in cell_set:
        rows[r] = rows.get(r, 0) + 1
    return tuple(sorted(rows.values(), reverse=True))


def transpose(shape: tuple[int, ...]) -> tuple[int, ...]:
    return shape_of({(col, r) for r, col in cells(shape)})


def add_one_box(shape: tuple[int, ...]) -> set[tuple[int, ...]]:
    """Every diagram obtained by adding one cell to ``shape``."""
    out = set()
    rows = list(shape) + [0]
    for r in range(len(rows)):
        if r == 0 or rows[r] < rows[r - 1]:
            grown = rows[:]
            grown[r] += 1
            out.add(tuple(x for x in grown if x))
    return out


@lru_cache(maxsize=None)
def ssyt_polynomial(shape: tuple[int, ...], n: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    """Generating polynomial of semistandard tableaux of ``shape`` with entries 1..n."""
    positions = [(r, col) for r, length in enumerate(shape) for col in range(length)]
    counts: dict[tuple[int, ...], int] = {}
    filling: dict[tuple[int, int], int] = {}

    def place(i: int) -> None:
        if i == len(positions):
            exps = [0] * n
            for v in filling.values():
                exps[v - 1] += 1
            key = tuple(exps)
            counts[key] = counts.get(key, 0) + 1
            return
        r, col = positions[i]
        low = 1
        if col > 0:
            low = max(low, filling[(r, col - 1)])
        if r > 0:
            low = max(low, filling[(r - 1, col)] + 1)
        for v in range(low, n + 1):
            filling[(r, col)] = v
            place(i + 1)
        filling.pop((r, col), None)

    place(0)
    return tuple(sorted(counts.items()))


def poly_mul(left: dict, right: dict) -> dict:
    out: dict = {}
    for m1, k1 in left.items():
        for m2, k2 in right.items():
            m = tuple(a + b for a, b in zip(m1, m2))
            out[m] = out.get(m, 0) + k1 * k2
    return {m: k for m, k in out.items() if k}


def tableau_expand(poly: dict, n: int) -> dict[tuple[int, ...], int]:
    """Schur expansion of a symmetric polynomial in n variables by stripping
    lexicographically leading monomials with tableau polynomials."""
    work = {m: k for m, k in poly.items() if k}
    out: dict[tuple[int, ...], int] = {}
    while work:
        lead = max(work)
        coeff = work[lead]
        assert all(a >= b for a, b in zip(lead, lead[1:])), "input not symmetric"
        shape = tuple(x for x in lead if x)
        out[shape] = coeff
        for m, k in ssyt_polynomial(shape, n):
            v = work.get(m, 0) - coeff * k
            if v:
                work[m] = v
            else:
                work.pop(m, None)
    return out


def schur_poly(shape: tuple[int, ...], n: int) -> dict:
    return dict(ssyt_polynomial(shape, n))
