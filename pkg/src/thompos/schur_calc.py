"""Super Schur functions S_I(E - F), at the level of roots and of Chern classes.

Two evaluations are provided. :func:`schur_super` works with explicit Chern
roots and is the ground truth for small ranks. :func:`schur_super_chern`
works with the Chern classes c_i(E), c_j(F) directly, where changing rank is
just setting the top classes to zero; it is what the suspension-stability
and corpus round-trip checks run on.
"""

from __future__ import annotations

from functools import lru_cache

from .chernpoly import C, CP, ChernPolynomial, Variable, c, cp
from .determinant import laplace_det
from .partitions import Partition
from .roots import RootPolynomial, VirtualPair, roots_to_chern, segre_coefficient
from .schur_basis import SchurExpansion, dualize, expand_to_schur

__all__ = [
    "segre_coefficient",
    "schur_super",
    "dualize",
    "evaluate_expansion",
    "segre_chern",
    "schur_super_chern",
    "evaluate_expansion_chern",
    "recover_expansion",
    "check_suspension_stability",
]


def schur_super(partition, pair: VirtualPair) -> RootPolynomial:
    """S_I(E - F) = det |S_{i_p + p - q}(E - F)| expanded in the roots."""
    parts = Partition(partition)
    alphabet = pair.alphabet
    segre: dict[int, RootPolynomial] = {}

    def entry(p: int, q: int) -> RootPolynomial:
        k = parts[p] + p - q
        if k < 0:
            return RootPolynomial(alphabet)
        if k not in segre:
            segre[k] = segre_coefficient(pair, k, alphabet)
        return segre[k]

    return laplace_det(
        len(parts), entry, RootPolynomial(alphabet), RootPolynomial.constant(alphabet, 1)
    )


def evaluate_expansion(expansion: SchurExpansion, pair: VirtualPair) -> RootPolynomial:
    total = RootPolynomial(pair.alphabet)
    for key, coeff in expansion.items():
        total = total + schur_super(key, pair) * coeff
    return total


@lru_cache(maxsize=None)
def _complete_chern(k: int, m: int) -> ChernPolynomial:
    # h_k(E) from h_k = sum_{i=1..min(k,m)} (-1)^(i-1) c_i h_{k-i}
    if k < 0:
        return ChernPolynomial()
    if k == 0:
        return ChernPolynomial.constant(1)
    total = ChernPolynomial()
    for i in range(1, min(k, m) + 1):
        total = total + c(i) * _complete_chern(k - i, m) * (-1) ** (i - 1)
    return total


@lru_cache(maxsize=None)
def segre_chern(k: int, m: int, n: int) -> ChernPolynomial:
    """S_k(E - F) in c_1..c_m (of E) and cp_1..cp_n (of F)."""
    if k < 0:
        return ChernPolynomial()
    total = ChernPolynomial()
    for j in range(0, min(k, n) + 1):
        h = _complete_chern(k - j, m)
        if h:
            total = total + (h * cp(j) if j else h) * (-1) ** j
    return total


@lru_cache(maxsize=4096)
def schur_super_chern(partition: Partition, m: int, n: int) -> ChernPolynomial:
    """S_I(E - F) for rank E = m, rank F = n, in Chern classes."""
    parts = Partition(partition)
    return laplace_det(
        len(parts),
        lambda p, q: segre_chern(parts[p] + p - q, m, n),
        ChernPolynomial(),
        ChernPolynomial.constant(1),
    )


def evaluate_expansion_chern(expansion: SchurExpansion, m: int, n: int) -> ChernPolynomial:
    total = ChernPolynomial()
    for key, coeff in expansion.items():
        total = total + schur_super_chern(key, m, n) * coeff
    return total


def _zero(kind: int, indices) -> dict:
    return {Variable(kind, i): 0 for i in indices}


def recover_expansion(poly: ChernPolynomial, m: int, n: int) -> tuple[SchurExpansion, SchurExpansion]:
    """Read a rank-(m, n) image back into the Schur basis, once from each side.

    Setting F = 0 leaves classical Schur polynomials in the roots of E
    (partitions with at most m parts). Setting E = 0 leaves
    S_I(-F) = (-1)^|I| S_{I~}(F), which is undone by conjugation (partitions
    with parts at most n). Both readings are returned.
    """
    degree = poly.degree()
    e_only = poly.specialize(_zero(CP, range(1, n + 1)))
    e_side = expand_to_schur(e_only).restrict(lambda k: k.length <= m)

    f_only = poly.specialize(_zero(C, range(1, m + 1)))
    renamed = f_only.specialize({Variable(CP, j): c(j) for j in range(1, n + 1)})
    flipped = expand_to_schur(renamed).restrict(lambda k: k.length <= n)
    sign = -1 if degree and degree % 2 else 1
    f_side = dualize(flipped) * sign
    return e_side, f_side


def check_suspension_stability(partition, m: int, n: int, method: str = "chern") -> bool:
    """Whether S_I at ranks (m+1, n+1), with c_{m+1} = cp_{n+1} = 0, equals S_I at (m, n).

    ``method="chern"`` evaluates both sides directly in Chern classes;
    ``method="roots"`` evaluates in explicit roots and eliminates them first.
    """
    if m < 0 or n < 0:
        raise ValueError("ranks must be nonnegative")
    parts = Partition(partition)
    drop = {Variable(C, m + 1): 0, Variable(CP, n + 1): 0}
    if method == "chern":
        big = schur_super_chern(parts, m + 1, n + 1)
        small = schur_super_chern(parts, m, n)
    elif method == "roots":
        big_pair = VirtualPair.of_ranks(m + 1, n + 1)
        small_pair = VirtualPair.of_ranks(m, n)
        big = roots_to_chern(schur_super(parts, big_pair), big_pair)
        small = roots_to_chern(schur_super(parts, small_pair), small_pair)
    else:
        raise ValueError(f"unknown method {method!r}")
    return big.specialize(drop) == small
