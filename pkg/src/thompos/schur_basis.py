"""Schur-basis expansions and their arithmetic.

Everything is reduced to polynomials in the Segre atoms S_1, S_2, ...; a
Schur function S_I is its determinant in those atoms, and a polynomial is
expanded back by unitriangular elimination against dominance order.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, Mapping

from .chernpoly import (
    C,
    CP,
    SCHUR,
    SEG,
    ChernPolynomial,
    MixedBasisError,
    NotHomogeneousError,
    Variable,
    format_terms,
    parse_expr,
    seg,
)
from .determinant import laplace_det
from .partitions import Partition, conjugate, order_key
from .roots import BundleSpec, RootPolynomial, VirtualPair, check_symmetric, roots_to_chern


class SchurExpansion(Mapping):
    """Homogeneous integer combination of Schur basis elements.

    Keys are :class:`Partition`, values nonzero ints. Iteration follows the
    printing order: descending dominance, lexicographic tie-break.
    """

    __slots__ = ("_coeffs", "_order")

    def __init__(self, coeffs: Mapping | Iterable[tuple] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        merged: dict[Partition, int] = {}
        for key, value in items:
            key = Partition(key)
            merged[key] = merged.get(key, 0) + int(value)
        self._coeffs = {k: v for k, v in merged.items() if v}
        weights = {k.weight for k in self._coeffs}
        if len(weights) > 1:
            raise NotHomogeneousError(f"expansion mixes weights {sorted(weights)}")
        self._order = sorted(self._coeffs, key=order_key)

    def __getitem__(self, key) -> int:
        return self._coeffs[Partition(key)]

    def get(self, key, default=0):
        return self._coeffs.get(Partition(key), default)

    def __iter__(self) -> Iterator[Partition]:
        return iter(self._order)

    def __len__(self) -> int:
        return len(self._coeffs)

    def __contains__(self, key) -> bool:
        return Partition(key) in self._coeffs

    @property
    def degree(self) -> int | None:
        return self._order[0].weight if self._order else None

    def coefficient_sum(self) -> int:
        return sum(self._coeffs.values())

    def __eq__(self, other) -> bool:
        if isinstance(other, SchurExpansion):
            return self._coeffs == other._coeffs
        if isinstance(other, Mapping):
            return self == SchurExpansion(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._coeffs.items()))

    def __add__(self, other: SchurExpansion) -> SchurExpansion:
        return SchurExpansion(list(self.items()) + list(other.items()))

    def __neg__(self) -> SchurExpansion:
        return SchurExpansion({k: -v for k, v in self.items()})

    def __sub__(self, other: SchurExpansion) -> SchurExpansion:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return SchurExpansion({k: v * other for k, v in self.items()})
        if isinstance(other, SchurExpansion):
            return schur_multiply(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def restrict(self, keep) -> SchurExpansion:
        return SchurExpansion({k: v for k, v in self.items() if keep(k)})

    def __str__(self) -> str:
        return format_terms(
            (v, k.bracket() if k else "") for k, v in self.items()
        )

    def __repr__(self) -> str:
        return f"SchurExpansion({str(self)!r})"

    def to_seg(self) -> ChernPolynomial:
        """The expansion as a polynomial in Segre atoms."""
        total = ChernPolynomial()
        for k, v in self.items():
            total = total + jacobi_trudi(k) * v
        return total


def seg_partition(mono) -> Partition:
    """The partition labelling a monomial S_{m1} S_{m2} ... in Segre atoms."""
    parts = []
    for var, exp in mono:
        if var.kind != SEG:
            raise MixedBasisError(f"expected Segre atoms only, found {var}")
        parts.extend([var.index] * exp)
    return Partition(parts)


def seg_monomial(partition: Partition) -> tuple:
    powers: dict[Variable, int] = {}
    for p in partition:
        var = Variable(SEG, p)
        powers[var] = powers.get(var, 0) + 1
    return tuple(sorted(powers.items()))


@lru_cache(maxsize=None)
def jacobi_trudi(partition: Partition) -> ChernPolynomial:
    """S_I as the determinant |S_{i_p + p - q}| in Segre atoms.

    ``partition`` is weakly increasing, rows follow its parts in order.
    """
    parts = Partition(partition)
    return laplace_det(
        len(parts),
        lambda p, q: seg(parts[p] + p - q),
        ChernPolynomial(),
        ChernPolynomial.constant(1),
    )


@lru_cache(maxsize=None)
def elementary_in_seg(k: int) -> ChernPolynomial:
    """The k-th elementary symmetric function in terms of complete ones.

    Uses e_k = sum_{i=1..k} (-1)^(i-1) h_i e_{k-i}.
    """
    if k < 0:
        return ChernPolynomial()
    if k == 0:
        return ChernPolynomial.constant(1)
    total = ChernPolynomial()
    for i in range(1, k + 1):
        total = total + seg(i) * elementary_in_seg(k - i) * (-1) ** (i - 1)
    return total


def to_seg_polynomial(poly: ChernPolynomial) -> ChernPolynomial:
    """Rewrite Schur atoms as determinants in Segre atoms.

    Plain ``c[i]`` variables are read as Chern classes of a single bundle
    (F = 0), i.e. elementary symmetric functions. ``cp`` variables are
    rejected.
    """
    kinds = poly.kinds()
    if CP in kinds:
        raise MixedBasisError("cp[...] variables have no Schur expansion without a rank-(m,n) context")
    if C in kinds and kinds & {SEG, SCHUR}:
        raise MixedBasisError("polynomial mixes c[...] with S[...] atoms")
    assignments = {}
    for var in poly.variables():
        if var.kind == SCHUR:
            assignments[var] = jacobi_trudi(var.index)
        elif var.kind == C:
            assignments[var] = elementary_in_seg(var.index)
    return poly.specialize(assignments)


def in_hook(partition: Partition, m: int, n: int) -> bool:
    """Whether S_I(E - F) can be nonzero for rank E = m, rank F = n."""
    dec = partition.decreasing
    return len(dec) <= m or dec[m] <= n


def expand_to_schur(
    poly: ChernPolynomial, rank_hint: tuple[int, int] | None = None
) -> SchurExpansion:
    """Unique Schur expansion of a homogeneous polynomial in Segre atoms.

    Picks the term whose partition is lowest in dominance order; its Segre
    monomial is the diagonal of exactly one determinant, with coefficient 1,
    and every other monomial of that determinant dominates it. Subtracting
    and repeating terminates with exact integer coefficients.

    With ``rank_hint=(m, n)``, partitions outside the (m, n)-hook (whose
    super Schur functions vanish at those ranks) are dropped.
    """
    work = to_seg_polynomial(poly)
    work.degree()
    found: dict[Partition, int] = {}
    terms = {seg_partition(m): k for m, k in work.items()}
    while terms:
        lowest = max(terms, key=order_key)
        coeff = terms[lowest]
        found[lowest] = coeff
        det = jacobi_trudi(lowest)
        pivot = det.coefficient(seg_monomial(lowest))
        if pivot != 1:
            raise ArithmeticError(f"unexpected pivot {pivot} for {lowest}")
        for mono, k in det.items():
            key = seg_partition(mono)
            value = terms.get(key, 0) - coeff * k
            if value:
                terms[key] = value
            else:
                terms.pop(key, None)
    result = SchurExpansion(found)
    if rank_hint is not None:
        m, n = rank_hint
        result = result.restrict(lambda k: in_hook(k, m, n))
    return result


def schur_multiply(left: SchurExpansion, right: SchurExpansion) -> SchurExpansion:
    return expand_to_schur(left.to_seg() * right.to_seg())


def expansion_from_poly(poly: ChernPolynomial) -> SchurExpansion:
    """Read a polynomial in Schur/Segre atoms as a Schur expansion.

    Linear combinations of Schur atoms are read off directly; products and
    powers are multiplied out.
    """
    kinds = poly.kinds()
    if kinds <= {SCHUR} and all(
        len(mono) <= 1 and all(e == 1 for _, e in mono) for mono, _ in poly.items()
    ):
        coeffs = {}
        for mono, k in poly.items():
            coeffs[mono[0][0].index if mono else Partition()] = k
        return SchurExpansion(coeffs)
    if not poly.is_homogeneous():
        raise NotHomogeneousError(f"expression has degrees {sorted(poly.degrees())}")
    return expand_to_schur(poly)


def parse_schur(text: str) -> SchurExpansion:
    """Parse ``24*S[4] + 26*S[1,3] + ...`` into an expansion."""
    return expansion_from_poly(parse_expr(text))


def expand_root_polynomial(poly: RootPolynomial, bundle: BundleSpec) -> SchurExpansion:
    """Classical Schur expansion of a symmetric polynomial in the roots of ``bundle``.

    Partitions with more parts than the rank are absent (their Schur
    polynomials vanish identically in that many variables).
    """
    restricted = poly.over(bundle.roots)
    degrees = restricted.degrees()
    if len(degrees) > 1:
        raise NotHomogeneousError(f"root polynomial has degrees {sorted(degrees)}")
    check_symmetric(restricted, bundle.roots)
    chern = roots_to_chern(restricted, VirtualPair(bundle, BundleSpec()))
    result = expand_to_schur(chern)
    return result.restrict(lambda k: k.length <= bundle.rank)


def dualize(expansion: SchurExpansion) -> SchurExpansion:
    """Replace every S_I by S_{I~}: passes from the E* - F* to the F - E reading."""
    return SchurExpansion({conjugate(k): v for k, v in expansion.items()})
