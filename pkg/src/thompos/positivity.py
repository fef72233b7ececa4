"""Numerical positivity for ample bundles, decided on Schur coefficients.

A homogeneous symmetric polynomial sum_I b_I S_I is numerically positive for
ample vector bundles exactly when every b_I >= 0 and sum_I b_I > 0. No
geometry is computed; this is the coefficient test only.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Union

from .chernpoly import ChernPolynomial, NotHomogeneousError
from .partitions import Partition, print_partition
from .roots import BundleSpec, RootPolynomial
from .schur_basis import SchurExpansion, expand_root_polynomial, expansion_from_poly

if TYPE_CHECKING:
    from .corpus import ThomRecord

POSITIVE = "POSITIVE"
NOT_POSITIVE = "NOT_POSITIVE"
ZERO_SUM = "zero-sum"


@dataclass(frozen=True)
class PositivityVerdict:
    status: str
    coefficient_sum: int
    witness: Union[Partition, str, None] = None

    @property
    def positive(self) -> bool:
        return self.status == POSITIVE

    def __bool__(self) -> bool:
        return self.positive

    def __str__(self) -> str:
        if self.positive:
            return f"{POSITIVE} sum={self.coefficient_sum}"
        witness = self.witness if isinstance(self.witness, str) else print_partition(self.witness)
        return f"{NOT_POSITIVE} witness={witness}"


Certifiable = Union[SchurExpansion, ChernPolynomial, RootPolynomial]


def as_expansion(poly: Certifiable) -> SchurExpansion:
    if isinstance(poly, SchurExpansion):
        return poly
    if isinstance(poly, RootPolynomial):
        return expand_root_polynomial(poly, BundleSpec(poly.alphabet))
    if isinstance(poly, ChernPolynomial):
        return expansion_from_poly(poly)
    raise TypeError(f"cannot certify a {type(poly).__name__}")


def certify(poly: Certifiable, rank_bound: int | None = None) -> PositivityVerdict:
    """Apply the coefficient criterion.

    With ``rank_bound=e`` the polynomial is read in e variables, so Schur
    functions with more than e parts (which vanish there) are ignored.
    """
    if isinstance(poly, ChernPolynomial) and not poly.is_homogeneous():
        raise NotHomogeneousError(f"polynomial has degrees {sorted(poly.degrees())}")
    expansion = as_expansion(poly)
    if rank_bound is not None:
        expansion = expansion.restrict(lambda k: k.length <= rank_bound)
    total = expansion.coefficient_sum()
    for key, coeff in expansion.items():
        if coeff < 0:
            return PositivityVerdict(NOT_POSITIVE, total, key)
    if total <= 0:
        return PositivityVerdict(NOT_POSITIVE, total, ZERO_SUM)
    return PositivityVerdict(POSITIVE, total)


def verify_thom_positivity(record: ThomRecord) -> PositivityVerdict:
    return certify(record.expansion)
