"""Exact Schur-function calculus in differences of vector bundles.

Positivity of Schur expansions of Thom polynomials, checked on a built-in
corpus, plus the arithmetic behind it.
"""

from .chernpoly import ChernPolynomial, Variable, c, cp, parse_expr, seg
from .corpus import ThomRecord, load_corpus, verify_corpus
from .partitions import Partition, conjugate, dominance_leq, parse_partition, partitions_of, print_partition
from .positivity import PositivityVerdict, certify, verify_thom_positivity
from .roots import BundleSpec, RootPolynomial, VirtualPair
from .schur_basis import (
    SchurExpansion,
    dualize,
    expand_root_polynomial,
    expand_to_schur,
    parse_schur,
    schur_multiply,
)
from .schur_calc import (
    check_suspension_stability,
    evaluate_expansion,
    schur_super,
    segre_coefficient,
)

__all__ = [
    "BundleSpec", "ChernPolynomial", "Partition", "PositivityVerdict", "RootPolynomial",
    "SchurExpansion", "ThomRecord", "Variable", "VirtualPair", "c", "certify",
    "check_suspension_stability", "conjugate", "cp", "dominance_leq", "dualize",
    "evaluate_expansion", "expand_root_polynomial", "expand_to_schur", "load_corpus",
    "parse_expr", "parse_partition", "parse_schur", "partitions_of", "print_partition",
    "schur_multiply", "schur_super", "seg", "segre_coefficient", "verify_corpus",
    "verify_thom_positivity",
]
