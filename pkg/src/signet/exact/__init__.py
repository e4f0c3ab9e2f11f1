# src/signet/exact/__init__.py
"""Exact scalar tower: rationals, polynomials, rational functions, cyclotomics."""

from signet.exact.cyclotomic import CycNumber, cyc_sign, cyclotomic_polynomial, evaluate_poly, real_enclosure
from signet.exact.factor import factor_poly, is_irreducible, squarefree_core
from signet.exact.poly import Poly, poly_divmod, poly_gcd, poly_xgcd, primitive_remainder, squarefree_part
from signet.exact.ratfunc import RatFunc
from signet.exact.rational import Rational, fraction_to_str, sign, to_fraction

__all__ = [
    "CycNumber",
    "Poly",
    "RatFunc",
    "Rational",
    "cyc_sign",
    "cyclotomic_polynomial",
    "evaluate_poly",
    "factor_poly",
    "fraction_to_str",
    "is_irreducible",
    "poly_divmod",
    "poly_gcd",
    "poly_xgcd",
    "primitive_remainder",
    "real_enclosure",
    "sign",
    "squarefree_core",
    "squarefree_part",
    "to_fraction",
]
