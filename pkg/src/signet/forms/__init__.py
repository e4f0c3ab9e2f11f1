# src/signet/forms/__init__.py
"""Epsilon-symmetric and hermitian forms over exact fields."""

from signet.forms.diagonalize import (
    Diagonalization,
    diagonalize,
    generator_relation,
    hyperbolic_split,
    standard_symplectic,
    symplectic_basis,
)
from signet.forms.formation import Formation, FormationBoundary, boundary_formation, formation_boundary
from signet.forms.lpoly import LPolynomial, l_genus_check, l_polynomial
from signet.forms.matrix import EpsSymMatrix, as_form
from signet.forms.plumbing import e8_matrix, plumb, plumb_complement, plumbing_matrix
from signet.forms.signature import (
    MinorSequence,
    SignatureProfile,
    principal_minors,
    signature,
    signature_eps,
    tau,
    variation,
)

__all__ = [
    "Diagonalization",
    "EpsSymMatrix",
    "Formation",
    "FormationBoundary",
    "LPolynomial",
    "MinorSequence",
    "SignatureProfile",
    "as_form",
    "boundary_formation",
    "diagonalize",
    "e8_matrix",
    "formation_boundary",
    "generator_relation",
    "hyperbolic_split",
    "l_genus_check",
    "l_polynomial",
    "plumb",
    "plumb_complement",
    "plumbing_matrix",
    "principal_minors",
    "signature",
    "signature_eps",
    "standard_symplectic",
    "symplectic_basis",
    "tau",
    "variation",
]
