# src/signet/knots/__init__.py
"""Braids, Seifert matrices and signature invariants of their closures."""

from signet.knots.braid import BraidWord, closure_components, mirror, parse_braid, permutation, stabilize
from signet.knots.seifert import (
    SeifertMatrix,
    alexander,
    as_seifert,
    fibred_seifert,
    is_unimodular,
    knot_signature,
    normalize_alexander,
    s_equiv_enlarge,
    seifert_matrix,
)
from signet.knots.signature import (
    MAX_CONDUCTOR,
    SignatureFunction,
    circle_roots,
    compact_form,
    milnor_signatures,
    omega_signature,
    sample_angle,
    signature_function,
)

__all__ = [
    "MAX_CONDUCTOR",
    "BraidWord",
    "SeifertMatrix",
    "SignatureFunction",
    "alexander",
    "as_seifert",
    "circle_roots",
    "closure_components",
    "compact_form",
    "fibred_seifert",
    "is_unimodular",
    "knot_signature",
    "milnor_signatures",
    "mirror",
    "normalize_alexander",
    "omega_signature",
    "parse_braid",
    "permutation",
    "s_equiv_enlarge",
    "sample_angle",
    "seifert_matrix",
    "signature_function",
    "stabilize",
]
