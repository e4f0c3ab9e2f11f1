# src/signet/witt/__init__.py
"""Witt classes over Q, F_p and Q(X); linking forms and lens spaces."""

from signet.witt.finite import WittClassFp, legendre, witt_fp
from signet.witt.linking import (
    LinkingFormZ,
    TrilinkingSplit,
    chain_boundary,
    euclidean_chain,
    lens_linking,
    lens_normalize,
    linking_boundary,
    linking_invariants,
    linking_witt_eq,
    trilinking_split,
    verify_trilinking,
)
from signet.witt.ratfunc import ResidueClass, WittClassRX, is_square_mod, residue, witt_rx, witt_rx_sample
from signet.witt.rational import WittClassQ, witt_class_of_diagonal, witt_q

__all__ = [
    "LinkingFormZ",
    "ResidueClass",
    "TrilinkingSplit",
    "WittClassFp",
    "WittClassQ",
    "WittClassRX",
    "chain_boundary",
    "euclidean_chain",
    "is_square_mod",
    "legendre",
    "lens_linking",
    "lens_normalize",
    "linking_boundary",
    "linking_invariants",
    "linking_witt_eq",
    "residue",
    "trilinking_split",
    "verify_trilinking",
    "witt_class_of_diagonal",
    "witt_fp",
    "witt_q",
    "witt_rx",
    "witt_rx_sample",
]
