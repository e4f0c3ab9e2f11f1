# src/signet/maslov/__init__.py
"""Symplectic cocycles and the modular group."""

from signet.maslov.dedekind import (
    dedekind_cot,
    dedekind_cross_check,
    dedekind_sum,
    dedekind_sum_direct,
    sawtooth,
    sawtooth_defect,
)
from signet.maslov.defect import (
    CONVENTIONS,
    DEFAULT_CONVENTION,
    DefectConvention,
    defect_lhs,
    search_conventions,
    signature_defect_check,
)
from signet.maslov.modular import (
    PSL2Word,
    parse_word,
    psl2_evaluate,
    psl2_normal_form,
    rademacher,
    same_in_psl2,
    validate_sl2,
    word_matrix,
    word_u_sum,
)
from signet.maslov.symplectic import (
    Lagrangian,
    SympSpace,
    coordinate_lagrangian,
    graph_lagrangian,
    is_symplectic,
    symmetric_graph,
    validate_symplectic,
)
from signet.maslov.wall import Triformation, cocycle_defect, meyer, meyer_pair, wall_form, wall_maslov

__all__ = [
    "CONVENTIONS",
    "DEFAULT_CONVENTION",
    "DefectConvention",
    "Lagrangian",
    "PSL2Word",
    "SympSpace",
    "Triformation",
    "cocycle_defect",
    "coordinate_lagrangian",
    "dedekind_cot",
    "dedekind_cross_check",
    "dedekind_sum",
    "dedekind_sum_direct",
    "defect_lhs",
    "graph_lagrangian",
    "is_symplectic",
    "meyer",
    "meyer_pair",
    "parse_word",
    "psl2_evaluate",
    "psl2_normal_form",
    "rademacher",
    "same_in_psl2",
    "sawtooth",
    "sawtooth_defect",
    "search_conventions",
    "signature_defect_check",
    "symmetric_graph",
    "validate_sl2",
    "validate_symplectic",
    "wall_form",
    "wall_maslov",
    "word_matrix",
    "word_u_sum",
]
