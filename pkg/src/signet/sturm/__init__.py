# src/signet/sturm/__init__.py
"""Sturm chains, continued fractions, tridiagonal forms and root-counting matrices."""

from signet.sturm.chain import (
    SturmChain,
    SturmSequence,
    count_real_roots,
    count_roots,
    primitive_sturm_sequence,
    root_bound,
    sign_variations,
    sturm_chain,
)
from signet.sturm.contfrac import (
    CFValue,
    ContinuedFraction,
    cf_eval,
    cf_expand,
    cf_matrix,
    m_matrix,
    reverse_cf,
    sturm_tri,
    tri,
    tri_minors,
)
from signet.sturm.hermite import (
    JacobiHermiteData,
    bezoutian,
    companion_matrix,
    hermite_count,
    hermite_matrix,
    jacobi_hermite,
    power_sums,
)
from signet.sturm.roots import RealAlgebraic, isolate_roots, ra_compare, refine

__all__ = [
    "CFValue",
    "ContinuedFraction",
    "JacobiHermiteData",
    "RealAlgebraic",
    "SturmChain",
    "SturmSequence",
    "bezoutian",
    "cf_eval",
    "cf_expand",
    "cf_matrix",
    "companion_matrix",
    "count_real_roots",
    "count_roots",
    "hermite_count",
    "hermite_matrix",
    "isolate_roots",
    "jacobi_hermite",
    "m_matrix",
    "power_sums",
    "primitive_sturm_sequence",
    "ra_compare",
    "refine",
    "reverse_cf",
    "root_bound",
    "sign_variations",
    "sturm_chain",
    "sturm_tri",
    "tri",
    "tri_minors",
]
