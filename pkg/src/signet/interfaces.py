# src/signet/interfaces.py
"""Public API surface for signet.

One import path for the operations other code is expected to call; the
subpackages stay free to move helpers around behind it.
"""

from signet.errors import (
    DomainError,
    NotSymplecticError,
    ParseError,
    ShapeError,
    SignetError,
    SingularError,
    UnsatisfiableError,
)
from signet.exact import CycNumber, Poly, RatFunc, Rational, to_fraction
from signet.forms import (
    EpsSymMatrix,
    SignatureProfile,
    diagonalize,
    e8_matrix,
    formation_boundary,
    l_polynomial,
    plumb,
    principal_minors,
    signature,
)
from signet.knots import (
    BraidWord,
    SeifertMatrix,
    alexander,
    fibred_seifert,
    knot_signature,
    omega_signature,
    parse_braid,
    s_equiv_enlarge,
    seifert_matrix,
    signature_function,
)
from signet.maslov import (
    Lagrangian,
    SympSpace,
    dedekind_sum,
    meyer,
    psl2_normal_form,
    rademacher,
    signature_defect_check,
    wall_maslov,
)
from signet.sturm import (
    RealAlgebraic,
    bezoutian,
    cf_eval,
    cf_expand,
    count_roots,
    isolate_roots,
    jacobi_hermite,
    sturm_chain,
    sturm_tri,
    tri,
)
from signet.witt import (
    LinkingFormZ,
    lens_linking,
    linking_boundary,
    residue,
    witt_fp,
    witt_q,
    witt_rx,
)

__all__ = [
    "BraidWord",
    "CycNumber",
    "DomainError",
    "EpsSymMatrix",
    "Lagrangian",
    "LinkingFormZ",
    "NotSymplecticError",
    "ParseError",
    "Poly",
    "RatFunc",
    "Rational",
    "RealAlgebraic",
    "SeifertMatrix",
    "ShapeError",
    "SignatureProfile",
    "SignetError",
    "SingularError",
    "SympSpace",
    "UnsatisfiableError",
    "alexander",
    "bezoutian",
    "cf_eval",
    "cf_expand",
    "count_roots",
    "dedekind_sum",
    "diagonalize",
    "e8_matrix",
    "fibred_seifert",
    "formation_boundary",
    "isolate_roots",
    "jacobi_hermite",
    "knot_signature",
    "l_polynomial",
    "lens_linking",
    "linking_boundary",
    "meyer",
    "omega_signature",
    "parse_braid",
    "plumb",
    "principal_minors",
    "psl2_normal_form",
    "rademacher",
    "residue",
    "s_equiv_enlarge",
    "seifert_matrix",
    "signature",
    "signature_defect_check",
    "signature_function",
    "sturm_chain",
    "sturm_tri",
    "tri",
    "to_fraction",
    "witt_fp",
    "witt_q",
    "witt_rx",
]
