# src/signet/maslov/defect.py
"""Signature defect of tridiagonal forms against Dedekind sums.

For a regular continued fraction ``chi`` the left-hand side is
``tau(Tri(chi)) - (sum chi) / 3``. The right-hand side is read off an
``SL(2, Z)`` matrix ``A = [[a, b], [c, d]]`` built from ``chi``::

    (a + d) / (3 * scale) - 4 sign(c) s(x, c)     c != 0
    b / (3 d)                                      c = 0

where ``x`` is ``a`` or ``d`` and ``scale`` is 1 (``"plain"``) or ``c``
(``"rademacher"``). Which matrix and which choices make the two sides agree
is a convention; :data:`CONVENTIONS` enumerates the candidates and
:func:`search_conventions` keeps those that hold on every instance.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Sequence, Tuple, Union

from signet.errors import DomainError
from signet.exact.rational import sign
from signet.forms.linalg import Matrix, identity, inverse, mat_mul, transpose
from signet.forms.signature import signature
from signet.maslov.dedekind import dedekind_sum
from signet.maslov.modular import S_MATRIX, validate_sl2
from signet.sturm.contfrac import ContinuedFraction, cf_matrix, tri

logger = logging.getLogger(__name__)

_S = [list(r) for r in S_MATRIX]


def _product(chi) -> Matrix:
    return cf_matrix(chi) if len(chi) else identity(2)


def _reverse(chi) -> Matrix:
    return _product(chi.reversed())


MATRIX_FORMS: Dict[str, Callable[[ContinuedFraction], Matrix]] = {
    "product": _product,
    "reverse": _reverse,
    "inverse": lambda chi: inverse(_product(chi)),
    "transpose": lambda chi: transpose(_product(chi)),
    "s_prefix": lambda chi: mat_mul(_S, _product(chi)),
    "s_suffix": lambda chi: mat_mul(_product(chi), _S),
    "s_prefix_inverse": lambda chi: inverse(mat_mul(_S, _product(chi))),
    "s_suffix_inverse": lambda chi: inverse(mat_mul(_product(chi), _S)),
}
DEDEKIND_ARGS = ("a", "d")
TRACE_SCALINGS = ("plain", "rademacher")


@dataclass(frozen=True)
class DefectConvention:
    """How to build ``A`` from ``chi`` and how to read the right-hand side."""

    matrix_form: str
    dedekind_arg: str = "a"
    trace_scaling: str = "plain"

    def __post_init__(self):
        if self.matrix_form not in MATRIX_FORMS:
            raise DomainError(f"unknown matrix form {self.matrix_form!r}")
        if self.dedekind_arg not in DEDEKIND_ARGS:
            raise DomainError(f"unknown dedekind argument {self.dedekind_arg!r}")
        if self.trace_scaling not in TRACE_SCALINGS:
            raise DomainError(f"unknown trace scaling {self.trace_scaling!r}")

    @property
    def name(self) -> str:
        return f"{self.matrix_form}/{self.dedekind_arg}/{self.trace_scaling}"

    @classmethod
    def parse(cls, name: str) -> "DefectConvention":
        """``"form/arg/scaling"``; missing parts take their defaults."""
        parts = name.split("/")
        if not 1 <= len(parts) <= 3:
            raise DomainError(f"bad convention name {name!r}")
        return cls(*parts)

    def build(self, chi) -> List[List[int]]:
        chi = chi if isinstance(chi, ContinuedFraction) else ContinuedFraction.of(chi)
        return [[int(x) for x in row] for row in MATRIX_FORMS[self.matrix_form](chi)]

    def rhs(self, A) -> Fraction:
        a, b, c, d = validate_sl2(A)
        if c == 0:
            if d == 0:
                raise DomainError("c = 0 branch needs d != 0")
            return Fraction(b, 3 * d)
        scale = c if self.trace_scaling == "rademacher" else 1
        x = a if self.dedekind_arg == "a" else d
        return Fraction(a + d, 3 * scale) - 4 * sign(c) * dedekind_sum(x, c)


CONVENTIONS: Tuple[DefectConvention, ...] = tuple(
    DefectConvention(m, x, t) for m in MATRIX_FORMS for x in DEDEKIND_ARGS for t in TRACE_SCALINGS
)
DEFAULT_CONVENTION = DefectConvention("s_prefix_inverse", "a", "rademacher")


def _validate_chi(chi) -> ContinuedFraction:
    chi = chi if isinstance(chi, ContinuedFraction) else ContinuedFraction.of(chi)
    if any(Fraction(x).denominator != 1 for x in chi):
        raise DomainError("defect identity needs integer entries")
    if not chi.is_regular():
        raise DomainError("defect identity needs a regular continued fraction")
    return chi


def defect_lhs(chi) -> Fraction:
    """``tau(Tri(chi)) - (sum chi) / 3``."""
    chi = _validate_chi(chi)
    t = signature(tri(chi)).tau if len(chi) else 0
    return t - Fraction(sum(chi, Fraction(0))) / 3


def signature_defect_check(
    chi,
    A=None,
    convention: Union[str, DefectConvention] = DEFAULT_CONVENTION,
) -> Tuple[Fraction, Fraction]:
    """Both sides of the defect identity, exactly.

    :param chi: Regular continued fraction with integer entries.
    :param A: Optional ``SL(2, Z)`` candidate; built from ``chi`` by the convention when omitted.
    :param convention: :class:`DefectConvention` or its ``"form/arg/scaling"`` name.
    :returns: ``(lhs, rhs)``; equality is left to the caller.
    :raises DomainError: On a singular ``chi``, ``det A != 1`` or an unknown convention.
    """
    if isinstance(convention, str):
        convention = DefectConvention.parse(convention)
    lhs = defect_lhs(chi)
    if A is None:
        A = convention.build(chi)
    return lhs, convention.rhs(A)


def _survives(convention: DefectConvention, instances: Sequence[ContinuedFraction]) -> bool:
    for chi in instances:
        lhs, rhs = signature_defect_check(chi, convention=convention)
        if lhs != rhs:
            return False
    return True


def search_conventions(
    instances: Sequence[Sequence[int]],
    conventions: Sequence[DefectConvention] = CONVENTIONS,
    jobs: int = 1,
) -> List[DefectConvention]:
    """Every convention satisfying the identity on all instances, in enumeration order.

    :param instances: Regular integer continued fractions.
    :param int jobs: Worker threads; results are merged in enumeration order.
    """
    chis = [_validate_chi(chi) for chi in instances]
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            flags = list(pool.map(lambda conv: _survives(conv, chis), conventions))
    else:
        flags = [_survives(conv, chis) for conv in conventions]
    survivors = [conv for conv, ok in zip(conventions, flags) if ok]
    logger.debug("search_conventions: %d of %d survive", len(survivors), len(conventions))
    return survivors
