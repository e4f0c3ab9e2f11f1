# src/signet/maslov/modular.py
"""Normal forms in ``PSL(2, Z) = Z/2 * Z/3`` and the Rademacher function.

Generators::

    S = [[0, -1], [1, 0]]    T = [[1, 1], [0, 1]]    U = T S = [[1, -1], [1, 0]]

``S`` has order 2 and ``U`` order 3 in ``PSL(2, Z)``; every element is a
unique alternating word ``U^e0 S U^e1 S ... S U^ek`` with inner exponents
``+-1`` and outer exponents in ``{-1, 0, 1}``.
"""

import logging
import re
from dataclasses import dataclass
from typing import List, Sequence, Tuple, Union

from signet.errors import DomainError, ParseError
from signet.forms.linalg import Matrix

logger = logging.getLogger(__name__)

S_MATRIX = ((0, -1), (1, 0))
T_MATRIX = ((1, 1), (0, 1))
U_MATRIX = ((1, -1), (1, 0))
U_INVERSE = ((0, 1), (-1, 1))

Letter = Tuple[str, int]
_TOKEN = re.compile(r"^([STU])(?:\^(-?\d+))?$")


def validate_sl2(A) -> Tuple[int, int, int, int]:
    try:
        (a, b), (c, d) = A
    except (TypeError, ValueError):
        raise DomainError("expected a 2x2 integer matrix") from None
    vals = []
    for v in (a, b, c, d):
        if isinstance(v, bool) or int(v) != v:
            raise DomainError("SL(2, Z) entries must be integers")
        vals.append(int(v))
    a, b, c, d = vals
    if a * d - b * c != 1:
        raise DomainError(f"determinant is {a * d - b * c}, expected 1")
    return a, b, c, d


def _mul(A, B) -> Tuple[Tuple[int, int], Tuple[int, int]]:
    (a, b), (c, d) = A
    (e, f), (g, h) = B
    return (a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h)


def _u_power(e: int):
    return {0: ((1, 0), (0, 1)), 1: U_MATRIX, -1: U_INVERSE}[e]


@dataclass(frozen=True)
class PSL2Word:
    """Exponents ``(e_0, ..., e_k)`` of ``U^e0 S U^e1 ... S U^ek``; ``k`` is the number of ``S``."""

    exponents: Tuple[int, ...]

    def __post_init__(self):
        e = self.exponents
        if not e:
            raise DomainError("a word needs at least one exponent")
        if any(x not in (-1, 0, 1) for x in e):
            raise DomainError("exponents lie in {-1, 0, 1}")
        if any(x == 0 for x in e[1:-1]):
            raise DomainError("inner exponents must be +1 or -1")

    @property
    def s_count(self) -> int:
        return len(self.exponents) - 1

    def letters(self) -> List[Letter]:
        out: List[Letter] = []
        for k, e in enumerate(self.exponents):
            if k:
                out.append(("S", 1))
            if e:
                out.append(("U", e))
        return out

    def __str__(self) -> str:
        parts = [name if e == 1 else f"{name}^{e}" for name, e in self.letters()]
        return " ".join(parts) or "1"


def _euclid_letters(a: int, b: int, c: int, d: int) -> List[Letter]:
    """``A = T^q1 S T^q2 S ... T^qm`` up to sign, by the Euclidean algorithm on the first column."""
    out: List[Letter] = []
    while c != 0:
        q = a // c
        a, b = a - q * c, b - q * d
        out.append(("T", q))
        out.append(("S", 1))
        a, b, c, d = c, d, -a, -b
    # c = 0 and a d = 1
    out.append(("T", b * a))
    return out


def _expand_t(letters: Sequence[Letter]) -> List[Letter]:
    """Rewrite ``T = U S`` and ``T^-1 = S U^-1``."""
    out: List[Letter] = []
    for name, e in letters:
        if name == "T":
            unit = [("U", 1), ("S", 1)] if e > 0 else [("S", 1), ("U", -1)]
            out.extend(unit * abs(e))
        elif name == "U":
            out.append(("U", e))
        elif e % 2:
            out.append(("S", 1))
    return out


def _reduce(letters: Sequence[Letter]) -> List[Letter]:
    """Free reduction with ``S^2 = 1`` and ``U^3 = 1``."""
    stack: List[Letter] = []
    for name, e in letters:
        if name == "S":
            if stack and stack[-1][0] == "S":
                stack.pop()
            else:
                stack.append(("S", 1))
            continue
        e = e % 3
        if stack and stack[-1][0] == "U":
            e = (stack.pop()[1] + e) % 3
        if e:
            stack.append(("U", 1 if e == 1 else -1))
    return stack


def _to_word(letters: Sequence[Letter]) -> PSL2Word:
    exps = [0]
    for name, e in letters:
        if name == "S":
            exps.append(0)
        else:
            exps[-1] = e
    return PSL2Word(tuple(exps))


def psl2_normal_form(A) -> PSL2Word:
    """Unique alternating ``S``/``U`` word representing ``+-A``.

    Computed without a descent on the entries. Euclid on the first column
    writes ``A = +-T^q1 S T^q2 S ... T^qm``, each ``T`` becomes ``U S``
    (``T^-1`` becomes ``S U^-1``), and a stack pass cancels ``S^2`` and
    ``U^3``. Normal forms in ``Z/2 * Z/3`` are unique, so any reduction
    route gives the same word.

    :param A: 2x2 integer matrix of determinant 1.
    :rtype: PSL2Word
    :raises DomainError: If ``det A != 1`` or an entry is not an integer.
    """
    a, b, c, d = validate_sl2(A)
    word = _to_word(_reduce(_expand_t(_euclid_letters(a, b, c, d))))
    logger.debug("psl2_normal_form: %s", word)
    return word


def psl2_evaluate(word: PSL2Word) -> Tuple[Tuple[int, int], Tuple[int, int]]:
    """Multiply out a word in ``SL(2, Z)``."""
    out = ((1, 0), (0, 1))
    for name, e in word.letters():
        out = _mul(out, S_MATRIX if name == "S" else _u_power(e))
    return out


def same_in_psl2(A, B) -> bool:
    """``A = +-B``."""
    a = tuple(tuple(int(x) for x in r) for r in A)
    b = tuple(tuple(int(x) for x in r) for r in B)
    return a == b or a == tuple(tuple(-x for x in r) for r in b)


def parse_word(text: str) -> List[Letter]:
    """Parse ``"S T^3 U^-1"`` into letters.

    :raises ParseError: On an unknown token.
    """
    out: List[Letter] = []
    for tok in text.split():
        m = _TOKEN.match(tok)
        if m is None:
            raise ParseError(f"bad word token {tok!r}")
        out.append((m.group(1), int(m.group(2)) if m.group(2) is not None else 1))
    return out


def _as_letters(word: Union[str, Sequence[Letter]]) -> List[Letter]:
    return parse_word(word) if isinstance(word, str) else [(n, int(e)) for n, e in word]


def word_matrix(word: Union[str, Sequence[Letter]]) -> Matrix:
    """Matrix of an arbitrary word in ``S``, ``T``, ``U`` and their powers."""
    out = ((1, 0), (0, 1))
    for name, e in _as_letters(word):
        base = {"S": S_MATRIX, "T": T_MATRIX, "U": U_MATRIX}[name]
        if e < 0:
            (a, b), (c, d) = base
            base = ((d, -b), (-c, a))
        for _ in range(abs(e)):
            out = _mul(out, base)
    return [list(r) for r in out]


def word_u_sum(word: Union[str, Sequence[Letter]]) -> int:
    """``U``-exponent sum of a word, counting ``T^e`` as ``e`` and ``S`` as 0."""
    return sum(e for name, e in _as_letters(word) if name in ("T", "U"))


def rademacher(A) -> int:
    """Rademacher function: sum of the exponents of the normal form of ``A``.

    :raises DomainError: If ``det A != 1``.
    """
    return sum(psl2_normal_form(A).exponents)

