# src/signet/knots/braid.py
"""Braid words on ``n`` strands and their closures.

Text form: ``"n: i j -k ..."`` where ``i`` stands for the generator
``sigma_i`` and ``-k`` for its inverse.
"""

import re
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from signet.errors import DomainError, ParseError

Letter = Tuple[int, int]
_HEADER = re.compile(r"^\s*(\d+)\s*:(.*)$")


def _validate_letters(n: int, letters: Sequence[Letter]) -> None:
    for i, e in letters:
        if e not in (1, -1):
            raise DomainError(f"letter exponent must be +1 or -1, got {e}")
        if not 1 <= i <= n - 1:
            raise DomainError(f"generator index {i} out of range for {n} strands")


@dataclass(frozen=True)
class BraidWord:
    """Strand count and letters ``(i, +-1)`` with ``1 <= i <= n - 1``."""

    strands: int
    letters: Tuple[Letter, ...] = ()

    def __post_init__(self):
        if not isinstance(self.strands, int) or self.strands < 2:
            raise DomainError("a braid needs at least 2 strands")
        _validate_letters(self.strands, self.letters)

    @classmethod
    def of(cls, strands: int, word: Sequence[int]) -> "BraidWord":
        """From signed generator indices, e.g. ``BraidWord.of(3, [1, -2, 1, -2])``."""
        if any(not isinstance(g, int) or g == 0 for g in word):
            raise DomainError("braid letters are nonzero integers")
        return cls(strands, tuple((abs(g), 1 if g > 0 else -1) for g in word))

    def __len__(self) -> int:
        return len(self.letters)

    def word(self) -> List[int]:
        return [i * e for i, e in self.letters]

    def __str__(self) -> str:
        return f"{self.strands}: " + " ".join(str(g) for g in self.word())


def parse_braid(text: str) -> BraidWord:
    """Parse ``"n: i j ..."``.

    :raises ParseError: If the text does not match the grammar.
    :raises DomainError: If an index is out of range.
    """
    m = _HEADER.match(text)
    if m is None:
        raise ParseError(f"expected 'n: letters', got {text!r}")
    word = []
    for tok in m.group(2).split():
        try:
            g = int(tok)
        except ValueError:
            raise ParseError(f"bad braid letter {tok!r}") from None
        if g == 0:
            raise ParseError("braid letters are nonzero")
        word.append(g)
    return BraidWord.of(int(m.group(1)), word)


def permutation(b: BraidWord) -> List[int]:
    """Image of each strand position under the braid, read left to right."""
    perm = list(range(b.strands))
    for i, _ in b.letters:
        perm[i - 1], perm[i] = perm[i], perm[i - 1]
    return perm


def closure_components(b: BraidWord) -> int:
    """Number of cycles of the underlying permutation."""
    perm = permutation(b)
    seen = [False] * b.strands
    count = 0
    for start in range(b.strands):
        if seen[start]:
            continue
        count += 1
        k = start
        while not seen[k]:
            seen[k] = True
            k = perm[k]
    return count


def mirror(b: BraidWord) -> BraidWord:
    """Flip every crossing."""
    return BraidWord(b.strands, tuple((i, -e) for i, e in b.letters))


def stabilize(b: BraidWord) -> BraidWord:
    """Markov stabilization: add a strand and append ``sigma_n``."""
    return BraidWord(b.strands + 1, b.letters + ((b.strands, 1),))
