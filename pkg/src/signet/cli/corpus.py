# src/signet/cli/corpus.py
"""Seeded instance generators for the acceptance suites.

All generators take an explicit :class:`random.Random` so runs are
reproducible.
"""

import random
from fractions import Fraction
from typing import List, Tuple

from signet.exact.poly import Poly
from signet.forms.linalg import Matrix, determinant, identity, mat_mul
from signet.forms.signature import principal_minors
from signet.knots.braid import BraidWord, closure_components, parse_braid
from signet.maslov.symplectic import Lagrangian, coordinate_lagrangian
from signet.sturm.chain import is_regular
from signet.sturm.contfrac import tri_minors

# Named braids; two-component closures (hopf) are skipped by knot-only checks.
BRAIDS: Tuple[Tuple[str, str], ...] = (
    ("trefoil", "2: 1 1 1"),
    ("figure-eight", "3: 1 -2 1 -2"),
    ("cinquefoil", "2: 1 1 1 1 1"),
    ("torus-3-4", "3: 1 2 1 2 1 2 1 2"),
    ("three-braid-8-18", "3: -1 2 -1 2 -1 2 -1 2"),
    ("trefoil-stabilized", "3: 1 1 1 2"),
    ("hopf", "2: 1 1"),
)


def knot_braids() -> List[Tuple[str, BraidWord]]:
    out = [(name, parse_braid(text)) for name, text in BRAIDS]
    return [(name, b) for name, b in out if closure_components(b) == 1]


def random_symmetric(rng: random.Random, n: int, bound: int = 20) -> Matrix:
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            rows[i][j] = rows[j][i] = Fraction(rng.randint(-bound, bound))
    return rows


def random_regular_symmetric(rng: random.Random, n: int, bound: int = 20) -> Matrix:
    """Symmetric matrix whose leading principal minors are all nonzero."""
    while True:
        S = random_symmetric(rng, n, bound)
        if principal_minors(S).is_regular():
            return S


def random_invertible(rng: random.Random, n: int, bound: int = 3) -> Matrix:
    while True:
        A = [[Fraction(rng.randint(-bound, bound)) for _ in range(n)] for _ in range(n)]
        if determinant(A) != 0:
            return A


def random_squarefree(rng: random.Random, degree: int, bound: int = 10) -> Poly:
    while True:
        cs = [rng.randint(-bound, bound) for _ in range(degree)] + [rng.choice([-1, 1]) * rng.randint(1, bound)]
        P = Poly(cs)
        if P.degree >= 1 and is_regular(P):
            return P


def random_monic_squarefree(rng: random.Random, degree: int, bound: int = 10) -> Poly:
    while True:
        P = Poly([rng.randint(-bound, bound) for _ in range(degree)] + [1])
        if is_regular(P):
            return P


def random_regular_chi(rng: random.Random, n: int, bound: int = 6, min_abs: int = 1) -> List[int]:
    """Integer continued fraction whose tridiagonal minors are all nonzero."""
    while True:
        chi = []
        for _ in range(n):
            x = 0
            while abs(x) < min_abs:
                x = rng.randint(-bound, bound)
            chi.append(x)
        if all(m != 0 for m in tri_minors(chi)):
            return chi


def random_symplectic(rng: random.Random, n: int, steps: int = 4, bound: int = 2) -> Matrix:
    """Product of integral shears ``[[I, S], [0, I]]`` and ``[[I, 0], [S, I]]``."""
    g = identity(2 * n)
    for k in range(steps):
        S = random_symmetric(rng, n, bound)
        shear = identity(2 * n)
        for i in range(n):
            for j in range(n):
                if k % 2:
                    shear[n + i][j] = S[i][j]
                else:
                    shear[i][n + j] = S[i][j]
        g = mat_mul(g, shear)
    return g


def random_lagrangian(rng: random.Random, n: int) -> Lagrangian:
    """Image of a coordinate lagrangian under a random symplectic matrix."""
    base = coordinate_lagrangian(n, rng.choice("pq"))
    return base.transform(random_symplectic(rng, n, steps=rng.randint(0, 3)))


def random_braid(rng: random.Random, strands: int, length: int) -> BraidWord:
    """Braid word in which every generator occurs at least once."""
    word = [i for i in range(1, strands)]
    word += [rng.randint(1, strands - 1) for _ in range(max(0, length - len(word)))]
    rng.shuffle(word)
    return BraidWord.of(strands, [g * rng.choice((-1, 1)) for g in word])
