# tests/unit/test_sturm_chain.py
# To run these tests, use:
# poetry run pytest
import random
import time
from fractions import Fraction

import pytest
import sympy

from signet.cli.corpus import random_squarefree
from signet.errors import DomainError
from signet.exact.factor import to_sympy
from signet.exact.poly import Poly
from signet.exact.rational import sign
from signet.sturm.chain import (
    count_real_roots,
    count_roots,
    primitive_sturm_sequence,
    root_bound,
    sign_variations,
    sturm_chain,
)
from signet.sturm.roots import RealAlgebraic, isolate_roots, ra_compare, refine

X = Poly.x()


# Chains
def test_chain_of_x_squared_minus_one():
    chain = sturm_chain(X**2 - 1)
    assert chain.remainders == (X**2 - 1, 2 * X, Poly((1,)))
    assert chain.quotients == (X / 2, 2 * X)
    assert chain.length == 2


def test_chain_recurrence_holds():
    P = X**5 - 4 * X**3 + X - 1
    chain = sturm_chain(P)
    rems, quots = chain.remainders, chain.quotients
    for k in range(1, len(rems) - 1):
        assert rems[k + 1] == rems[k] * quots[k - 1] - rems[k - 1]


def test_chain_of_constant_is_rejected():
    with pytest.raises(DomainError):
        sturm_chain(Poly((3,)))


def test_sign_variations_skip_zeros():
    assert sign_variations([1, 0, -1, 2]) == 2
    assert sign_variations([0, 0]) == 0
    assert sign_variations([Fraction(-1, 2), -3]) == 0


def test_root_bound_is_cauchy():
    assert root_bound(X**2 - 3 * X + 1) == 4


# Counting
@pytest.mark.parametrize(
    "a, b, expected",
    [(-2, 2, 2), (-1, 1, 2), (0, 1, 1), (-1, 0, 1), (1, 2, 1), ("1/2", "3/4", 0)],
)
def test_count_roots_closed_interval(a, b, expected):
    assert count_roots(X**2 - 1, a, b) == expected


def test_count_roots_ignores_multiplicity():
    P = (X - 1) ** 2 * (X + 1)
    assert count_roots(P, -2, 2) == 2


def test_count_roots_needs_ordered_endpoints():
    with pytest.raises(DomainError):
        count_roots(X**2 - 1, 1, 1)


def test_count_real_roots():
    assert count_real_roots(X**2 + 1) == 0
    assert count_real_roots(X**3 - X) == 3
    assert count_real_roots(Poly((5,))) == 0


# Isolation
def test_isolated_intervals_are_disjoint_and_root_free_at_endpoints():
    P = X * (X - 1) * (X + 3) * (2 * X - 1)
    roots = isolate_roots(P)
    assert len(roots) == 4
    for x in roots:
        assert not x.is_exact
        assert P.evaluate(x.lo) != 0
        assert P.evaluate(x.hi) != 0
        assert count_roots(P, x.lo, x.hi) == 1
    for left, right in zip(roots, roots[1:]):
        assert left.hi <= right.lo


def test_isolate_sqrt_two():
    neg, pos = isolate_roots(X**2 - 2)
    assert pos.minpoly == Poly((-2, 0, 1))
    r = refine(pos, Fraction(1, 1000))
    assert r.width() <= Fraction(1, 1000)
    assert r.lo**2 < 2 < r.hi**2
    assert pos.as_dict()["minpoly"] == ["-2", "0", "1"]


def test_isolate_edge_cases():
    assert isolate_roots(X**2 + 1) == []
    assert isolate_roots(Poly((7,))) == []
    with pytest.raises(DomainError):
        isolate_roots(Poly(()))


def test_refine_needs_positive_width():
    (x,) = isolate_roots(X - 5)
    with pytest.raises(DomainError):
        refine(x, 0)


# Comparison
def test_compare_with_rational():
    neg, pos = isolate_roots(X**2 - 2)
    assert ra_compare(pos, RealAlgebraic.from_rational("3/2")) == -1
    assert ra_compare(pos, RealAlgebraic.from_rational("7/5")) == 1
    assert ra_compare(neg, pos) == -1


def test_compare_same_root_from_different_polynomials():
    (_, small) = isolate_roots(X**2 - 2)
    (_, big) = isolate_roots(X**4 - 4)
    assert ra_compare(small, big) == 0
    assert ra_compare(big, small) == 0


def test_from_rational_is_exact():
    r = RealAlgebraic.from_rational(Fraction(-2, 3))
    assert r.is_exact
    assert r.minpoly.evaluate(Fraction(-2, 3)) == 0


# Primitive sequences
def test_primitive_sequence_has_exact_chain_signs(rng):
    for _ in range(20):
        P = random_squarefree(rng, rng.randint(1, 7))
        exact = sturm_chain(P)
        prim = primitive_sturm_sequence(P)
        assert len(prim.remainders) == len(exact.remainders)
        assert all(c.denominator == 1 for R in prim.remainders for c in R.coeffs)
        for _ in range(10):
            t = Fraction(rng.randint(-60, 60), rng.randint(1, 9))
            assert prim.signs_at(t) == [sign(v) for v in exact.values_at(t)]
        assert prim.variations_at_infinity(-1) == exact.variations_at_infinity(-1)


def test_degree_64_isolation_is_fast():
    gen = random.Random(5)
    bound = 2**32
    P = Poly([gen.randint(-bound, bound) for _ in range(64)] + [gen.randint(1, bound)])
    started = time.perf_counter()
    roots = isolate_roots(P)
    elapsed = time.perf_counter() - started
    assert elapsed < 5.0
    assert len(roots) == count_real_roots(P)
    assert all(r.lo < r.hi for r in roots)
    assert all(a.hi <= b.lo for a, b in zip(roots, roots[1:]))


# Against sympy
def test_counts_agree_with_sympy(rng):
    for _ in range(25):
        P = random_squarefree(rng, rng.randint(1, 7))
        a = Fraction(rng.randint(-40, 0), rng.randint(1, 4))
        b = a + Fraction(rng.randint(1, 60), rng.randint(1, 4))
        oracle = to_sympy(P)
        assert count_roots(P, a, b) == oracle.count_roots(sympy.Rational(a.numerator, a.denominator), sympy.Rational(b.numerator, b.denominator))
        assert len(isolate_roots(P)) == count_real_roots(P) == oracle.count_roots()


# End of tests/unit/test_sturm_chain.py
