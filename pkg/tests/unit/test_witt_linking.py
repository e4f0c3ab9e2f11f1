# tests/unit/test_witt_linking.py
# To run these tests, use:
# poetry run pytest
from fractions import Fraction

import pytest

from signet.errors import DomainError
from signet.sturm.contfrac import cf_eval, tri
from signet.witt.linking import (
    LinkingFormZ,
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


# Linking forms
def test_normalization():
    assert LinkingFormZ.of([(-5, 2)]).summands == ((5, 3),)
    assert LinkingFormZ.of([(1, 0)]).summands == ()
    assert LinkingFormZ.of([(3, 1), (4, 1)]).order() == 12


def test_non_coprime_summand():
    with pytest.raises(DomainError):
        LinkingFormZ.of([(6, 2)])


@pytest.mark.parametrize(
    "summands, zero",
    [
        ([(5, 1), (5, -1)], True),
        ([(5, 1)], False),
        ([(4, 1)], True),
        ([(2, 1)], False),
        ([(9, 2)], True),
        ([(3, 1), (3, 1), (3, 1), (3, 1)], True),
    ],
)
def test_metabolic_detection(summands, zero):
    assert LinkingFormZ.of(summands).is_zero() is zero


def test_negation_cancels():
    L = lens_linking(5, 2)
    assert (-L).summands == ((5, 3),)
    assert (L + -L).is_zero()


def test_invariants_split_over_primes():
    two, local = linking_invariants(LinkingFormZ.of([(10, 1)]))
    assert two == 1
    assert set(local) == {5}


# Lens spaces
def test_lens_normalize():
    assert lens_normalize(5, 7) == (5, 2)
    with pytest.raises(DomainError):
        lens_normalize(5, 5)
    with pytest.raises(DomainError):
        lens_linking(0, 1)


def test_lens_linking():
    assert lens_linking(5, 2).as_list() == [[5, 2]]


# Euclidean chains
def test_euclidean_chain():
    assert euclidean_chain(5, 2) == ((5, 2, 1), (3, 2))
    ps, qs = euclidean_chain(7, 3)
    assert ps == (7, 3, 2, 1)
    assert qs == (3, 2, 2)
    assert cf_eval(qs).value == Fraction(7, 3)


def test_euclidean_chain_recurrence():
    ps, qs = euclidean_chain(97, 35)
    padded = ps + (0,)
    for k in range(1, len(ps)):
        assert padded[k - 1] + padded[k + 1] == qs[k - 1] * padded[k]


@pytest.mark.parametrize("p0, p1", [(4, 2), (2, 5), (3, 0)])
def test_euclidean_chain_rejects(p0, p1):
    with pytest.raises(DomainError):
        euclidean_chain(p0, p1)


@pytest.mark.parametrize("p0, p1", [(5, 2), (7, 3), (12, 5), (97, 35)])
def test_chain_boundaries_agree_with_lens(p0, p1):
    ps, qs = euclidean_chain(p0, p1)
    lens = lens_linking(p0, p1)
    assert linking_witt_eq(linking_boundary(tri(qs)), lens)
    assert linking_witt_eq(chain_boundary(ps), lens)


def test_boundary_cancels_pairs():
    assert linking_boundary([[3, 0], [0, -3]]).summands == ()
    assert linking_boundary([[2]]).summands == ((2, 1),)


def test_chain_boundary_needs_two_terms():
    with pytest.raises(DomainError):
        chain_boundary([5])


# Coprime splitting
def test_trilinking_split():
    split = trilinking_split(3, 4)
    assert split.apply(1) == (1, 3)
    assert split.a * 3 + split.b * 4 == 1


@pytest.mark.parametrize("s, t", [(1, 5), (2, 3), (3, 4), (5, 1), (4, 9)])
def test_verify_trilinking(s, t):
    assert verify_trilinking(s, t)


def test_trilinking_rejects():
    with pytest.raises(DomainError):
        trilinking_split(2, 4)


# End of tests/unit/test_witt_linking.py
