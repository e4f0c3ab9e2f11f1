# tests/conftest.py
# Shared fixtures for the unit tests.
# To run the tests, use:
# poetry run pytest
import random

import pytest

from signet.forms.plumbing import e8_matrix
from signet.knots.braid import parse_braid


@pytest.fixture
def rng():
    # Fixed seed so randomized checks are reproducible.
    return random.Random(1234)


@pytest.fixture
def e8():
    return e8_matrix()


@pytest.fixture
def trefoil():
    return parse_braid("2: 1 1 1")


@pytest.fixture
def figure_eight():
    return parse_braid("3: 1 -2 1 -2")


@pytest.fixture
def low_precision(monkeypatch):
    # Smallest interval seed; results must not depend on it.
    monkeypatch.setenv("SIGNET_PRECISION_START", "8")


# End of tests/conftest.py
