import logging

import numpy as np
import pytest

from lattice import MeetSemilattice, as_meet_semilattice, poset_from_covers
from numth import divisor_semilattice

# Configure logging for tests
logging.basicConfig(level=logging.DEBUG)


@pytest.fixture
def rng():
    """Fixture to provide a seeded generator so randomized tests are reproducible."""
    return np.random.default_rng(20240611)


@pytest.fixture
def chain2() -> MeetSemilattice:
    """Two-element chain labelled 1 < 2."""
    return as_meet_semilattice(poset_from_covers(2, [(0, 1)], ["1", "2"]))


@pytest.fixture
def five_elements() -> MeetSemilattice:
    """1 < 2 < 4, 1 < 3 < 5 and 2 < 5; elements are indexed 0..4 and labelled 1..5."""
    return as_meet_semilattice(
        poset_from_covers(5, [(0, 1), (1, 3), (0, 2), (2, 4), (1, 4)], ["1", "2", "3", "4", "5"])
    )


@pytest.fixture
def seven_elements() -> MeetSemilattice:
    """Minimum 0, atoms 1, 2, 3, and 4 > 1, 2; 5 > 2, 3; 6 > 1, 3."""
    covers = [(0, 1), (0, 2), (0, 3), (1, 4), (1, 6), (2, 4), (2, 5), (3, 5), (3, 6)]
    return as_meet_semilattice(poset_from_covers(7, covers))


@pytest.fixture
def divisors_to_six():
    """Divisibility on 1..6 together with the value -> index map."""
    return divisor_semilattice(range(1, 7))
