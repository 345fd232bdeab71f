import itertools
import logging
from math import gcd
from typing import Iterable, Sequence

import numpy as np

from closedform import GroundedFunction
from errors import InputError, NotGcdClosed
from hyperdet import Hypermatrix
from lattice import MeetSemilattice, Poset, as_meet_semilattice
from numth.arithmetic import ArithmeticFunction, divisors

logger = logging.getLogger(__name__)


def _positive(values: Iterable[int]) -> list[int]:
    members = sorted(set(values))
    if not members:
        raise InputError("integer set must not be empty")
    if members[0] < 1:
        raise InputError(f"integer sets hold positive integers, got {members[0]}")
    return members


def gcd_closure(values: Iterable[int]) -> list[int]:
    closed = set(_positive(values))
    while True:
        missing = {gcd(a, b) for a, b in itertools.combinations(closed, 2)} - closed
        if not missing:
            return sorted(closed)
        closed |= missing


def divisor_closure(values: Iterable[int]) -> list[int]:
    return sorted({d for v in _positive(values) for d in divisors(v)})


def divisor_semilattice(values: Iterable[int]) -> tuple[MeetSemilattice, dict[int, int]]:
    """
    Divisibility order on a gcd-closed set; meet is gcd.

    Elements are indexed by increasing value and labelled with the value.
    Returns the semilattice and the value -> index map.
    """
    members = _positive(values)
    present = set(members)
    for a, b in itertools.combinations(members, 2):
        g = gcd(a, b)
        if g not in present:
            raise NotGcdClosed(a, b, g)
    leq = np.array([[b % a == 0 for b in members] for a in members], dtype=bool)
    sl = as_meet_semilattice(Poset.from_relation(leq, [str(v) for v in members]))
    return sl, {v: i for i, v in enumerate(members)}


def gcd_hypermatrix(values: Sequence[int], k: int, F: ArithmeticFunction) -> Hypermatrix:
    """entry(i1, ..., ik) = F(gcd(s_i1, ..., s_ik))."""
    return Hypermatrix.from_function(
        len(values), k, lambda index: F(gcd(*(values[i] for i in index)))
    )


def gcd_grounded_function(values: Sequence[int], F: ArithmeticFunction) -> GroundedFunction:
    """
    The grounded function behind gcd_hypermatrix.

    The lattice is the divisor closure of values, the index set is values in
    the given order, z_x = x and F_x(d) = F(d) for every d | x.
    """
    if len(set(values)) != len(values):
        raise InputError("integer set has repeated values")
    sl, position = divisor_semilattice(divisor_closure(values))
    by_index = {i: v for v, i in position.items()}
    logger.debug(f"Divisor lattice of {len(position)} elements for {list(values)}")
    return GroundedFunction.from_callable(
        sl, [position[v] for v in values], lambda x, z: F(by_index[z])
    )
