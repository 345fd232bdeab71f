import itertools
import logging
from fractions import Fraction
from typing import Sequence

import numpy as np

from closedform import GroundedFunction
from errors import NotAMeetSemilattice
from hyperdet import Hypermatrix, SignProduct, TableFMap, all_permutations, matrix
from lattice import (
    MeetSemilattice,
    Poset,
    as_meet_semilattice,
    meet_closure,
    order_ideal_closure,
    poset_from_covers,
)
from protocol.fmap import FMapLike
from scalar import Scalar

logger = logging.getLogger(__name__)

EDGE_PROBABILITY = 0.4
ENTRY_RANGE = (-5, 5)
SEMILATTICE_ATTEMPTS = 200


def random_int(
    rng: np.random.Generator, low: int = ENTRY_RANGE[0], high: int = ENTRY_RANGE[1]
) -> int:
    return int(rng.integers(low, high, endpoint=True))


def random_poset(rng: np.random.Generator, n: int, p: float = EDGE_PROBABILITY) -> Poset:
    """Transitive closure of a random DAG on index-increasing pairs."""
    edges = [(a, b) for a, b in itertools.combinations(range(n), 2) if rng.random() < p]
    return poset_from_covers(n, edges)


def random_meet_semilattice(rng: np.random.Generator, n: int) -> MeetSemilattice:
    """
    Random DAG on 1..n-1 with a minimum 0 adjoined, regenerated until every
    pair has a meet. Falls back to a chain after too many attempts.
    """
    for _ in range(SEMILATTICE_ATTEMPTS):
        edges = [
            (a, b)
            for a, b in itertools.combinations(range(1, n), 2)
            if rng.random() < EDGE_PROBABILITY
        ]
        edges += [(0, b) for b in range(1, n)]
        try:
            return as_meet_semilattice(poset_from_covers(n, edges))
        except NotAMeetSemilattice:
            continue
    logger.warning(f"No random meet-semilattice on {n} elements found, using a chain")
    return as_meet_semilattice(poset_from_covers(n, [(i, i + 1) for i in range(n - 1)]))


def random_hypermatrix(rng: np.random.Generator, n: int, k: int) -> Hypermatrix:
    return Hypermatrix.from_flat(n, k, [random_int(rng) for _ in range(n**k)])


def random_rational_matrix(rng: np.random.Generator, n: int) -> np.ndarray:
    return matrix(
        [[Fraction(random_int(rng), random_int(rng, 1, 3)) for _ in range(n)] for _ in range(n)]
    )


def random_table_fmap(rng: np.random.Generator, n: int, arity: int) -> TableFMap:
    entries = {
        sigmas: random_int(rng)
        for sigmas in itertools.product(all_permutations(n), repeat=arity)
    }
    return TableFMap(arity, entries)


def random_fmap(rng: np.random.Generator, n: int, arity: int) -> FMapLike:
    """SignProduct or a random table, with equal odds."""
    if rng.random() < 0.5:
        return SignProduct(arity)
    return random_table_fmap(rng, n, arity)


def random_grounding(
    rng: np.random.Generator, sl: MeetSemilattice, index: Sequence[int], diagonal: bool
) -> dict[int, int]:
    """z_x = x when diagonal; otherwise random z_x <= x with at least one z_x < x if possible."""
    if diagonal:
        return {}
    z_assign = {}
    for x in index:
        below = [z for z in range(sl.n) if sl.le(z, x)]
        z_assign[x] = int(rng.choice(below))
    strict = [x for x in index if any(sl.poset.lt(z, x) for z in range(sl.n))]
    if strict and all(z_assign[x] == x for x in index):
        x = strict[int(rng.integers(len(strict)))]
        z_assign[x] = next(z for z in range(sl.n) if sl.poset.lt(z, x))
    return z_assign


def random_grounded(
    rng: np.random.Generator,
    sl: MeetSemilattice,
    index: Sequence[int],
    diagonal: bool = True,
    uniform: bool = False,
) -> GroundedFunction:
    """Random integer F_x(z) on z <= x; uniform draws one F shared by every x."""
    shared: dict[int, Scalar] = {z: random_int(rng) for z in range(sl.n)}
    values = {
        (x, z): shared[z] if uniform else random_int(rng)
        for x in index
        for z in range(sl.n)
        if sl.le(z, x)
    }
    return GroundedFunction(sl, tuple(index), values, random_grounding(rng, sl, index, diagonal))


def random_subset(rng: np.random.Generator, sl: MeetSemilattice, size: int) -> tuple[int, ...]:
    chosen = rng.choice(sl.n, size=min(size, sl.n), replace=False)
    return tuple(int(x) for x in chosen)


def random_meet_closed_subset(
    rng: np.random.Generator, sl: MeetSemilattice, max_size: int
) -> tuple[int, ...]:
    """Meet closure of random seeds, shrinking the seed count until it fits."""
    for seeds in range(max_size, 0, -1):
        closed = meet_closure(sl, random_subset(rng, sl, seeds))
        if len(closed) <= max_size:
            return tuple(sorted(closed))
    return (0,)


def random_factor_closed_subset(
    rng: np.random.Generator, sl: MeetSemilattice, max_size: int
) -> tuple[int, ...]:
    """Order ideal of random seeds, shrinking the seed count until it fits."""
    for seeds in range(max_size, 0, -1):
        ideal = order_ideal_closure(sl.poset, random_subset(rng, sl, seeds))
        if len(ideal) <= max_size:
            return tuple(sorted(ideal))
    return (0,)
