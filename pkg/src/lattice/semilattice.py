import logging
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Sequence

import numpy as np

from errors import NotAMeetSemilattice, NotBelowAny
from lattice.poset import Poset

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class MeetSemilattice:
    """A poset together with its (total) table of greatest lower bounds."""

    poset: Poset
    meet_table: np.ndarray

    @property
    def n(self) -> int:
        return self.poset.n

    @property
    def labels(self) -> tuple[str, ...]:
        return self.poset.labels

    def le(self, a: int, b: int) -> bool:
        return self.poset.le(a, b)

    def meet(self, x: int, y: int) -> int:
        return int(self.meet_table[x, y])

    def meet_of(self, elements: Iterable[int]) -> int:
        return reduce(self.meet, elements)


def as_meet_semilattice(p: Poset) -> MeetSemilattice:
    """
    Fill the meet table, or fail with a witness pair.

    The common lower bounds of x and y form a down-set; a meet exists exactly
    when that down-set is the principal ideal of some element.
    """
    n = p.n
    geq = p.leq.T
    principal = {geq[z].tobytes(): z for z in range(n)}
    table = np.zeros((n, n), dtype=int)
    for x in range(n):
        for y in range(x, n):
            below = geq[x] & geq[y]
            z = principal.get(below.tobytes())
            if z is None:
                raise NotAMeetSemilattice(x, y)
            table[x, y] = table[y, x] = z
    table.flags.writeable = False
    return MeetSemilattice(p, table)


def is_meet_closed(sl: MeetSemilattice, subset: Iterable[int]) -> bool:
    members = set(subset)
    return all(sl.meet(x, y) in members for x in members for y in members)


def meet_closure(sl: MeetSemilattice, subset: Iterable[int]) -> frozenset[int]:
    closed = set(subset)
    frontier = list(closed)
    while frontier:
        x = frontier.pop()
        for y in list(closed):
            z = sl.meet(x, y)
            if z not in closed:
                closed.add(z)
                frontier.append(z)
    return frozenset(closed)


def triangle_index(p: Poset, ordered: Sequence[int], x: int) -> int:
    """
    Position i (0-based) of the first y_i in ordered with x <= y_i.

    Every element of the order ideal of ordered lands in exactly one block.
    """
    for i, y in enumerate(ordered):
        if p.le(x, y):
            return i
    raise NotBelowAny(f"element {p.label(x)} is below no member of the subset")


def meet_of(sl: MeetSemilattice, elements: Iterable[int]) -> int:
    """Meet of a nonempty family of elements."""
    members = list(elements)
    if not members:
        raise ValueError("meet of an empty family is undefined")
    return sl.meet_of(members)
