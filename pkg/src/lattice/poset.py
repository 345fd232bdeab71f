import heapq
import logging
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from errors import CycleDetected, IndexOutOfRange, InputError, NotAPartialOrder

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Poset:
    """
    Immutable finite partial order on the elements 0..n-1.

    leq is a read-only boolean n x n matrix with leq[a, b] iff a <= b.
    labels carry display names such as "4" or "6" from a Hasse diagram.
    """

    leq: np.ndarray
    labels: tuple[str, ...]

    def __post_init__(self):
        n = self.leq.shape[0]
        if self.leq.shape != (n, n) or self.leq.dtype != bool:
            raise NotAPartialOrder("order relation must be a square boolean matrix")
        if len(self.labels) != n:
            raise InputError(f"expected {n} labels, got {len(self.labels)}")
        if len(set(self.labels)) != n:
            raise InputError("element labels must be distinct")
        self.leq.flags.writeable = False

    @classmethod
    def from_relation(cls, leq: np.ndarray, labels: Sequence[str] | None = None) -> "Poset":
        """Build a poset from a full order relation, checking the three axioms."""
        rel = np.array(leq, dtype=bool)
        n = rel.shape[0]
        if not rel[np.diag_indices_from(rel)].all():
            raise NotAPartialOrder("relation is not reflexive")
        if (rel & rel.T).sum() > n:
            raise NotAPartialOrder("relation is not antisymmetric")
        if ((~rel) & (rel.astype(int) @ rel.astype(int) > 0)).any():
            raise NotAPartialOrder("relation is not transitive")
        return cls(rel, tuple(labels) if labels is not None else default_labels(n))

    @property
    def n(self) -> int:
        return int(self.leq.shape[0])

    def le(self, a: int, b: int) -> bool:
        return bool(self.leq[a, b])

    def lt(self, a: int, b: int) -> bool:
        return a != b and bool(self.leq[a, b])

    def down_set(self, x: int) -> frozenset[int]:
        return frozenset(int(i) for i in np.flatnonzero(self.leq[:, x]))

    def label(self, x: int) -> str:
        return self.labels[x]

    def resolve(self, token: str) -> int:
        """Element index for a label, falling back to a plain index."""
        token = token.strip()
        if token in self.labels:
            return self.labels.index(token)
        try:
            index = int(token)
        except ValueError:
            raise InputError(f"unknown element {token!r}") from None
        if not 0 <= index < self.n:
            raise IndexOutOfRange(index, self.n)
        return index

    def covers(self) -> list[tuple[int, int]]:
        """Covering pairs (a, b): a < b with nothing in between."""
        strict = self.leq.copy()
        strict[np.diag_indices_from(strict)] = False
        between = (strict.astype(int) @ strict.astype(int)) > 0
        cover = strict & ~between
        return [(int(a), int(b)) for a, b in zip(*np.nonzero(cover))]


def default_labels(n: int) -> tuple[str, ...]:
    return tuple(str(i) for i in range(n))


def poset_from_covers(
    n: int, covers: Iterable[tuple[int, int]], labels: Sequence[str] | None = None
) -> Poset:
    """Reflexive-transitive closure of a cover relation."""
    reach = np.zeros((n, n), dtype=bool)
    for a, b in covers:
        for index in (a, b):
            if not 0 <= index < n:
                raise IndexOutOfRange(index, n)
        if a == b:
            raise CycleDetected(a, b)
        reach[a, b] = True
    # Warshall
    for k in range(n):
        reach |= reach[:, k, None] & reach[None, k, :]
    cyclic = np.argwhere(reach & reach.T)
    if len(cyclic):
        a, b = (int(v) for v in cyclic[0])
        raise CycleDetected(a, b)
    reach[np.diag_indices_from(reach)] = True
    return Poset(reach, tuple(labels) if labels is not None else default_labels(n))


def zeta_matrix(p: Poset) -> np.ndarray:
    return np.where(p.leq, 1, 0).astype(object)


def linear_extension(p: Poset) -> tuple[int, ...]:
    """Kahn's algorithm, always releasing the smallest available index."""
    indegree = [int(p.leq[:, y].sum()) - 1 for y in range(p.n)]
    ready = [y for y in range(p.n) if indegree[y] == 0]
    heapq.heapify(ready)
    order = []
    while ready:
        x = heapq.heappop(ready)
        order.append(x)
        for y in np.flatnonzero(p.leq[x]):
            y = int(y)
            if y == x:
                continue
            indegree[y] -= 1
            if indegree[y] == 0:
                heapq.heappush(ready, y)
    return tuple(order)


def mobius_matrix(p: Poset) -> np.ndarray:
    """mu(x, x) = 1 and mu(x, y) = -sum of mu(x, z) over x <= z < y."""
    order = linear_extension(p)
    mu = np.zeros((p.n, p.n), dtype=object)
    for x in order:
        mu[x, x] = 1
        interval = [x]
        for y in order:
            if not p.lt(x, y):
                continue
            mu[x, y] = -sum(mu[x, z] for z in interval if p.le(z, y))
            interval.append(y)
    logger.debug(f"Computed Mobius matrix of a {p.n}-element poset")
    return mu


def order_ideal_closure(p: Poset, subset: Iterable[int]) -> frozenset[int]:
    members = sorted(set(subset))
    if not members:
        return frozenset()
    below = np.any(p.leq[:, members], axis=1)
    return frozenset(int(i) for i in np.flatnonzero(below))


def is_order_ideal(p: Poset, subset: Iterable[int]) -> bool:
    members = frozenset(subset)
    return order_ideal_closure(p, members) == members


def extension_order(p: Poset, subset: Iterable[int]) -> tuple[int, ...]:
    """The elements of subset listed in linear-extension order."""
    members = set(subset)
    return tuple(x for x in linear_extension(p) if x in members)


def restrict(p: Poset, subset: Iterable[int]) -> tuple[Poset, tuple[int, ...]]:
    """
    Induced subposet on subset.

    Returns the subposet together with the original index of each of its
    elements, in increasing order; labels carry over.
    """
    members = tuple(sorted(set(subset)))
    leq = p.leq[np.ix_(members, members)].copy()
    return Poset(leq, tuple(p.labels[x] for x in members)), members
