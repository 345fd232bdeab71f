import logging
from typing import Iterable, Mapping

import numpy as np

from errors import SubsetNotMeetClosed
from lattice import (
    MeetSemilattice,
    Poset,
    extension_order,
    is_meet_closed,
    mobius_matrix,
    order_ideal_closure,
    triangle_index,
)
from scalar import Scalar, is_zero, total

logger = logging.getLogger(__name__)


def zeta_transform(p: Poset, f: Mapping[int, Scalar]) -> dict[int, Scalar]:
    """F(x) = sum of f(y) over y <= x. Missing values of f count as 0."""
    return {
        x: total(f.get(y, 0) for y in range(p.n) if p.le(y, x)) for x in range(p.n)
    }


def mobius_transform(
    p: Poset, F: Mapping[int, Scalar], mu: np.ndarray | None = None
) -> dict[int, Scalar]:
    """f(x) = sum of mu(y, x) F(y) over y <= x; inverse of zeta_transform."""
    if mu is None:
        mu = mobius_matrix(p)
    out: dict[int, Scalar] = {}
    for x in range(p.n):
        out[x] = total(
            mu[y, x] * F.get(y, 0)
            for y in range(p.n)
            if p.le(y, x) and mu[y, x] != 0 and not is_zero(F.get(y, 0))
        )
    return out


def hat_transform(
    sl: MeetSemilattice, subset: Iterable[int], f: Mapping[int, Scalar]
) -> dict[int, Scalar]:
    """
    Sum f over each triangle block of a meet-closed subset.

    The members y_1, ..., y_n of subset are taken in linear-extension order and
    every x of their order ideal belongs to the block of the first y_i above it.
    The result maps each y_i to the sum of f over its block.
    """
    members = frozenset(subset)
    if not is_meet_closed(sl, members):
        raise SubsetNotMeetClosed("subset is not closed under meets")
    ordered = extension_order(sl.poset, members)
    hat: dict[int, Scalar] = {y: 0 for y in ordered}
    for x in sorted(order_ideal_closure(sl.poset, members)):
        y = ordered[triangle_index(sl.poset, ordered, x)]
        hat[y] = hat[y] + f.get(x, 0)
    return hat
