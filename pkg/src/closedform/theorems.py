import logging
from typing import Iterable

from closedform.grounded import GroundedFunction
from closedform.transforms import hat_transform, mobius_transform
from errors import (
    DimensionMismatch,
    GroundingNotDiagonal,
    IndexSetNotWholeLattice,
    SubsetNotFactorClosed,
    SubsetNotMeetClosed,
)
from hyperdet import Hypermatrix, check_arity, identity_tuple
from lattice import (
    is_meet_closed,
    is_order_ideal,
    mobius_matrix,
    order_ideal_closure,
    restrict,
)
from protocol.fmap import FMapLike
from scalar import Scalar, product

logger = logging.getLogger(__name__)


def build_meet_hypermatrix(gf: GroundedFunction, k: int) -> Hypermatrix:
    """M[i1, ..., ik] = F_{x_i1}(z_{x_i1} ^ x_i2 ^ ... ^ x_ik)."""
    if k < 2:
        raise DimensionMismatch(f"hypermatrix order must be at least 2, got {k}")
    sl = gf.lattice
    xs = gf.index

    def entry(index: tuple[int, ...]) -> Scalar:
        x = xs[index[0]]
        z = sl.meet_of([gf.z(x), *(xs[i] for i in index[1:])])
        return gf.value(x, z)

    return Hypermatrix.from_function(gf.n, k, entry)


def local_mobius(gf: GroundedFunction, universe: Iterable[int]) -> dict[int, dict[int, Scalar]]:
    """
    f_x = Mobius transform of F_x over the subposet induced on universe.

    Returns f_x as a map on universe for every indexed x. The universe must be
    an order ideal containing every x.
    """
    sub, members = restrict(gf.lattice.poset, universe)
    mu = mobius_matrix(sub)
    out: dict[int, dict[int, Scalar]] = {}
    for x in gf.index:
        local = {i: gf.value(x, y) for i, y in enumerate(members)}
        f = mobius_transform(sub, local, mu)
        out[x] = {members[i]: value for i, value in f.items()}
    return out


def identity_coefficient(gf: GroundedFunction, k: int, fmap: FMapLike) -> Scalar:
    check_arity(fmap, k)
    return fmap(identity_tuple(gf.n, k - 2))


def _require_whole_lattice(gf: GroundedFunction) -> None:
    if set(gf.index) != set(range(gf.lattice.n)):
        raise IndexSetNotWholeLattice(
            f"index set has {gf.n} of the {gf.lattice.n} lattice elements"
        )


def lindstrom_det(gf: GroundedFunction) -> Scalar:
    """det of F_x(z_x ^ y) over the whole lattice: prod f_x(x), or 0 unless every z_x = x."""
    _require_whole_lattice(gf)
    if not gf.is_diagonal():
        logger.debug("Grounding is not diagonal, determinant vanishes")
        return 0
    f = local_mobius(gf, range(gf.lattice.n))
    return product(f[x][x] for x in gf.index)


def lindstrom_fdet(gf: GroundedFunction, k: int, fmap: FMapLike) -> Scalar:
    """F(Id, ..., Id) * prod f_x(x) over the whole lattice, or 0 unless every z_x = x."""
    _require_whole_lattice(gf)
    coef = identity_coefficient(gf, k, fmap)
    if not gf.is_diagonal():
        return 0
    return coef * lindstrom_det(gf)


def meet_closed_fdet(gf: GroundedFunction, k: int, fmap: FMapLike) -> Scalar:
    """
    F(Id, ..., Id) * prod fhat_y(y) for a meet-closed index set S.

    f_y is the Mobius transform of F_y and fhat_y sums it over the triangle
    block of y in a linear extension of S.
    """
    sl = gf.lattice
    if not is_meet_closed(sl, gf.index):
        raise SubsetNotMeetClosed("index set is not closed under meets")
    if not gf.is_diagonal():
        raise GroundingNotDiagonal("meet-closed evaluation needs z_y = y for every y")
    coef = identity_coefficient(gf, k, fmap)
    ideal = order_ideal_closure(sl.poset, gf.index)
    f = local_mobius(gf, ideal)
    hats = [hat_transform(sl, gf.index, f[y])[y] for y in gf.index]
    logger.debug(f"Meet-closed evaluation over {gf.n} elements, ideal of size {len(ideal)}")
    return coef * product(hats)


def factor_closed_fdet(gf: GroundedFunction, k: int, fmap: FMapLike) -> Scalar:
    """F(Id, ..., Id) * prod f_x(x) for an index set closed under going down."""
    if not is_order_ideal(gf.lattice.poset, gf.index):
        raise SubsetNotFactorClosed("index set is not an order ideal")
    coef = identity_coefficient(gf, k, fmap)
    if not gf.is_diagonal():
        return 0
    f = local_mobius(gf, gf.index)
    return coef * product(f[x][x] for x in gf.index)
