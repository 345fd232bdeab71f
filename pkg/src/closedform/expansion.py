import itertools
import logging
from dataclasses import dataclass

import numpy as np

from closedform.grounded import GroundedFunction
from closedform.theorems import local_mobius
from closedform.transforms import mobius_transform
from config import MAX_TERMS
from errors import FunctionsNotUniform
from hyperdet import (
    Hypermatrix,
    check_arity,
    det,
    enumeration_size,
    fdet_expansion,
    guard,
    matrix,
)
from lattice import extension_order, mobius_matrix, order_ideal_closure, restrict
from protocol.fmap import FMapLike
from scalar import Scalar, equals, is_zero, product
from tasks import parallel_sum

logger = logging.getLogger(__name__)

Subset = tuple[int, ...]


@dataclass(frozen=True, eq=False)
class CMatrix:
    """
    C[x][y] = f_x(y) when y <= z_x, else 0.

    rows are the indexed elements x_1..x_n, columns the order ideal they
    generate in linear-extension order.
    """

    rows: tuple[int, ...]
    columns: tuple[int, ...]
    entries: np.ndarray

    def minor(self, subset: Subset) -> np.ndarray:
        """Square submatrix on the columns at the given positions."""
        return matrix([[self.entries[i, j] for j in subset] for i in range(len(self.rows))])


def closure_order(gf: GroundedFunction) -> tuple[int, ...]:
    """The order ideal generated by the index set, in linear-extension order."""
    poset = gf.lattice.poset
    return extension_order(poset, order_ideal_closure(poset, gf.index))


def c_matrix(gf: GroundedFunction) -> CMatrix:
    columns = closure_order(gf)
    f = local_mobius(gf, columns)
    le = gf.lattice.le
    entries = np.empty((gf.n, len(columns)), dtype=object)
    for i, x in enumerate(gf.index):
        for j, y in enumerate(columns):
            entries[i, j] = f[x][y] if le(y, gf.z(x)) else 0
    return CMatrix(gf.index, columns, entries)


def zeta_factor_matrix(gf: GroundedFunction) -> np.ndarray:
    """Z[a][j] = 1 when the a-th element of the closure lies below x_j."""
    columns = closure_order(gf)
    le = gf.lattice.le
    return np.array(
        [[1 if le(y, x) else 0 for x in gf.index] for y in columns], dtype=object
    )


def _zeta_minor(z: np.ndarray, subset: Subset) -> Scalar:
    return det(matrix([list(z[a]) for a in subset]))


def li_expansion_det(gf: GroundedFunction, *, threads: int = 1) -> Scalar:
    """det F_x(z_x ^ y) as the sum over n-subsets K of det C[:, K] * det Z[K, :]."""
    c = c_matrix(gf)
    z = zeta_factor_matrix(gf)
    subsets = list(itertools.combinations(range(len(c.columns)), gf.n))

    def term(subset: Subset) -> Scalar:
        zdet = _zeta_minor(z, subset)
        if is_zero(zdet):
            return 0
        return det(c.minor(subset)) * zdet

    logger.debug(f"Minor expansion over {len(subsets)} subsets of a {len(c.columns)}-element ideal")
    return parallel_sum(term, subsets, threads)


def ligen_fdet(
    gf: GroundedFunction,
    k: int,
    fmap: FMapLike,
    *,
    threads: int = 1,
    max_terms: int = MAX_TERMS,
    force: bool = False,
) -> Scalar:
    """
    Det_F of the meet hypermatrix as a sum over n-subsets K of the ideal.

    Each subset contributes Det_F(B_K) * det Z[K, :], where
    B_K[i1, i2, i3, ...] = f_{x_i1}(y_{K_i2}) * zeta(y_{K_i2}, z_{x_i1} ^ x_i3 ^ ...).
    """
    check_arity(fmap, k)
    columns = closure_order(gf)
    guard(enumeration_size("ligen", gf.n, k, len(columns)), max_terms, force)
    f = local_mobius(gf, columns)
    z = zeta_factor_matrix(gf)
    sl = gf.lattice
    xs = gf.index

    def term(subset: Subset) -> Scalar:
        zdet = _zeta_minor(z, subset)
        if is_zero(zdet):
            return 0

        def entry(index: tuple[int, ...]) -> Scalar:
            x = xs[index[0]]
            y = columns[subset[index[1]]]
            below = sl.meet_of([gf.z(x), *(xs[i] for i in index[2:])])
            return f[x][y] if sl.le(y, below) else 0

        block = Hypermatrix.from_function(gf.n, k, entry)
        return fdet_expansion(block, fmap) * zdet

    subsets = list(itertools.combinations(range(len(columns)), gf.n))
    return parallel_sum(term, subsets, threads)


def uniform_function(gf: GroundedFunction) -> dict[int, Scalar]:
    """The single F with F_x(z) = F(z) for every indexed x and z <= x, on the index ideal."""
    le = gf.lattice.le
    uniform: dict[int, Scalar] = {}
    for z in closure_order(gf):
        owners = [x for x in gf.index if le(z, x)]
        first = gf.value(owners[0], z)
        for x in owners[1:]:
            if not equals(gf.value(x, z), first):
                raise FunctionsNotUniform(
                    f"F_{gf.label(owners[0])} and F_{gf.label(x)} differ at {gf.label(z)}"
                )
        uniform[z] = first
    return uniform


def genhauk_fdet(
    gf: GroundedFunction,
    k: int,
    fmap: FMapLike,
    *,
    threads: int = 1,
    max_terms: int = MAX_TERMS,
    force: bool = False,
) -> Scalar:
    """
    ligen_fdet for a uniform F with prod f(y_K) pulled out of each block.

    The remaining block only holds zeta values, so each subset costs one
    integer F-determinant.
    """
    check_arity(fmap, k)
    F = uniform_function(gf)
    columns = closure_order(gf)
    guard(enumeration_size("genhauk", gf.n, k, len(columns)), max_terms, force)
    sub, members = restrict(gf.lattice.poset, columns)
    local = mobius_transform(sub, {i: F[y] for i, y in enumerate(members)}, mobius_matrix(sub))
    f = {members[i]: value for i, value in local.items()}
    z = zeta_factor_matrix(gf)
    sl = gf.lattice
    xs = gf.index

    def term(subset: Subset) -> Scalar:
        weight = product(f[columns[a]] for a in subset)
        if is_zero(weight):
            return 0
        zdet = _zeta_minor(z, subset)
        if is_zero(zdet):
            return 0

        def entry(index: tuple[int, ...]) -> Scalar:
            x = xs[index[0]]
            y = columns[subset[index[1]]]
            below = sl.meet_of([gf.z(x), *(xs[i] for i in index[2:])])
            return 1 if sl.le(y, below) else 0

        block = Hypermatrix.from_function(gf.n, k, entry)
        return weight * fdet_expansion(block, fmap) * zdet

    subsets = list(itertools.combinations(range(len(columns)), gf.n))
    return parallel_sum(term, subsets, threads)
