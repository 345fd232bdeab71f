import itertools
import logging
from math import comb, factorial
from typing import Sequence

import numpy as np

from errors import (
    ArityMismatch,
    DimensionMismatch,
    DivisionNotExact,
    EnumerationTooLarge,
    ScalarNotDivisible,
)
from config import MAX_TERMS
from hyperdet.fmap import check_arity
from hyperdet.hypermatrix import Hypermatrix, matrix, plain
from hyperdet.permutation import Permutation, all_permutations
from protocol.fmap import FMapLike
from scalar import Scalar, exact_div, is_zero, product, total
from tasks import parallel_sum

logger = logging.getLogger(__name__)


def det(m: np.ndarray | Sequence[Sequence[Scalar]]) -> Scalar:
    """
    Exact determinant by fraction-free Bareiss elimination.

    Every division is exact over the integers and over polynomials, so the
    result stays in the variant of the entries. A zero pivot column gives 0.
    """
    rows = [[plain(v) for v in row] for row in m]
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise DimensionMismatch("determinant of a non-square matrix")
    if n == 0:
        return 1
    sign = 1
    previous: Scalar = 1
    for k in range(n - 1):
        if is_zero(rows[k][k]):
            for i in range(k + 1, n):
                if not is_zero(rows[i][k]):
                    rows[k], rows[i] = rows[i], rows[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = rows[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                rows[i][j] = exact_div(
                    pivot * rows[i][j] - rows[i][k] * rows[k][j], previous
                )
        previous = pivot
    last = rows[n - 1][n - 1]
    return last if sign > 0 else -last


def cofactor_det(m: np.ndarray | Sequence[Sequence[Scalar]]) -> Scalar:
    """Laplace expansion along the first row. Exponential; for cross-checks only."""
    rows = [[plain(v) for v in row] for row in m]
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    return total(
        (-1) ** j * rows[0][j] * cofactor_det([row[:j] + row[j + 1 :] for row in rows[1:]])
        for j in range(n)
        if not is_zero(rows[0][j])
    )


def enumeration_size(method: str, n: int, k: int, closure_size: int | None = None) -> int:
    """Number of terms (or slice determinants) a method enumerates."""
    perms = factorial(n)
    match method:
        case "cayley":
            return perms**k
        case "brute" | "det1":
            return perms ** (k - 1)
        case "expand":
            return perms ** (k - 2)
        case "ligen" | "genhauk":
            subsets = comb(closure_size if closure_size is not None else n, n)
            return subsets * perms ** (k - 2)
        case "lindstrom" | "meetclosed" | "factorclosed":
            return n
    raise ValueError(f"unknown method {method!r}")


def guard(terms: int, max_terms: int, force: bool) -> None:
    if terms > max_terms and not force:
        raise EnumerationTooLarge(terms, max_terms)


def cayley_det(
    m: Hypermatrix, *, threads: int = 1, max_terms: int = MAX_TERMS, force: bool = False
) -> Scalar:
    """Cayley's first hyperdeterminant: alternating sum over S_n^k, divided by n!."""
    n, k = m.n, m.k
    guard(enumeration_size("cayley", n, k), max_terms, force)
    perms = all_permutations(n)
    entries = m.entries

    def chunk(sigma1: Permutation) -> Scalar:
        acc: Scalar = 0
        for rest in itertools.product(perms, repeat=k - 1):
            sign = sigma1.sign
            for sigma in rest:
                sign *= sigma.sign
            term = product(
                entries[(sigma1(i), *(sigma(i) for sigma in rest))] for i in range(n)
            )
            acc = acc + sign * term
        return acc

    raw = parallel_sum(chunk, perms, threads)
    try:
        return exact_div(raw, factorial(n))
    except DivisionNotExact:
        raise ScalarNotDivisible(
            f"{factorial(n)} does not divide the alternating sum {raw}"
        ) from None


def det1(
    m: Hypermatrix, *, threads: int = 1, max_terms: int = MAX_TERMS, force: bool = False
) -> Scalar:
    """Alternating sum with the first permutation fixed to the identity."""
    n, k = m.n, m.k
    guard(enumeration_size("det1", n, k), max_terms, force)
    perms = all_permutations(n)
    entries = m.entries

    def chunk(sigma2: Permutation) -> Scalar:
        acc: Scalar = 0
        for rest in itertools.product(perms, repeat=k - 2):
            sign = sigma2.sign
            for sigma in rest:
                sign *= sigma.sign
            term = product(
                entries[(i, sigma2(i), *(sigma(i) for sigma in rest))] for i in range(n)
            )
            acc = acc + sign * term
        return acc

    return parallel_sum(chunk, perms, threads)


def fdet_bruteforce(
    m: Hypermatrix,
    f: FMapLike,
    *,
    threads: int = 1,
    max_terms: int = MAX_TERMS,
    force: bool = False,
) -> Scalar:
    """Det_F by literal enumeration of S_n^(k-1)."""
    check_arity(f, m.k)
    n, k = m.n, m.k
    terms = enumeration_size("brute", n, k)
    guard(terms, max_terms, force)
    logger.debug(f"Brute-force F-determinant: n={n}, k={k}, {terms} terms")
    perms = all_permutations(n)
    entries = m.entries

    def chunk(sigma2: Permutation) -> Scalar:
        acc: Scalar = 0
        for rest in itertools.product(perms, repeat=k - 2):
            term = product(
                entries[(i, sigma2(i), *(sigma(i) for sigma in rest))] for i in range(n)
            )
            acc = acc + f(rest) * term
        return sigma2.sign * acc

    return parallel_sum(chunk, perms, threads)


def slice_matrix(m: Hypermatrix, sigmas: Sequence[Permutation]) -> np.ndarray:
    """The n x n matrix with (i, j) entry M[i, j, s_3(i), ..., s_k(i)]."""
    if len(sigmas) != m.k - 2:
        raise ArityMismatch(m.k - 2, len(sigmas))
    n = m.n
    return matrix(
        [
            [m[(i, j, *(sigma(i) for sigma in sigmas))] for j in range(n)]
            for i in range(n)
        ]
    )


def fdet_expansion(m: Hypermatrix, f: FMapLike, *, threads: int = 1) -> Scalar:
    """Det_F as the F-weighted sum of (n!)^(k-2) slice determinants."""
    check_arity(f, m.k)
    n, k = m.n, m.k
    perms = all_permutations(n)

    def weighted(sigmas: tuple[Permutation, ...]) -> Scalar:
        coef = f(sigmas)
        if is_zero(coef):
            return 0
        return coef * det(slice_matrix(m, sigmas))

    if k == 2:
        return weighted(())

    def chunk(sigma3: Permutation) -> Scalar:
        return total(
            weighted((sigma3, *rest)) for rest in itertools.product(perms, repeat=k - 3)
        )

    return parallel_sum(chunk, perms, threads)


def group_action(g: np.ndarray, m: Hypermatrix) -> Hypermatrix:
    """Contract g against the second index: (g.M)[i1, i2, ...] = sum_j g[i2, j] M[i1, j, ...]."""
    if g.shape != (m.n, m.n):
        raise DimensionMismatch(f"group element has shape {g.shape}, expected {(m.n, m.n)}")
    n = m.n

    def entry(index: tuple[int, ...]) -> Scalar:
        i1, i2, *rest = index
        return total(g[i2, j] * m[(i1, j, *rest)] for j in range(n))

    return Hypermatrix.from_function(n, m.k, entry)

