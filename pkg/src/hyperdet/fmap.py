import itertools
from dataclasses import dataclass, field
from typing import Mapping

from errors import ArityMismatch, InputError
from hyperdet.permutation import Permutation, all_permutations
from protocol.fmap import FMapLike
from scalar import Polynomial, Scalar


@dataclass(frozen=True)
class SignProduct:
    """sign(s_3) * ... * sign(s_k); 1 on the empty tuple."""

    arity: int

    def __call__(self, sigmas: tuple[Permutation, ...]) -> Scalar:
        sign = 1
        for sigma in sigmas:
            sign *= sigma.sign
        return sign


@dataclass(frozen=True)
class ConstantOne:
    arity: int

    def __call__(self, sigmas: tuple[Permutation, ...]) -> Scalar:
        return 1


@dataclass(frozen=True)
class TableFMap:
    """Explicit coefficients per permutation tuple, with a default for unlisted tuples."""

    arity: int
    entries: Mapping[tuple[Permutation, ...], Scalar] = field(default_factory=dict)
    default: Scalar = 0

    def __call__(self, sigmas: tuple[Permutation, ...]) -> Scalar:
        return self.entries.get(tuple(sigmas), self.default)

    @classmethod
    def symbolic(cls, n: int, arity: int, prefix: str = "Frak") -> "TableFMap":
        """Every tuple gets its own indeterminate, e.g. Frak(12_21)."""
        entries = {
            sigmas: Polynomial.variable(
                f"{prefix}({'_'.join(sigma.compact() for sigma in sigmas)})"
            )
            for sigmas in itertools.product(all_permutations(n), repeat=arity)
        }
        return cls(arity, entries)


def check_arity(f: FMapLike, k: int) -> None:
    if f.arity != k - 2:
        raise ArityMismatch(k - 2, f.arity)


def make_fmap(kind: str, arity: int) -> FMapLike:
    """Built-in F-map by name: sign or one."""
    if kind == "sign":
        return SignProduct(arity)
    if kind == "one":
        return ConstantOne(arity)
    raise InputError(f"unknown F-map {kind!r}; use sign, one or table:<file>")
