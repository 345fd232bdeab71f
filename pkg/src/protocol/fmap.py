from __future__ import annotations

from typing import TYPE_CHECKING, Protocol

if TYPE_CHECKING:
    from hyperdet.permutation import Permutation
    from scalar import Scalar


class FMapLike(Protocol):
    @property
    def arity(self) -> int: ...

    def __call__(self, sigmas: tuple[Permutation, ...]) -> Scalar: ...
