from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from errors import DimensionMismatch
from scalar import Scalar, equals

Index = tuple[int, ...]


def plain(value: object) -> Scalar:
    """Unwrap numpy integers so arithmetic stays exact."""
    if isinstance(value, np.integer):
        return int(value)
    return value  # type: ignore[return-value]


@dataclass(frozen=True, eq=False)
class Hypermatrix:
    """
    Dense k-way array of exact scalars with every side of length n.

    entries is an object-dtype numpy array of shape (n,) * k; indices are
    0-based, flat order is lexicographic with the last index fastest.
    """

    entries: np.ndarray

    def __post_init__(self):
        shape = self.entries.shape
        if len(shape) < 2:
            raise DimensionMismatch(f"hypermatrix order must be at least 2, got {len(shape)}")
        if len(set(shape)) != 1:
            raise DimensionMismatch(f"hypermatrix sides must be equal, got {shape}")

    @classmethod
    def from_function(cls, n: int, k: int, fn: Callable[[Index], Scalar]) -> "Hypermatrix":
        entries = np.empty((n,) * k, dtype=object)
        for index in np.ndindex(*entries.shape):
            entries[index] = plain(fn(tuple(int(i) for i in index)))
        return cls(entries)

    @classmethod
    def from_flat(cls, n: int, k: int, values: Sequence[Scalar]) -> "Hypermatrix":
        if len(values) != n**k:
            raise DimensionMismatch(f"expected {n**k} entries for n={n}, k={k}, got {len(values)}")
        flat = np.empty(n**k, dtype=object)
        for i, value in enumerate(values):
            flat[i] = plain(value)
        return cls(flat.reshape((n,) * k))

    @property
    def n(self) -> int:
        return int(self.entries.shape[0])

    @property
    def k(self) -> int:
        return self.entries.ndim

    def __getitem__(self, index: Index) -> Scalar:
        return self.entries[index]

    def flat(self) -> list[Scalar]:
        return list(self.entries.reshape(-1))

    def equals(self, other: "Hypermatrix") -> bool:
        if self.entries.shape != other.entries.shape:
            return False
        return all(equals(a, b) for a, b in zip(self.flat(), other.flat()))


def matrix(rows: Sequence[Sequence[Scalar]]) -> np.ndarray:
    """Square object-dtype matrix holding the given rows."""
    n = len(rows)
    out = np.empty((n, n), dtype=object)
    for i, row in enumerate(rows):
        if len(row) != n:
            raise DimensionMismatch(f"row {i} has {len(row)} entries, expected {n}")
        for j, value in enumerate(row):
            out[i, j] = plain(value)
    return out

