import logging
from dataclasses import dataclass, field
from typing import Callable, Mapping, Sequence

from errors import InvalidGrounding
from lattice import MeetSemilattice
from scalar import Polynomial, Scalar

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class GroundedFunction:
    """
    A family of incidence functions F_x on a meet-semilattice, one per x in
    an ordered index set X, each grounded at an element z_x <= x.

    values maps (x, z) to F_x(z); pairs with z <= x that are absent are 0 and
    pairs with z not below x are always 0.
    """

    lattice: MeetSemilattice
    index: tuple[int, ...]
    values: Mapping[tuple[int, int], Scalar] = field(default_factory=dict)
    z_assign: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        n = self.lattice.n
        if not self.index:
            raise InvalidGrounding("index set must not be empty")
        if len(set(self.index)) != len(self.index):
            raise InvalidGrounding("index set has repeated elements")
        for x in self.index:
            if not 0 <= x < n:
                raise InvalidGrounding(f"index element {x} is not in the lattice")
        members = set(self.index)
        for x, z in self.z_assign.items():
            if x not in members:
                raise InvalidGrounding(f"grounding given for {self.label(x)}, which is not indexed")
            if not self.lattice.le(z, x):
                raise InvalidGrounding(
                    f"grounding z={self.label(z)} is not below x={self.label(x)}"
                )
        for x, z in self.values:
            if x not in members:
                raise InvalidGrounding(f"value given for {self.label(x)}, which is not indexed")
            if not self.lattice.le(z, x):
                raise InvalidGrounding(
                    f"F_{self.label(x)}({self.label(z)}) lies outside the down-set of its index"
                )

    @classmethod
    def from_callable(
        cls,
        lattice: MeetSemilattice,
        index: Sequence[int],
        fn: Callable[[int, int], Scalar],
        z_assign: Mapping[int, int] | None = None,
    ) -> "GroundedFunction":
        """Tabulate fn(x, z) on every z <= x."""
        values = {
            (x, z): fn(x, z) for x in index for z in range(lattice.n) if lattice.le(z, x)
        }
        return cls(lattice, tuple(index), values, dict(z_assign or {}))

    @classmethod
    def symbolic(
        cls,
        lattice: MeetSemilattice,
        index: Sequence[int],
        z_assign: Mapping[int, int] | None = None,
        prefix: str = "F",
    ) -> "GroundedFunction":
        """Fresh indeterminates named like F4(2) for every F_x(z) with z <= x."""
        labels = lattice.labels
        return cls.from_callable(
            lattice,
            index,
            lambda x, z: Polynomial.variable(f"{prefix}{labels[x]}({labels[z]})"),
            z_assign,
        )

    @property
    def n(self) -> int:
        return len(self.index)

    def label(self, x: int) -> str:
        return self.lattice.labels[x]

    def z(self, x: int) -> int:
        return self.z_assign.get(x, x)

    def value(self, x: int, z: int) -> Scalar:
        if not self.lattice.le(z, x):
            return 0
        return self.values.get((x, z), 0)

    def function(self, x: int) -> dict[int, Scalar]:
        """F_x as a map over the whole lattice."""
        return {z: self.value(x, z) for z in range(self.lattice.n)}

    def is_diagonal(self) -> bool:
        return all(self.z(x) == x for x in self.index)

    def with_grounding(self, z_assign: Mapping[int, int]) -> "GroundedFunction":
        return GroundedFunction(self.lattice, self.index, self.values, dict(z_assign))
