"""Symbolic worked examples with known closed forms."""

import logging
from dataclasses import dataclass

from closedform import (
    GroundedFunction,
    build_meet_hypermatrix,
    li_expansion_det,
    lindstrom_det,
    lindstrom_fdet,
    meet_closed_fdet,
)
from hyperdet import TableFMap, det, fdet_expansion
from lattice import MeetSemilattice, as_meet_semilattice, poset_from_covers
from numth import builtin_function, euler_phi, gcd_grounded_function, gcd_hypermatrix
from scalar import (
    Polynomial,
    Scalar,
    equals,
    parse_scalar,
    product,
    sub,
    total,
    variable,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WorkedExample:
    name: str
    value: Scalar
    expected: Scalar
    oracle: Scalar

    @property
    def matches(self) -> bool:
        return equals(self.value, self.expected) and equals(self.oracle, self.expected)

    @property
    def difference(self) -> Scalar:
        return sub(self.value, self.expected)


def labelled_semilattice(labels: list[str], covers: list[tuple[str, str]]) -> MeetSemilattice:
    position = {name: i for i, name in enumerate(labels)}
    pairs = [(position[a], position[b]) for a, b in covers]
    return as_meet_semilattice(poset_from_covers(len(labels), pairs, labels))


def cumulative_symbolic(
    sl: MeetSemilattice, index: tuple[int, ...], z_assign: dict[int, int] | None = None
) -> GroundedFunction:
    """F_y(z) = sum of fresh indeterminates fy(x) over x <= z, for z <= y."""
    labels = sl.labels
    small = {
        (y, x): Polynomial.variable(f"f{labels[y]}({labels[x]})")
        for y in index
        for x in range(sl.n)
        if sl.le(x, y)
    }
    values: dict[tuple[int, int], Scalar] = {
        (y, z): total(small[(y, x)] for x in range(sl.n) if sl.le(x, z))
        for y in index
        for z in range(sl.n)
        if sl.le(z, y)
    }
    return GroundedFunction(sl, index, values, z_assign or {})


def chain_example() -> WorkedExample:
    """Two-element chain 1 < 2, order 4, every F-map value a fresh indeterminate."""
    sl = labelled_semilattice(["1", "2"], [("1", "2")])
    gf = GroundedFunction.symbolic(sl, (0, 1))
    fmap = TableFMap.symbolic(2, 2)
    value = lindstrom_fdet(gf, 4, fmap)
    oracle = fdet_expansion(build_meet_hypermatrix(gf, 4), fmap)
    f = variable
    expected = f("Frak(12_12)") * f("F1(1)") * (f("F2(2)") - f("F2(1)"))
    return WorkedExample("chain-2, k=4", value, expected, oracle)


def meet_closed_example() -> WorkedExample:
    """
    Five elements 1 < 2 < 4, 1 < 3 < 5, 2 < 5, index set {2, 4, 5}, order 3.

    F_y is the zeta transform of a symbolic f_y, so the closed form reads off
    the hat sums f2(2)+f2(1), f4(4) and f5(5)+f5(3).
    """
    labels = ["1", "2", "3", "4", "5"]
    sl = labelled_semilattice(labels, [("1", "2"), ("2", "4"), ("1", "3"), ("3", "5"), ("2", "5")])
    gf = cumulative_symbolic(sl, (1, 3, 4))
    fmap = TableFMap.symbolic(3, 1)
    value = meet_closed_fdet(gf, 3, fmap)
    oracle = fdet_expansion(build_meet_hypermatrix(gf, 3), fmap)
    f = variable
    expected = (
        f("Frak(123)") * (f("f2(2)") + f("f2(1)")) * f("f4(4)") * (f("f5(5)") + f("f5(3)"))
    )
    return WorkedExample("meet-closed {2,4,5}, k=3", value, expected, oracle)


def subset_expansion_example() -> WorkedExample:
    """
    Seven elements 0 < 1, 2, 3 with 1, 2 < 4, 2, 3 < 5 and 1, 3 < 6; index set
    {4, 5, 6} grounded at z_4 = 1, z_5 = 2, z_6 = 6. The minor expansion
    over the six surviving column subsets must give the seven-term polynomial.
    """
    covers = [("0", "1"), ("0", "2"), ("0", "3"), ("1", "4"), ("1", "6")]
    covers += [("2", "4"), ("2", "5"), ("3", "5"), ("3", "6")]
    sl = labelled_semilattice([str(i) for i in range(7)], covers)
    gf = cumulative_symbolic(sl, (4, 5, 6), {4: 1, 5: 2})
    value = li_expansion_det(gf)
    oracle = det(build_meet_hypermatrix(gf, 2).entries)
    expected = parse_scalar(
        "-f4(0)*f5(2)*f6(1) + f4(0)*f5(2)*f6(3) + f4(1)*f5(2)*f6(0) + 2*f4(1)*f5(2)*f6(3)"
        " + f4(1)*f5(2)*f6(6) + f4(1)*f5(0)*f6(6) + f4(1)*f5(0)*f6(3)"
    )
    return WorkedExample("subset expansion {4,5,6}", value, expected, oracle)


def smith_example(n: int = 6) -> WorkedExample:
    """det(gcd(i, j)) for 1 <= i, j <= n against the Lindstrom product."""
    values = list(range(1, n + 1))
    F = builtin_function("id", n)
    gf = gcd_grounded_function(values, F)
    oracle = det(gcd_hypermatrix(values, 2, F).entries)
    expected = product(euler_phi(i) for i in values)
    return WorkedExample(f"smith n={n}", lindstrom_det(gf), expected, oracle)


def worked_examples() -> list[WorkedExample]:
    return [chain_example(), meet_closed_example(), subset_expansion_example(), smith_example()]
