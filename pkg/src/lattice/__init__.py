from lattice.poset import (
    Poset,
    default_labels,
    extension_order,
    is_order_ideal,
    linear_extension,
    mobius_matrix,
    order_ideal_closure,
    poset_from_covers,
    restrict,
    zeta_matrix,
)
from lattice.semilattice import (
    MeetSemilattice,
    as_meet_semilattice,
    is_meet_closed,
    meet_closure,
    meet_of,
    triangle_index,
)

__all__ = [
    "MeetSemilattice",
    "Poset",
    "as_meet_semilattice",
    "default_labels",
    "extension_order",
    "is_meet_closed",
    "is_order_ideal",
    "linear_extension",
    "meet_closure",
    "meet_of",
    "mobius_matrix",
    "order_ideal_closure",
    "poset_from_covers",
    "restrict",
    "triangle_index",
    "zeta_matrix",
]
