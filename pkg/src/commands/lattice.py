import argparse
import logging

from config import Config
from errors import NotAMeetSemilattice
from formats import read_poset
from lattice import as_meet_semilattice, linear_extension, mobius_matrix
from scalar import format_scalar

logger = logging.getLogger(__name__)


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("lattice", help="Validate and describe a poset file")

    parser.add_argument(
        "action", choices=["check", "info"], help="Verdict only, or a full description"
    )

    parser.add_argument("poset", type=str, help="Poset file")

    parser.add_argument("--mobius", action="store_true", help="Also print the Mobius matrix")

    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, config: Config) -> int:
    poset = read_poset(args.poset)
    labels = poset.labels
    lines = []
    try:
        sl = as_meet_semilattice(poset)
        lines.append(f"meet-semilattice: yes ({poset.n} elements)")
    except NotAMeetSemilattice as e:
        sl = None
        x, y = e.witness
        lines.append(f"meet-semilattice: no (witness: {labels[x]},{labels[y]})")

    if args.action == "info":
        lines.append(f"labels: {' '.join(labels)}")
        lines.append(f"covers: {' '.join(f'{labels[a]}<{labels[b]}' for a, b in poset.covers())}")
        lines.append(f"linear extension: {' '.join(labels[x] for x in linear_extension(poset))}")
        if sl is not None:
            lines.append("meets:")
            lines += [
                "  " + " ".join(labels[sl.meet(x, y)] for y in range(sl.n)) for x in range(sl.n)
            ]
    if args.mobius:
        mu = mobius_matrix(poset)
        lines.append("mobius:")
        lines += ["  " + " ".join(format_scalar(v) for v in row) for row in mu]

    print("\n".join(lines))
    return 0
