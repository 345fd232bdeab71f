import logging
from pathlib import Path

from closedform import GroundedFunction
from errors import InputError, ParseError
from formats.lines import directives, parse_int, read_text
from formats.poset import dump_poset, parse_poset, read_poset
from lattice import as_meet_semilattice
from scalar import Scalar, format_scalar, is_zero, parse_scalar

logger = logging.getLogger(__name__)

POSET_DIRECTIVES = ("poset", "label", "cover")


def parse_grounded(
    text: str, source: str | None = None, base: Path | None = None
) -> GroundedFunction:
    """
    Read a grounded-function file.

        gf <poset-file | inline> <n>
        index <x>,<x>,...
        z <x> <z>
        F <x> <z> <scalar>
        symbolic [prefix]

    With 'inline' the poset directives follow in the same file. Without an
    index line the index set is the whole lattice in element order. Elements
    are labels or indices, as in poset files.
    """
    lines = list(directives(text))
    if not lines:
        raise ParseError("missing 'gf <poset-file> <n>' header", source)
    line, header = lines[0]
    keyword, *args = header.split()
    if keyword != "gf" or len(args) != 2:
        raise ParseError("expected 'gf <poset-file> <n>'", source, line)
    n = parse_int(args[1], source, line, "index size")
    body = lines[1:]
    if args[0] == "inline":
        # other lines become blank, line numbers stay aligned
        kept = {
            number: content for number, content in body if content.split()[0] in POSET_DIRECTIVES
        }
        total_lines = len(text.splitlines())
        poset_text = "\n".join(kept.get(number, "") for number in range(1, total_lines + 1))
        poset = parse_poset(poset_text, source)
    else:
        poset_path = Path(args[0])
        if not poset_path.is_absolute() and base is not None:
            poset_path = base / poset_path
        poset = read_poset(poset_path)
    sl = as_meet_semilattice(poset)

    def element(token: str, line: int) -> int:
        try:
            return poset.resolve(token)
        except InputError as e:
            raise ParseError(str(e), source, line) from None

    index: list[int] | None = None
    z_assign: dict[int, int] = {}
    values: dict[tuple[int, int], Scalar] = {}
    symbolic_prefix: str | None = None
    for line, content in body:
        keyword, *args = content.split(maxsplit=3)
        match keyword:
            case "poset" | "label" | "cover":
                continue
            case "index":
                if index is not None:
                    raise ParseError("duplicate index line", source, line)
                if len(args) != 1:
                    raise ParseError("expected 'index <x>,<x>,...'", source, line)
                index = [element(token, line) for token in args[0].split(",")]
            case "z":
                if len(args) != 2:
                    raise ParseError("expected 'z <x> <z>'", source, line)
                z_assign[element(args[0], line)] = element(args[1], line)
            case "F":
                if len(args) != 3:
                    raise ParseError("expected 'F <x> <z> <scalar>'", source, line)
                try:
                    value = parse_scalar(args[2])
                except ParseError as e:
                    raise ParseError(str(e), source, line) from None
                values[(element(args[0], line), element(args[1], line))] = value
            case "symbolic":
                symbolic_prefix = args[0] if args else "F"
            case _:
                raise ParseError(f"unknown directive {keyword!r}", source, line)

    if index is None:
        index = list(range(poset.n))
    if len(index) != n:
        raise ParseError(f"header announces {n} indexed elements, found {len(index)}", source)
    if symbolic_prefix is not None:
        if values:
            raise ParseError("'symbolic' cannot be combined with F lines", source)
        return GroundedFunction.symbolic(sl, index, z_assign, symbolic_prefix)
    return GroundedFunction(sl, tuple(index), values, z_assign)


def read_grounded(path: str | Path) -> GroundedFunction:
    path = Path(path)
    gf = parse_grounded(read_text(path), str(path), path.parent)
    logger.debug(f"Read grounded function on {gf.n} of {gf.lattice.n} elements from {path}")
    return gf


def dump_grounded(gf: GroundedFunction) -> str:
    """Self-contained inline form; symbolic values are written out term by term."""
    label = gf.label
    lines = [f"gf inline {gf.n}", dump_poset(gf.lattice.poset).rstrip("\n")]
    lines.append(f"index {','.join(label(x) for x in gf.index)}")
    lines += [f"z {label(x)} {label(gf.z(x))}" for x in gf.index if gf.z(x) != x]
    for x in gf.index:
        for z in range(gf.lattice.n):
            value = gf.value(x, z)
            if not is_zero(value):
                lines.append(f"F {label(x)} {label(z)} {format_scalar(value)}")
    return "\n".join(lines) + "\n"
