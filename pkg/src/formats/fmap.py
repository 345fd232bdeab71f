from pathlib import Path

from errors import InputError, ParseError
from formats.lines import directives, read_text
from hyperdet import Permutation, TableFMap
from scalar import Scalar, format_scalar, parse_scalar


def parse_fmap_table(text: str, arity: int, source: str | None = None) -> TableFMap:
    """
    Lines '<perm>;<perm>;... -> <scalar>' plus an optional 'default -> <scalar>'.

    Permutations are 1-based one-line images such as '2,1'. Every line lists
    exactly arity permutations; for arity 0 the key is empty.
    """
    entries: dict[tuple[Permutation, ...], Scalar] = {}
    default: Scalar = 0
    seen_default = False
    for line, content in directives(text):
        if "->" not in content:
            raise ParseError("expected '<perm>;... -> <scalar>'", source, line)
        key, value_text = (part.strip() for part in content.split("->", 1))
        try:
            value = parse_scalar(value_text)
        except ParseError as e:
            raise ParseError(str(e), source, line) from None
        if key == "default":
            if seen_default:
                raise ParseError("duplicate default line", source, line)
            default, seen_default = value, True
            continue
        try:
            sigmas = tuple(Permutation.parse(part) for part in key.split(";")) if key else ()
        except InputError as e:
            raise ParseError(str(e), source, line) from None
        if len(sigmas) != arity:
            raise ParseError(f"expected {arity} permutations, got {len(sigmas)}", source, line)
        if len({sigma.n for sigma in sigmas}) > 1:
            raise ParseError("permutations on one line must have the same size", source, line)
        if sigmas in entries:
            raise ParseError(f"duplicate entry for {key}", source, line)
        entries[sigmas] = value
    return TableFMap(arity, entries, default)


def read_fmap_table(path: str | Path, arity: int) -> TableFMap:
    return parse_fmap_table(read_text(path), arity, str(path))


def dump_fmap_table(f: TableFMap) -> str:
    lines = [
        f"{';'.join(str(sigma) for sigma in sigmas)} -> {format_scalar(value)}"
        for sigmas, value in sorted(f.entries.items())
    ]
    lines.append(f"default -> {format_scalar(f.default)}")
    return "\n".join(lines) + "\n"
