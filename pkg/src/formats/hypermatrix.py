from pathlib import Path

from errors import ParseError
from formats.lines import directives, parse_int, read_text
from hyperdet import Hypermatrix
from scalar import format_scalar, parse_scalar


def parse_hypermatrix(text: str, source: str | None = None) -> Hypermatrix:
    """Header 'hypermatrix <n> <k>' followed by n^k scalars, last index fastest."""
    lines = list(directives(text))
    if not lines:
        raise ParseError("missing 'hypermatrix <n> <k>' header", source)
    line, header = lines[0]
    keyword, *args = header.split()
    if keyword != "hypermatrix" or len(args) != 2:
        raise ParseError("expected 'hypermatrix <n> <k>'", source, line)
    n = parse_int(args[0], source, line, "side")
    k = parse_int(args[1], source, line, "order")
    if n < 1 or k < 2:
        raise ParseError(f"need n >= 1 and k >= 2, got n={n}, k={k}", source, line)
    body = lines[1:]
    if len(body) != n**k:
        raise ParseError(f"expected {n**k} entries, found {len(body)}", source, line)
    values = []
    for line, content in body:
        try:
            values.append(parse_scalar(content))
        except ParseError as e:
            raise ParseError(str(e), source, line) from None
    return Hypermatrix.from_flat(n, k, values)


def read_hypermatrix(path: str | Path) -> Hypermatrix:
    return parse_hypermatrix(read_text(path), str(path))


def dump_hypermatrix(m: Hypermatrix) -> str:
    return "\n".join([f"hypermatrix {m.n} {m.k}", *(format_scalar(v) for v in m.flat())]) + "\n"
