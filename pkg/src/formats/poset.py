import logging
from pathlib import Path

from errors import ParseError
from formats.lines import directives, parse_int, read_text
from lattice import Poset, poset_from_covers

logger = logging.getLogger(__name__)


def parse_poset(text: str, source: str | None = None) -> Poset:
    """
    Read the line format

        poset <n>
        label <index> <string>
        cover <a> <b>

    Cover endpoints may be labels or indices; labels win when both match.
    """
    n: int | None = None
    labels: dict[int, str] = {}
    covers: list[tuple[int, str, str]] = []
    for line, content in directives(text):
        keyword, *args = content.split()
        match keyword:
            case "poset":
                if n is not None:
                    raise ParseError("duplicate poset header", source, line)
                if len(args) != 1:
                    raise ParseError("expected 'poset <n>'", source, line)
                n = parse_int(args[0], source, line, "size")
                if n < 1:
                    raise ParseError(f"poset size must be positive, got {n}", source, line)
            case "label" | "cover" if n is None:
                raise ParseError(f"'{keyword}' before the poset header", source, line)
            case "label":
                if len(args) != 2:
                    raise ParseError("expected 'label <index> <string>'", source, line)
                index = parse_int(args[0], source, line, "index")
                if not 0 <= index < n:
                    raise ParseError(f"label index {index} is outside 0..{n - 1}", source, line)
                labels[index] = args[1]
            case "cover":
                if len(args) != 2:
                    raise ParseError("expected 'cover <a> <b>'", source, line)
                covers.append((line, args[0], args[1]))
            case _:
                raise ParseError(f"unknown directive {keyword!r}", source, line)
    if n is None:
        raise ParseError("missing 'poset <n>' header", source)

    names = tuple(labels.get(i, str(i)) for i in range(n))
    if len(set(names)) != n:
        raise ParseError("element labels must be distinct", source)
    lookup = {name: i for i, name in enumerate(names)}

    def resolve(token: str, line: int) -> int:
        if token in lookup:
            return lookup[token]
        index = parse_int(token, source, line, "element")
        if not 0 <= index < n:
            raise ParseError(f"element {token} is neither a label nor an index", source, line)
        return index

    pairs = [(resolve(a, line), resolve(b, line)) for line, a, b in covers]
    return poset_from_covers(n, pairs, names)


def read_poset(path: str | Path) -> Poset:
    poset = parse_poset(read_text(path), str(path))
    logger.debug(f"Read a {poset.n}-element poset from {path}")
    return poset


def dump_poset(p: Poset) -> str:
    lines = [f"poset {p.n}"]
    lines += [f"label {i} {name}" for i, name in enumerate(p.labels) if name != str(i)]
    lines += [f"cover {p.labels[a]} {p.labels[b]}" for a, b in p.covers()]
    return "\n".join(lines) + "\n"
