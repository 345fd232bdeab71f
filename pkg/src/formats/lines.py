from pathlib import Path
from typing import Iterator

from errors import InputError, ParseError


def read_text(path: str | Path) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from None


def directives(text: str) -> Iterator[tuple[int, str]]:
    """Non-blank lines with '#' comments stripped, with 1-based line numbers."""
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line


def parse_int(token: str, source: str | None, line: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"expected an integer {what}, got {token!r}", source, line) from None
