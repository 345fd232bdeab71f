import hashlib
import re
from fractions import Fraction

from errors import ParseError
from scalar.polynomial import NAME_PATTERN, Polynomial, format_rational
from scalar.ring import Scalar, demote

_TOKEN_RE = re.compile(
    rf"\s*(?:(?P<num>[0-9]+)|(?P<name>{NAME_PATTERN})|(?P<op>[-+*/^]))"
)


def format_scalar(value: Scalar) -> str:
    """Canonical text: integers, p/q rationals, or polynomials in degree order."""
    if isinstance(value, Polynomial):
        return str(value)
    if isinstance(value, bool):
        return str(int(value))
    return format_rational(value)


def digest(value: Scalar) -> str:
    return hashlib.sha256(format_scalar(value).encode("utf-8")).hexdigest()[:16]


def _tokenize(text: str) -> list[tuple[str, str]]:
    tokens = []
    pos = 0
    stripped = text.rstrip()
    while pos < len(stripped):
        match = _TOKEN_RE.match(stripped, pos)
        if match is None or match.end() == pos:
            raise ParseError(f"unexpected character {stripped[pos:pos + 1]!r} in {text!r}")
        kind = match.lastgroup
        assert kind is not None
        tokens.append((kind, match.group(kind)))
        pos = match.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> tuple[str, str] | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self, kind: str, value: str | None = None) -> str:
        token = self.peek()
        if token is None or token[0] != kind or (value is not None and token[1] != value):
            raise ParseError(f"malformed scalar {self.text!r}")
        self.pos += 1
        return token[1]

    def expression(self) -> Polynomial:
        sign = 1
        token = self.peek()
        if token is not None and token[0] == "op" and token[1] in "+-":
            sign = -1 if token[1] == "-" else 1
            self.pos += 1
        result = self.term() * sign
        while (token := self.peek()) is not None:
            if token[0] != "op" or token[1] not in "+-":
                raise ParseError(f"malformed scalar {self.text!r}")
            self.pos += 1
            term = self.term()
            result = result + term if token[1] == "+" else result - term
        return result

    def term(self) -> Polynomial:
        result = self.factor()
        while (token := self.peek()) == ("op", "*"):
            self.pos += 1
            result = result * self.factor()
        return result

    def factor(self) -> Polynomial:
        token = self.peek()
        if token is None:
            raise ParseError(f"malformed scalar {self.text!r}")
        if token[0] == "num":
            self.pos += 1
            value = Fraction(int(token[1]))
            if self.peek() == ("op", "/"):
                self.pos += 1
                denominator = int(self.take("num"))
                if denominator == 0:
                    raise ParseError(f"zero denominator in {self.text!r}")
                value /= denominator
            return Polynomial.constant(value)
        if token[0] == "name":
            self.pos += 1
            exponent = 1
            if self.peek() == ("op", "^"):
                self.pos += 1
                exponent = int(self.take("num"))
            return Polynomial.variable(token[1]) ** exponent
        raise ParseError(f"malformed scalar {self.text!r}")


def parse_scalar(text: str) -> Scalar:
    """Parse the canonical text form; constants come back as int or Fraction."""
    if not text.strip():
        raise ParseError("empty scalar")
    parser = _Parser(text)
    return demote(parser.expression())
