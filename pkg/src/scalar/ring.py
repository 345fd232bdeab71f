import logging
from fractions import Fraction
from typing import Iterable, Mapping, TypeAlias

from errors import DivisionByZero, DivisionNotExact
from scalar.polynomial import Polynomial

Scalar: TypeAlias = int | Fraction | Polynomial

logger = logging.getLogger(__name__)


def add(a: Scalar, b: Scalar) -> Scalar:
    return a + b


def sub(a: Scalar, b: Scalar) -> Scalar:
    return a - b


def mul(a: Scalar, b: Scalar) -> Scalar:
    return a * b


def neg(a: Scalar) -> Scalar:
    return -a


def power(a: Scalar, exponent: int) -> Scalar:
    if isinstance(a, Polynomial):
        return a**exponent
    if exponent < 0:
        raise ValueError("negative powers are not supported")
    return a**exponent


def is_zero(a: Scalar) -> bool:
    return a == 0


def equals(a: Scalar, b: Scalar) -> bool:
    """Equality after normalization: 2/4 equals 1/2, a constant polynomial equals its value."""
    return bool(a == b)


def total(values: Iterable[Scalar]) -> Scalar:
    result: Scalar = 0
    for value in values:
        result = result + value
    return result


def product(values: Iterable[Scalar]) -> Scalar:
    result: Scalar = 1
    for value in values:
        result = result * value
        if is_zero(result):
            return result
    return result


def exact_div(a: Scalar, b: Scalar) -> Scalar:
    """Quotient q with q*b == a. Integers must divide exactly; rationals always do."""
    if is_zero(b):
        raise DivisionByZero(f"division of {a} by zero")
    if isinstance(a, Polynomial) or isinstance(b, Polynomial):
        return Polynomial.coerce(a).exact_div(b)
    if isinstance(a, int) and isinstance(b, int):
        quotient, remainder = divmod(a, b)
        if remainder:
            raise DivisionNotExact(a, b)
        return quotient
    return Fraction(a) / Fraction(b)


def demote(a: Scalar) -> Scalar:
    """Return the least general variant holding the same value."""
    if isinstance(a, Polynomial):
        if not a.is_constant():
            return a
        a = a.constant_term()
    if isinstance(a, Fraction) and a.denominator == 1:
        return a.numerator
    return a


def substitute(p: Scalar, bindings: Mapping[str, Scalar]) -> Scalar:
    if not isinstance(p, Polynomial):
        return p
    result = p.substitute(bindings)
    if result.is_constant():
        return demote(result)
    return result


def variable(name: str) -> Polynomial:
    return Polynomial.variable(name)
