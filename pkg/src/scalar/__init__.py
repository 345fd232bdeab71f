from scalar.polynomial import Polynomial
from scalar.ring import (
    Scalar,
    add,
    demote,
    equals,
    exact_div,
    is_zero,
    mul,
    neg,
    power,
    product,
    sub,
    substitute,
    total,
    variable,
)
from scalar.text import digest, format_scalar, parse_scalar

__all__ = [
    "Polynomial",
    "Scalar",
    "add",
    "demote",
    "digest",
    "equals",
    "exact_div",
    "format_scalar",
    "is_zero",
    "mul",
    "neg",
    "parse_scalar",
    "power",
    "product",
    "sub",
    "substitute",
    "total",
    "variable",
]
