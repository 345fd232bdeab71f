import re
from fractions import Fraction
from typing import Iterator, Mapping

from errors import DivisionByZero, DivisionNotExact

# A monomial is a tuple of (name, exponent) pairs sorted by name, exponents > 0.
Monomial = tuple[tuple[str, int], ...]

NAME_PATTERN = r"[A-Za-z_][A-Za-z0-9_()]*"
_NAME_RE = re.compile(rf"{NAME_PATTERN}\Z")

ONE: Monomial = ()


def is_valid_name(name: str) -> bool:
    return bool(_NAME_RE.match(name))


def _monomial_product(left: Monomial, right: Monomial) -> Monomial:
    if not left:
        return right
    if not right:
        return left
    exps = dict(left)
    for name, exp in right:
        exps[name] = exps.get(name, 0) + exp
    return tuple(sorted(exps.items()))


def _monomial_quotient(mono: Monomial, divisor: Monomial) -> Monomial | None:
    """Return mono / divisor, or None when divisor does not divide mono."""
    exps = dict(mono)
    for name, exp in divisor:
        left = exps.get(name, 0) - exp
        if left < 0:
            return None
        if left == 0:
            del exps[name]
        else:
            exps[name] = left
    return tuple(sorted(exps.items()))


def _degree(mono: Monomial) -> int:
    return sum(exp for _, exp in mono)


def _print_key(mono: Monomial) -> tuple:
    # higher total degree first; ties by name, larger exponent first
    return (-_degree(mono), tuple((name, -exp) for name, exp in mono))


def format_rational(value: Fraction | int) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _format_term(mono: Monomial, coef: Fraction) -> str:
    if not mono:
        return format_rational(coef)
    body = "*".join(name if exp == 1 else f"{name}^{exp}" for name, exp in mono)
    if coef == 1:
        return body
    if coef == -1:
        return f"-{body}"
    return f"{format_rational(coef)}*{body}"


class Polynomial:
    """
    Sparse multivariate polynomial with rational coefficients.

    Instances are immutable. Zero coefficients are never stored, so the zero
    polynomial has no terms. Arithmetic accepts int and Fraction operands.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, int | Fraction] | None = None):
        cleaned: dict[Monomial, Fraction] = {}
        for mono, coef in (terms or {}).items():
            key = tuple(sorted((name, exp) for name, exp in mono if exp))
            cleaned[key] = cleaned.get(key, Fraction(0)) + Fraction(coef)
        self._terms: dict[Monomial, Fraction] = {
            mono: coef for mono, coef in cleaned.items() if coef
        }

    @classmethod
    def variable(cls, name: str) -> "Polynomial":
        if not is_valid_name(name):
            raise ValueError(f"invalid indeterminate name: {name!r}")
        return cls({((name, 1),): 1})

    @classmethod
    def constant(cls, value: int | Fraction) -> "Polynomial":
        return cls({ONE: value})

    @classmethod
    def coerce(cls, value: "int | Fraction | Polynomial") -> "Polynomial":
        if isinstance(value, Polynomial):
            return value
        if isinstance(value, (int, Fraction)):
            return cls.constant(value)
        raise TypeError(f"cannot use {type(value).__name__} as a polynomial")

    def items(self) -> Iterator[tuple[Monomial, Fraction]]:
        """Terms in canonical printing order."""
        for mono in sorted(self._terms, key=_print_key):
            yield mono, self._terms[mono]

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not mono for mono in self._terms)

    def constant_term(self) -> Fraction:
        return self._terms.get(ONE, Fraction(0))

    def variables(self) -> frozenset[str]:
        return frozenset(name for mono in self._terms for name, _ in mono)

    def degree(self) -> int:
        return max((_degree(mono) for mono in self._terms), default=0)

    # Arithmetic

    def __add__(self, other: object) -> "Polynomial":
        if not isinstance(other, (int, Fraction, Polynomial)):
            return NotImplemented
        rhs = Polynomial.coerce(other)
        terms = dict(self._terms)
        for mono, coef in rhs._terms.items():
            terms[mono] = terms.get(mono, Fraction(0)) + coef
        return Polynomial(terms)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial({mono: -coef for mono, coef in self._terms.items()})

    def __sub__(self, other: object) -> "Polynomial":
        if not isinstance(other, (int, Fraction, Polynomial)):
            return NotImplemented
        return self + (-Polynomial.coerce(other))

    def __rsub__(self, other: object) -> "Polynomial":
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return Polynomial.coerce(other) - self

    def __mul__(self, other: object) -> "Polynomial":
        if not isinstance(other, (int, Fraction, Polynomial)):
            return NotImplemented
        rhs = Polynomial.coerce(other)
        terms: dict[Monomial, Fraction] = {}
        for lmono, lcoef in self._terms.items():
            for rmono, rcoef in rhs._terms.items():
                mono = _monomial_product(lmono, rmono)
                terms[mono] = terms.get(mono, Fraction(0)) + lcoef * rcoef
        return Polynomial(terms)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        if exponent < 0:
            raise ValueError("negative powers are not polynomials")
        result = Polynomial.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __truediv__(self, other: object) -> "Polynomial":
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        if other == 0:
            raise DivisionByZero("polynomial division by zero")
        return Polynomial(
            {mono: coef / other for mono, coef in self._terms.items()}
        )

    def exact_div(self, other: "int | Fraction | Polynomial") -> "Polynomial":
        """
        Divide by a polynomial known to divide self.

        Uses graded-lex leading terms. When the division leaves a remainder the
        leading term of the remainder stops being divisible and
        DivisionNotExact is raised.
        """
        divisor = Polynomial.coerce(other)
        if divisor.is_zero():
            raise DivisionByZero("polynomial division by zero")
        names = sorted(self.variables() | divisor.variables())

        def order(mono: Monomial) -> tuple[int, tuple[int, ...]]:
            exps = dict(mono)
            return _degree(mono), tuple(exps.get(name, 0) for name in names)

        lead = max(divisor._terms, key=order)
        lead_coef = divisor._terms[lead]
        quotient: dict[Monomial, Fraction] = {}
        remainder = self
        while not remainder.is_zero():
            mono = max(remainder._terms, key=order)
            factor = _monomial_quotient(mono, lead)
            if factor is None:
                raise DivisionNotExact(self, divisor)
            coef = remainder._terms[mono] / lead_coef
            quotient[factor] = coef
            remainder = remainder - Polynomial({factor: coef}) * divisor
        return Polynomial(quotient)

    def substitute(
        self, bindings: "Mapping[str, int | Fraction | Polynomial]"
    ) -> "Polynomial":
        result = Polynomial()
        for mono, coef in self._terms.items():
            term: Polynomial = Polynomial.constant(coef)
            for name, exp in mono:
                if name in bindings:
                    term = term * Polynomial.coerce(bindings[name]) ** exp
                else:
                    term = term * Polynomial({((name, exp),): 1})
            result = result + term
        return result

    # Comparison

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant_term() == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_constant():
            return hash(self.constant_term())
        return hash(frozenset(self._terms.items()))

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        text = ""
        for mono, coef in self.items():
            term = _format_term(mono, coef)
            if not text:
                text = term
            elif term.startswith("-"):
                text += f" - {term[1:]}"
            else:
                text += f" + {term}"
        return text

    def __repr__(self) -> str:
        return f"Polynomial('{self}')"
