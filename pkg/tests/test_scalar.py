from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from errors import DivisionByZero, DivisionNotExact, ParseError
from scalar import (
    Polynomial,
    demote,
    digest,
    equals,
    exact_div,
    format_scalar,
    is_zero,
    parse_scalar,
    power,
    product,
    substitute,
    total,
    variable,
)

x = variable("x")
y = variable("y")

coefficients = st.fractions(min_value=-5, max_value=5, max_denominator=4)
polynomials = st.lists(
    st.tuples(coefficients, st.integers(0, 2), st.integers(0, 2)), max_size=4
).map(lambda terms: total(c * x**i * y**j for c, i, j in terms))
scalars = st.one_of(st.integers(-20, 20), coefficients, polynomials)


class TestPolynomialText:
    """Canonical printing and parsing of scalars."""

    def test_canonical_order(self):
        """Higher degree first, then by name with larger exponents first."""
        assert str(y**2 + x * y + x**2) == "x^2 + x*y + y^2"
        assert str(1 - x + 3 * x**2 * y) == "3*x^2*y - x + 1"

    def test_format_rationals(self):
        """Rationals print as p/q and integers as plain digits."""
        assert format_scalar(Fraction(-3, 6)) == "-1/2"
        assert format_scalar(7) == "7"
        assert format_scalar(Polynomial()) == "0"
        assert format_scalar(x / 2) == "1/2*x"

    def test_parse_mixed_terms(self):
        """Integer, rational and monomial terms in one expression."""
        value = parse_scalar("3*x^2*y - 1/2")
        assert value == 3 * x**2 * y - Fraction(1, 2)
        assert format_scalar(value) == "3*x^2*y - 1/2"

    def test_parse_demotes_constants(self):
        """Constants come back as int or Fraction."""
        assert parse_scalar("4/2") == 2 and type(parse_scalar("4/2")) is int
        assert parse_scalar("6/4") == Fraction(3, 2)
        assert type(parse_scalar("x - x + 5")) is int

    def test_parse_names_with_parentheses(self):
        """Indeterminates such as F2(1) and Frak(12_12) are single names."""
        value = parse_scalar("Frak(12_12)*F1(1)*F2(2)")
        assert value.variables() == frozenset({"Frak(12_12)", "F1(1)", "F2(2)"})

    @pytest.mark.parametrize("text", ["", "3 +", "1/0", "x^y", "2 $ 3", "* x"])
    def test_parse_errors(self, text):
        """Malformed text raises ParseError."""
        with pytest.raises(ParseError):
            parse_scalar(text)

    @given(polynomials)
    def test_print_parse_round_trip(self, p):
        """Printing then parsing gives back an equal scalar."""
        assert equals(parse_scalar(format_scalar(p)), p)

    def test_digest_is_stable(self):
        """Equal values share a digest regardless of how they were built."""
        assert digest(x * (x + 1)) == digest(x**2 + x)
        assert digest(Polynomial.constant(3)) == digest(3)
        assert len(digest(5)) == 16


class TestRingAxioms:
    """Ring laws across the int, Fraction and Polynomial variants."""

    @given(scalars, scalars)
    def test_commutative(self, a, b):
        assert equals(a + b, b + a)
        assert equals(a * b, b * a)

    @given(scalars, scalars, scalars)
    def test_associative(self, a, b, c):
        assert equals((a + b) + c, a + (b + c))
        assert equals((a * b) * c, a * (b * c))

    @given(scalars, scalars, scalars)
    def test_distributive(self, a, b, c):
        assert equals(a * (b + c), a * b + a * c)

    @given(scalars)
    def test_additive_inverse(self, a):
        assert is_zero(a - a)
        assert is_zero(a + (-a))

    @given(polynomials, polynomials)
    def test_exact_division_of_products(self, a, b):
        """a*b divided by a nonzero b gives back a."""
        if is_zero(b):
            return
        assert equals(exact_div(a * b, b), a)


class TestExactDivision:
    """exact_div on every variant."""

    def test_integer_division(self):
        assert exact_div(12, -4) == -3
        with pytest.raises(DivisionNotExact):
            exact_div(7, 2)

    def test_rational_division(self):
        assert exact_div(Fraction(1, 2), 3) == Fraction(1, 6)

    def test_polynomial_division(self):
        """(x^2 - y^2) / (x - y) = x + y."""
        assert exact_div(x**2 - y**2, x - y) == x + y

    def test_polynomial_remainder(self):
        with pytest.raises(DivisionNotExact):
            exact_div(x**2 + 1, x)

    def test_division_by_zero(self):
        """Zero divisors raise an error that is also a ZeroDivisionError."""
        with pytest.raises(DivisionByZero):
            exact_div(6, 0)
        with pytest.raises(ZeroDivisionError):
            exact_div(x, Polynomial())


class TestHelpers:
    def test_substitute_demotes(self):
        """Binding every indeterminate yields a plain number."""
        assert substitute(x * y + 1, {"x": 2, "y": 3}) == 7
        assert type(substitute(x * y + 1, {"x": 2, "y": 3})) is int

    def test_partial_substitution(self):
        assert substitute(x * y + 1, {"x": y}) == y**2 + 1

    def test_product_short_circuits(self):
        """A zero factor stops the product."""
        assert product(iter([2, 0, x])) == 0
        assert product([]) == 1

    def test_power_and_demote(self):
        assert power(x + 1, 2) == x**2 + 2 * x + 1
        assert demote(Polynomial.constant(Fraction(4, 2))) == 2
        assert demote(Fraction(1, 3)) == Fraction(1, 3)

    def test_constant_polynomial_equality(self):
        assert Polynomial.constant(3) == 3
        assert hash(Polynomial.constant(3)) == hash(3)
        assert x != 0

    def test_invalid_name(self):
        with pytest.raises(ValueError):
            Polynomial.variable("2x")
