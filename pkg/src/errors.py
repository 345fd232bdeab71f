class MeetDetError(Exception):
    """Base class for every error raised by meetdet."""


class InputError(MeetDetError, ValueError):
    """Malformed or inconsistent input. The CLI exits with code 2."""


class ParseError(InputError):
    def __init__(self, message: str, source: str | None = None, line: int | None = None):
        self.source = source
        self.line = line
        where = ""
        if source is not None:
            where = f"{source}:"
        if line is not None:
            where += f"{line}:"
        super().__init__(f"{where} {message}" if where else message)


class CycleDetected(InputError):
    def __init__(self, a: int, b: int):
        self.pair = (a, b)
        super().__init__(f"cover relation has a cycle through {a} and {b}")


class IndexOutOfRange(InputError):
    def __init__(self, index: int, n: int):
        self.index = index
        super().__init__(f"element index {index} is outside 0..{n - 1}")


class NotAPartialOrder(InputError):
    pass


class PreconditionError(MeetDetError, ValueError):
    """A method was applied to an input it does not cover. The CLI exits with code 3."""


class NotAMeetSemilattice(PreconditionError):
    def __init__(self, x: int, y: int):
        self.witness = (x, y)
        super().__init__(f"elements {x} and {y} have no greatest lower bound")


class NotBelowAny(PreconditionError):
    pass


class ArityMismatch(PreconditionError):
    def __init__(self, expected: int, got: int):
        super().__init__(f"F-map arity {got} does not match k-2 = {expected}")


class DimensionMismatch(PreconditionError):
    pass


class ScalarNotDivisible(PreconditionError):
    pass


class EnumerationTooLarge(PreconditionError):
    def __init__(self, terms: int, limit: int):
        self.terms = terms
        self.limit = limit
        super().__init__(
            f"enumeration of {terms} terms exceeds the limit {limit}; pass --force to run it"
        )


class InvalidGrounding(PreconditionError):
    pass


class IndexSetNotWholeLattice(PreconditionError):
    pass


class SubsetNotMeetClosed(PreconditionError):
    pass


class SubsetNotFactorClosed(PreconditionError):
    pass


class GroundingNotDiagonal(PreconditionError):
    pass


class FunctionsNotUniform(PreconditionError):
    pass


class NotGcdClosed(PreconditionError):
    def __init__(self, a: int, b: int, missing: int):
        self.witness = (a, b)
        super().__init__(
            f"gcd({a}, {b}) = {missing} is missing from the set; use gcd_closure first"
        )


class ScalarError(MeetDetError, ArithmeticError):
    pass


class DivisionNotExact(ScalarError):
    def __init__(self, dividend: object, divisor: object):
        super().__init__(f"{divisor} does not divide {dividend} exactly")


class DivisionByZero(ScalarError, ZeroDivisionError):
    pass
