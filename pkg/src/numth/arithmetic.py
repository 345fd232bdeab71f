import logging
from dataclasses import dataclass
from functools import cache
from math import gcd, prod
from typing import Callable

import numpy as np

from errors import InputError
from lattice import Poset, mobius_matrix
from scalar import Scalar, total

logger = logging.getLogger(__name__)

BUILTIN_FUNCTIONS = ("id", "one", "phi", "mu", "tau", "sigma")


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization by trial division, as (prime, exponent) pairs."""
    if n < 1:
        raise InputError(f"cannot factorize {n}")
    factors = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            factors.append((p, e))
        p += 1
    if n > 1:
        factors.append((n, 1))
    return factors


def divisors(n: int) -> list[int]:
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return sorted(divs)


def euler_phi(n: int) -> int:
    return prod(p ** (e - 1) * (p - 1) for p, e in factorize(n))


@cache
def mobius_mu(n: int) -> int:
    """Classical Mobius function, read off as mu(1, n) on the divisor lattice of n."""
    divs = divisors(n)
    leq = np.array([[b % a == 0 for b in divs] for a in divs], dtype=bool)
    mu = mobius_matrix(Poset.from_relation(leq, [str(d) for d in divs]))
    return int(mu[0, len(divs) - 1])


@dataclass(frozen=True)
class ArithmeticFunction:
    """A function on 1..bound; values[i] holds the value at i + 1."""

    name: str
    bound: int
    values: tuple[Scalar, ...]

    def __post_init__(self):
        if len(self.values) != self.bound:
            raise InputError(f"{self.name} needs {self.bound} values, got {len(self.values)}")

    @classmethod
    def from_callable(
        cls, name: str, bound: int, fn: Callable[[int], Scalar]
    ) -> "ArithmeticFunction":
        return cls(name, bound, tuple(fn(i) for i in range(1, bound + 1)))

    def __call__(self, n: int) -> Scalar:
        if not 1 <= n <= self.bound:
            raise InputError(f"{self.name} is defined on 1..{self.bound}, not at {n}")
        return self.values[n - 1]


def builtin_function(name: str, bound: int) -> ArithmeticFunction:
    match name:
        case "id":
            fn: Callable[[int], Scalar] = lambda n: n
        case "one":
            fn = lambda n: 1
        case "phi":
            fn = euler_phi
        case "mu":
            fn = mobius_mu
        case "tau":
            fn = lambda n: len(divisors(n))
        case "sigma":
            fn = lambda n: sum(divisors(n))
        case _:
            choices = ", ".join(BUILTIN_FUNCTIONS)
            raise InputError(f"unknown arithmetic function {name!r}; choose one of {choices}")
    return ArithmeticFunction.from_callable(name, bound, fn)


def dirichlet_convolution(f: ArithmeticFunction, g: ArithmeticFunction, n: int) -> Scalar:
    """(f * g)(n) = sum of f(d) g(n / d) over d | n."""
    return total(f(d) * g(n // d) for d in divisors(n))


def cesaro_check(f: ArithmeticFunction, m: int, n: int) -> tuple[Scalar, Scalar]:
    """
    Both sides of Cesaro's identity for gcd_m = gcd(m, .).

    Left: sum of mu(n / d) f(gcd(m, d)) over d | n.
    Right: (f * mu)(n) when n divides m, otherwise 0.
    """
    left = total(mobius_mu(n // d) * f(gcd(m, d)) for d in divisors(n))
    if m % n:
        return left, 0
    right = total(f(d) * mobius_mu(n // d) for d in divisors(n))
    return left, right
