from numth.arithmetic import (
    BUILTIN_FUNCTIONS,
    ArithmeticFunction,
    builtin_function,
    cesaro_check,
    dirichlet_convolution,
    divisors,
    euler_phi,
    factorize,
    mobius_mu,
)
from numth.gcd import (
    divisor_closure,
    divisor_semilattice,
    gcd_closure,
    gcd_grounded_function,
    gcd_hypermatrix,
)

__all__ = [
    "BUILTIN_FUNCTIONS",
    "ArithmeticFunction",
    "builtin_function",
    "cesaro_check",
    "dirichlet_convolution",
    "divisor_closure",
    "divisor_semilattice",
    "divisors",
    "euler_phi",
    "factorize",
    "gcd_closure",
    "gcd_grounded_function",
    "gcd_hypermatrix",
    "mobius_mu",
]
