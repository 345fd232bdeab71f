from math import prod

import pytest

from closedform import build_meet_hypermatrix, ligen_fdet, lindstrom_det
from errors import InputError, NotGcdClosed
from hyperdet import SignProduct, det, fdet_bruteforce
from numth import (
    ArithmeticFunction,
    builtin_function,
    cesaro_check,
    dirichlet_convolution,
    divisor_closure,
    divisor_semilattice,
    divisors,
    euler_phi,
    factorize,
    gcd_closure,
    gcd_grounded_function,
    gcd_hypermatrix,
    mobius_mu,
)

BOUND = 30


class TestArithmetic:
    def test_factorize(self):
        assert factorize(1) == []
        assert factorize(12) == [(2, 2), (3, 1)]
        assert factorize(97) == [(97, 1)]
        with pytest.raises(InputError):
            factorize(0)

    def test_divisors(self):
        assert divisors(12) == [1, 2, 3, 4, 6, 12]
        assert divisors(1) == [1]

    def test_euler_phi(self):
        assert [euler_phi(n) for n in range(1, 11)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4]

    def test_mobius_mu(self):
        assert [mobius_mu(n) for n in (1, 2, 3, 4, 6, 12, 30)] == [1, -1, -1, 0, 1, 0, -1]

    def test_gauss_identity(self):
        """phi summed over the divisors of n is n."""
        phi = builtin_function("phi", BOUND)
        one = builtin_function("one", BOUND)
        for n in range(1, BOUND + 1):
            assert dirichlet_convolution(phi, one, n) == n

    def test_mobius_inverts_one(self):
        mu = builtin_function("mu", BOUND)
        one = builtin_function("one", BOUND)
        assert [dirichlet_convolution(mu, one, n) for n in range(1, 8)] == [1, 0, 0, 0, 0, 0, 0]

    def test_tau_and_sigma(self):
        assert builtin_function("tau", 12)(12) == 6
        assert builtin_function("sigma", 12)(12) == 28

    def test_domain(self):
        f = ArithmeticFunction.from_callable("sq", 4, lambda n: n * n)
        assert f(3) == 9
        with pytest.raises(InputError):
            f(5)
        with pytest.raises(InputError):
            f(0)
        with pytest.raises(InputError):
            builtin_function("zeta", 4)
        with pytest.raises(InputError):
            ArithmeticFunction("short", 3, (1, 2))

    @pytest.mark.parametrize("name", ["id", "phi", "one"])
    def test_cesaro(self, name):
        f = builtin_function(name, BOUND)
        for m in range(1, BOUND + 1):
            for n in range(1, BOUND + 1):
                left, right = cesaro_check(f, m, n)
                assert left == right, f"{name}: m={m}, n={n}"


class TestGcdSets:
    def test_closures(self):
        assert gcd_closure([4, 6]) == [2, 4, 6]
        assert gcd_closure([12, 18, 8]) == [2, 4, 6, 8, 12, 18]
        assert divisor_closure([4, 6]) == [1, 2, 3, 4, 6]
        with pytest.raises(InputError):
            gcd_closure([])
        with pytest.raises(InputError):
            divisor_closure([0, 3])

    def test_divisor_semilattice(self, divisors_to_six):
        sl, position = divisors_to_six
        assert sl.labels == ("1", "2", "3", "4", "5", "6")
        assert sl.meet(position[4], position[6]) == position[2]
        assert sl.meet(position[5], position[6]) == position[1]
        assert sl.le(position[3], position[6])
        assert not sl.le(position[4], position[6])

    def test_not_gcd_closed(self):
        with pytest.raises(NotGcdClosed):
            divisor_semilattice([2, 3])

    def test_hypermatrix(self):
        m = gcd_hypermatrix([2, 4, 6], 3, builtin_function("id", 6))
        assert m[(1, 2, 2)] == 2
        assert m[(1, 1, 1)] == 4
        assert m[(0, 1, 2)] == 2

    def test_grounded_matches_hypermatrix(self):
        values = [2, 3, 4]
        F = builtin_function("phi", 4)
        gf = gcd_grounded_function(values, F)
        assert build_meet_hypermatrix(gf, 3).equals(gcd_hypermatrix(values, 3, F))
        with pytest.raises(InputError):
            gcd_grounded_function([2, 2], F)


class TestGcdDeterminants:
    @pytest.mark.parametrize("n", range(1, 9))
    def test_smith(self, n):
        """det(gcd(i, j)) over 1..n is the product of phi(1..n)."""
        values = list(range(1, n + 1))
        F = builtin_function("id", n)
        expected = prod(euler_phi(i) for i in values)
        assert lindstrom_det(gcd_grounded_function(values, F)) == expected
        assert det(gcd_hypermatrix(values, 2, F).entries) == expected

    def test_ligen_on_an_open_set(self):
        """{2, 3, 4} is neither gcd-closed nor factor-closed."""
        values = [2, 3, 4]
        F = builtin_function("id", 4)
        gf = gcd_grounded_function(values, F)
        f = SignProduct(1)
        assert ligen_fdet(gf, 3, f) == fdet_bruteforce(gcd_hypermatrix(values, 3, F), f)
