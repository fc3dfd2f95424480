"""
Unit tests for integer and cyclotomic polynomials
"""

import pytest
from sympy import Poly, cyclotomic_poly, symbols

from butson.cyclotomic import IntPoly, cyclotomic_polynomial
from butson.cyclotomic.polynomials import divmod_monic, reduce_coefficients
from butson.shared.arithmetic import divisors, euler_phi
from butson.shared.exceptions import InvalidArgumentError

x = symbols("x")


@pytest.mark.unit
class TestIntPoly:
    """Test the integer polynomial type"""

    def test_trailing_zeros_trimmed(self):
        """Test representation is canonical"""
        assert IntPoly([1, 2, 0, 0]) == IntPoly([1, 2])
        assert IntPoly([0, 0]).is_zero()
        assert IntPoly([]).degree == -1

    def test_arithmetic(self):
        """Test multiplication and subtraction"""
        a = IntPoly([1, 1])
        b = IntPoly([-1, 1])
        assert a * b == IntPoly([-1, 0, 1])
        assert a - b == IntPoly([2])

    def test_str(self):
        """Test human-readable form"""
        assert str(IntPoly([1, 0, -1, 0, 1])) == "x^4 - x^2 + 1"
        assert str(IntPoly([-1, 1])) == "x - 1"
        assert str(IntPoly([])) == "0"

    def test_immutable(self):
        """Test attributes cannot be reassigned"""
        with pytest.raises(AttributeError):
            IntPoly([1]).coeffs = (2,)

    def test_divmod_monic(self):
        """Test exact long division"""
        quotient, remainder = divmod_monic(IntPoly([-1, 0, 0, 1]), IntPoly([-1, 1]))
        assert quotient == IntPoly([1, 1, 1])
        assert remainder.is_zero()

    def test_reduce_requires_monic(self):
        """Test reduction by a non-monic modulus raises error"""
        with pytest.raises(InvalidArgumentError, match="monic"):
            reduce_coefficients([1, 2, 3], IntPoly([1, 2]))

    def test_reduce_pads_short_input(self):
        """Test the remainder always has deg(modulus) coefficients"""
        assert reduce_coefficients([7], IntPoly([1, 0, 1])) == [7, 0]


@pytest.mark.unit
class TestCyclotomicPolynomial:
    """Test cyclotomic polynomial construction"""

    def test_small_orders(self):
        """Test known low-order polynomials"""
        assert cyclotomic_polynomial(1) == IntPoly([-1, 1])
        assert cyclotomic_polynomial(2) == IntPoly([1, 1])
        assert cyclotomic_polynomial(4) == IntPoly([1, 0, 1])
        assert cyclotomic_polynomial(5) == IntPoly([1, 1, 1, 1, 1])
        assert cyclotomic_polynomial(12) == IntPoly([1, 0, -1, 0, 1])

    def test_first_non_unit_coefficient(self):
        """Test Phi_105 has a coefficient -2"""
        assert -2 in cyclotomic_polynomial(105).coeffs

    def test_degree_is_totient(self):
        """Test deg Phi_N = phi(N)"""
        for n in range(1, 201):
            assert cyclotomic_polynomial(n).degree == euler_phi(n)

    def test_product_identity(self):
        """Test prod_{d | N} Phi_d = x^N - 1 for N <= 200"""
        for n in range(1, 201):
            product = IntPoly([1])
            for d in divisors(n):
                product = product * cyclotomic_polynomial(d)
            assert product == IntPoly([-1] + [0] * (n - 1) + [1]), n

    def test_matches_sympy(self):
        """Test coefficients agree with an independent implementation"""
        for n in range(1, 121):
            expected = Poly(cyclotomic_poly(n, x), x).all_coeffs()[::-1]
            assert list(cyclotomic_polynomial(n).coeffs) == [int(c) for c in expected], n

    def test_invalid_order(self):
        """Test non-positive orders raise error"""
        for n in (0, -3):
            with pytest.raises(InvalidArgumentError, match="positive integer"):
                cyclotomic_polynomial(n)
