"""Symbolic layer: psi as a polynomial, derivative ladders, Chebyshev/Dickson."""

import random
from fractions import Fraction

import pytest

from quanta.sequences import QPoint, psi_rec
from quanta.polynomials import (
    BiPoly,
    UniPoly,
    chebyshev_check,
    chebyshev_polynomial,
    dickson_check,
    dickson_polynomial,
    dir_derivative,
    psi_bipoly,
    psi_k_poly,
    verify_derivative_expansion,
    verify_diff_ladder,
    verify_fundamental_psi,
)


class TestBiPoly:
    def test_arithmetic(self):
        a, b = BiPoly.var_a(), BiPoly.var_b()
        p = (a + b) * (a - b)
        assert p == a * a - b * b

    def test_zero_coefficients_dropped(self):
        a = BiPoly.var_a()
        assert not (a - a).coeffs

    def test_derivatives(self):
        a, b = BiPoly.var_a(), BiPoly.var_b()
        p = a * a * b
        assert p.deriv_a() == 2 * a * b
        assert p.deriv_b() == a * a

    def test_evaluate_generic(self):
        a, b = BiPoly.var_a(), BiPoly.var_b()
        p = 2 * a + 3 * b
        assert p.evaluate(Fraction(1, 2), Fraction(1, 3)) == 2

    def test_product_rule_on_samples(self):
        point = QPoint(2, -3)
        a, b = BiPoly.var_a(), BiPoly.var_b()
        p = a * a - 3 * b
        q = b * b + a
        lhs = dir_derivative(p * q, point)
        rhs = dir_derivative(p, point) * q + p * dir_derivative(q, point)
        assert lhs == rhs

    def test_derivative_additive(self):
        point = QPoint(1, 5)
        a, b = BiPoly.var_a(), BiPoly.var_b()
        p, q = a * b, b * b - a
        assert dir_derivative(p + q, point) == dir_derivative(p, point) + dir_derivative(q, point)


class TestUniPoly:
    def test_text_form(self):
        p = UniPoly([1, 0, Fraction(-2, 3)])
        assert p.to_text() == "1 + -2/3*x^2"

    def test_trailing_zeros_trimmed(self):
        assert UniPoly([1, 2, 0, 0]).degree == 1

    def test_horner_evaluation(self):
        p = UniPoly([1, -3, 0, 4])
        assert p.evaluate(Fraction(1, 2)) == 1 - Fraction(3, 2) + Fraction(1, 2)

    def test_coeff_strings(self):
        assert UniPoly([1, 0, Fraction(-2, 3)]).coeff_strings() == ["1", "0", "-2/3"]


class TestPsiBipoly:
    def test_small_cases(self):
        a, b = BiPoly.var_a(), BiPoly.var_b()
        assert psi_bipoly(1) == BiPoly.const(1)
        assert psi_bipoly(2) == -b
        assert psi_bipoly(3) == -a - b

    @pytest.mark.parametrize("n", range(1, 18))
    def test_evaluations_match_recurrence(self, n):
        poly = psi_bipoly(n)
        rng = random.Random(n)
        pairs = [(1, 4), (-2, -5), (0, -1), (3, 7), (-1, -3)]
        while len(pairs) < 25:
            pairs.append((rng.randint(-9, 9), rng.randint(-9, 9)))
        for a, b in pairs:
            assert poly.evaluate(Fraction(a), Fraction(b)) == psi_rec(a, b, n)


class TestDirectionalDerivative:
    def test_linear_form(self):
        p = -BiPoly.var_a() - BiPoly.var_b()
        assert dir_derivative(p, QPoint(1, 1)) == BiPoly.const(-2)

    def test_zero_times_is_identity(self):
        p = psi_bipoly(6)
        assert dir_derivative(p, QPoint(1, 1), 0) == p

    def test_quadratic_point_rejected(self):
        from quanta.scalars import QuadExt, SQRT2

        with pytest.raises(ValueError):
            dir_derivative(psi_bipoly(4), QPoint(QuadExt(1), SQRT2))


class TestFundamentalCollapse:
    def test_unit_point_n4(self):
        assert verify_fundamental_psi(4, QPoint(1, 1))

    def test_trivial_point_n2(self):
        assert verify_fundamental_psi(2, QPoint(0, -1))

    def test_doubling_point_n3(self):
        assert verify_fundamental_psi(3, QPoint(1, -2))

    @pytest.mark.parametrize("n", range(2, 14))
    def test_sweep(self, n):
        assert verify_fundamental_psi(n, QPoint(2, -1))


class TestDiffLadder:
    def test_examples(self):
        assert verify_diff_ladder(5, 0, QPoint(1, 1))
        assert verify_diff_ladder(4, 1, QPoint(1, 0))
        assert verify_diff_ladder(2, 0, QPoint(3, -4))

    def test_range_check(self):
        with pytest.raises(ValueError):
            verify_diff_ladder(4, 2, QPoint(1, 1))

    @pytest.mark.parametrize("n", range(2, 12))
    def test_sweep_with_expansion(self, n):
        point = QPoint(-1, 2)
        for r in range(n // 2):
            assert verify_diff_ladder(n, r, point)
        for k in range(n // 2 + 1):
            assert verify_derivative_expansion(n, k, point)

    def test_second_derivative_matches_expansion_poly(self):
        # two derivative steps of the degree-5 psi polynomial along (1, 1),
        # scaled by 1/2!, reproduce the k=2 expansion coefficient map
        assert verify_derivative_expansion(5, 2, QPoint(1, 1))

    def test_k_poly_top_is_constant(self):
        # top expansion polynomial is the signed psi value at the point
        point = QPoint(1, 1)
        top = psi_k_poly(7, 3, point)
        assert top.is_constant()
        assert top.constant_value() == -psi_rec(1, 1, 7)


class TestChebyshev:
    def test_classical_values(self):
        assert chebyshev_polynomial(3) == UniPoly([0, -3, 0, 4])
        assert chebyshev_polynomial(2) == UniPoly([-1, 0, 2])
        assert chebyshev_polynomial(1) == UniPoly([0, 1])

    @pytest.mark.parametrize("n", range(1, 24))
    def test_check(self, n):
        assert chebyshev_check(n)


class TestDickson:
    def test_classical_values(self):
        assert dickson_polynomial(3, 1) == UniPoly([0, -3, 0, 1])
        assert dickson_polynomial(2, 2) == UniPoly([-4, 0, 1])
        assert dickson_polynomial(1, 9) == UniPoly([0, 1])

    def test_functional_identity(self):
        # D_n(y + alpha/y) = y^n + (alpha/y)^n
        d5 = dickson_polynomial(5, 3)
        y = Fraction(2)
        assert d5.evaluate(y + 3 / y) == y**5 + (Fraction(3) / y) ** 5

    @pytest.mark.parametrize("alpha", [1, -1, 2, -2, 3])
    def test_check(self, alpha):
        for n in range(1, 16):
            assert dickson_check(n, alpha)
