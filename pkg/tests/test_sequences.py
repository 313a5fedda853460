"""Sequence engines: recurrences, triangles, fundamental identities."""

import json
from fractions import Fraction
from math import factorial, prod

import pytest

from quanta.scalars import GOLDEN, ModInt, QuadExt, SQRT2, SQRT5, divides_int
from quanta.sequences import (
    DegeneratePointError,
    KernelPointError,
    QPoint,
    TheoremViolationError,
    falling_factorial,
    fib_lambda_table,
    fibonacci,
    flipped_omega_coupling,
    lambda_from_omega,
    lambda_table,
    lucas,
    omega_closed,
    omega_table,
    omega_top,
    product_identity_check,
    psi_closed,
    psi_expansion_identity_check,
    psi_k_expand,
    psi_point,
    psi_pow2,
    psi_rec,
    rising_product,
    second_fundamental,
    second_fundamental_v2,
    sums_of_powers_check,
)
from quanta.polynomials import dir_derivative, psi_bipoly


class TestPsiRecurrence:
    def test_seeds(self):
        assert psi_rec(9, -7, 0) == 2
        assert psi_rec(9, -7, 1) == 1

    def test_hand_step(self):
        assert psi_rec(1, 4, 2) == -4

    def test_lucas_point(self):
        assert psi_rec(-1, -3, 4) == 7  # L(4)

    def test_fibonacci_point(self):
        assert psi_rec(1, -3, 5) == 5  # F(5)

    def test_negative_n_rejected(self):
        with pytest.raises(ValueError):
            psi_rec(1, 1, -1)

    def test_generic_over_fractions(self):
        assert psi_rec(Fraction(1, 2), Fraction(1, 3), 2) == Fraction(-1, 3)

    def test_point_wrapper_quadratic(self):
        assert psi_point(QPoint(QuadExt(1), SQRT2), 2) == -SQRT2


class TestPsiClosed:
    def test_value_at_unit_point(self):
        assert psi_closed(1, 1, 5) == 1

    def test_signed_parity_point(self):
        # recurrence: 0, 1, -2, -3, 2; closed form of the (1, 2) table agrees
        assert psi_closed(1, 2, 4) == 2
        assert psi_rec(1, 2, 4) == 2

    def test_fibonacci_cross_check(self):
        assert psi_closed(1, -3, 5) == 5

    @pytest.mark.parametrize("n", range(1, 40))
    def test_matches_recurrence(self, n):
        assert psi_closed(3, -5, n) == psi_rec(3, -5, n)


class TestPsiPow2:
    def test_doubling_chain(self):
        assert psi_pow2(1, 4, 1) == -4
        assert psi_pow2(1, 4, 4) == 37634

    def test_modular_chain(self):
        result = psi_pow2(1, 4, 4, modulus=31)
        assert isinstance(result, ModInt)
        assert result == 0

    def test_agrees_with_recurrence(self):
        for s in range(1, 7):
            assert psi_pow2(3, -2, s) == psi_rec(3, -2, 1 << s)

    def test_bad_modulus(self):
        with pytest.raises(ValueError):
            psi_pow2(1, 4, 3, modulus=1)
        with pytest.raises(ValueError):
            psi_pow2(1, 4, 0)


class TestProductIdentity:
    def test_doubling_case(self):
        assert product_identity_check(1, 4, 8, 8)

    def test_trivial_case(self):
        assert product_identity_check(5, 9, 0, 0)

    def test_lucas_case(self):
        assert product_identity_check(-1, -3, 5, 3)

    def test_order_precondition(self):
        with pytest.raises(ValueError):
            product_identity_check(1, 1, 2, 3)


class TestOmegaTable:
    def test_hand_levels_n7(self):
        table = omega_table(QPoint(1, 1), 7)
        assert [table.entry(r, 1) for r in range(3)] == [-8, -5, -2]
        assert [table.entry(r, 2) for r in range(2)] == [30, 0]
        assert table.entry(0, 3) == 120
        assert table.top() == 120

    def test_hand_levels_n6(self):
        table = omega_table(QPoint(1, 1), 6)
        assert [table.entry(r, 1) for r in range(3)] == [-5, -2, 1]
        assert [table.entry(r, 2) for r in range(2)] == [0, -12]
        assert table.top() == 120

    def test_seed_row(self):
        table = omega_table(QPoint(-2, -5), 9)
        assert all(table.entry(r, 0) == 1 for r in range(5))

    def test_rolling_matches_full(self):
        for n in (5, 8, 13):
            assert omega_top(QPoint(2, 3), n) == omega_table(QPoint(2, 3), n).top()

    def test_modular_consistency(self):
        point = QPoint(2, -3)
        for n in (6, 9, 12):
            exact = omega_table(point, n)
            modular = omega_table(point, n, modulus=7)
            for k in range(n // 2 + 1):
                for r in range(n // 2 - k + 1):
                    want = int(exact.entry(r, k).a) % 7
                    assert modular.entry(r, k) == ModInt(want, 7)

    def test_quadratic_point(self):
        # top value at (1, sqrt2), n=6 equals ff(6) * psi = 60 * sqrt2
        table = omega_table(QPoint(QuadExt(1), SQRT2), 6)
        assert table.top() == 60 * SQRT2

    def test_golden_point_scale(self):
        point = QPoint(QuadExt(1), GOLDEN - 1)
        assert omega_top(point, 8) == falling_factorial(8) * psi_point(point, 8)

    def test_out_of_range_entry(self):
        table = omega_table(QPoint(1, 1), 7)
        with pytest.raises(IndexError):
            table.entry(2, 2)

    def test_top_only_blocks_entry_access(self):
        from quanta.sequences import _build_omega, as_point

        rolled = _build_omega(as_point((1, 1)), 7, None, keep=False)
        with pytest.raises(IndexError):
            rolled.entry(0, 1)

    def test_json_round_trip(self):
        table = omega_table(QPoint(1, 1), 5)
        payload = json.loads(table.to_json())
        assert payload["n"] == 5
        assert payload["point"] == ["1", "1"]
        assert payload["modulus"] is None
        assert [0, 2, "12"] in payload["entries"]

    def test_stable_column(self):
        table = omega_table(QPoint(1, -2), 8)
        assert table.stable_column() == [
            QuadExt(omega_closed((1, -2), 0, k, 8)) for k in range(5)
        ]


class TestOmegaClosed:
    def test_even_point_table(self):
        assert omega_closed((1, -2), 0, 3, 6) == 120

    def test_falling_factorial_point(self):
        assert omega_closed((0, -1), 0, 3, 7) == 120

    def test_empty_product(self):
        assert omega_closed((1, 2), 4, 0, 11) == 1

    def test_unsupported_point(self):
        with pytest.raises(ValueError):
            omega_closed((1, 1), 0, 1, 6)

    def test_out_of_triangle(self):
        with pytest.raises(ValueError):
            omega_closed((1, -2), 2, 3, 6)

    @pytest.mark.parametrize("point_id", [(1, -2), (1, 2), (0, -1)])
    def test_matches_table(self, point_id):
        for n in range(2, 16):
            table = omega_table(QPoint(*point_id), n)
            for k in range(n // 2 + 1):
                for r in range(n // 2 - k + 1):
                    assert table.entry(r, k) == omega_closed(point_id, r, k, n)


class TestLambdaTable:
    def test_seeds_n5(self):
        table = lambda_table(QPoint(1, 1), 5)
        assert [table.entry(r, 0) for r in range(3)] == [1, -5, 5]

    def test_symbolic_level_one(self):
        # lambda_0(1) = -alpha - 2 beta, checked at two rational points
        for alpha, beta in [(1, 1), (2, -3)]:
            table = lambda_table(QPoint(alpha, beta), 5)
            assert table.entry(0, 1) == -alpha - 2 * beta

    def test_unit_point_value(self):
        assert lambda_table(QPoint(1, 1), 5).entry(0, 1) == -3

    def test_factorial_divisibility(self):
        table = lambda_table(QPoint(3, -2), 12)
        for k in range(2, 7):
            for r in range(6 - k + 1):
                assert divides_int(factorial(k), table.entry(r, k))

    def test_bridge_from_omega(self):
        for point in [QPoint(1, 1), QPoint(-2, 3), QPoint(QuadExt(1), SQRT2)]:
            for n in (5, 7, 10):
                table = lambda_table(point, n)
                otable = omega_table(point, n)
                for k in range(n // 2 + 1):
                    for r in range(n // 2 - k + 1):
                        assert lambda_from_omega(point, n, r, k, otable) == table.entry(r, k)

    def test_bridge_level_one_explicit(self):
        # factor 1/2 times omega_0(1) = -2 alpha - 4 beta
        assert lambda_from_omega(QPoint(1, 1), 5, 0, 1) == -3


class TestPsiKExpand:
    def test_k0_reduces_to_psi(self):
        value, _ = psi_k_expand(1, 4, QPoint(1, 1), 9, 0)
        assert value == psi_rec(1, 4, 9)

    def test_top_k_reduces_to_point_psi(self):
        for n in (6, 9):
            K = n // 2
            value, _ = psi_k_expand(1, 4, QPoint(1, 1), n, K)
            expected = psi_point(QPoint(1, 1), n)
            assert value == (expected if K % 2 == 0 else -expected)

    def test_matches_directional_derivative(self):
        n, k = 5, 1
        point = QPoint(1, 1)
        value, _ = psi_k_expand(1, 4, point, n, k)
        deriv = dir_derivative(psi_bipoly(n), point, k)
        expected = -deriv.evaluate(Fraction(1), Fraction(4))
        assert value == expected

    def test_integral_coefficients(self):
        _, coeffs = psi_k_expand(1, 4, QPoint(-2, 3), 11, 2)
        assert all(c.is_integral for c in coeffs)

    def test_degenerate_point_rejected(self):
        with pytest.raises(DegeneratePointError):
            psi_k_expand(1, 2, QPoint(1, 2), 6, 1)

    def test_k_out_of_range(self):
        with pytest.raises(ValueError):
            psi_k_expand(1, 4, QPoint(1, 1), 6, 4)


class TestSecondFundamental:
    def test_unit_point(self):
        assert second_fundamental(QPoint(1, 1), 7) == 1

    def test_doubling_point(self):
        assert second_fundamental(QPoint(1, -2), 6) == 2

    def test_trivial_point(self):
        for n in (4, 9, 14):
            assert second_fundamental(QPoint(0, -1), n) == 1

    def test_violation_reported_under_fault(self):
        with flipped_omega_coupling():
            with pytest.raises(TheoremViolationError):
                second_fundamental(QPoint(1, 1), 7)

    def test_v2_unit_point(self):
        assert second_fundamental_v2(QPoint(1, 1), 3) == 60
        assert second_fundamental_v2(QPoint(1, 1), 3) == rising_product(3)

    def test_v2_trivial_point(self):
        assert second_fundamental_v2(QPoint(0, -1), 2) == 6

    def test_v2_kernel_point(self):
        with pytest.raises(KernelPointError):
            second_fundamental_v2(QPoint(1, 0), 1)  # psi(1,0,2) = 0


class TestSumsOfPowers:
    def test_odd_case(self):
        assert sums_of_powers_check(2, 1, 3)

    def test_even_case(self):
        assert sums_of_powers_check(1, 1, 2)

    def test_degenerate_pair(self):
        assert sums_of_powers_check(1, 0, 5)

    def test_odd_antisymmetric_rejected(self):
        with pytest.raises(ValueError):
            sums_of_powers_check(2, -2, 3)

    @pytest.mark.parametrize("x,y", [(3, 2), (4, -1), (5, 5)])
    def test_sweep(self, x, y):
        assert all(sums_of_powers_check(x, y, n) for n in range(1, 15))


class TestExpansionIdentity:
    def test_reference_case(self):
        assert psi_expansion_identity_check(1, 4, QPoint(1, 1), 2, 1, 4)

    def test_two_term_case(self):
        assert psi_expansion_identity_check(2, -1, QPoint(1, -2), 3, 1, 2)

    def test_zero_alpha_point(self):
        assert psi_expansion_identity_check(1, 0, QPoint(0, -1), 1, 1, 6)

    def test_degenerate_rejected(self):
        with pytest.raises(DegeneratePointError):
            psi_expansion_identity_check(2, 4, QPoint(1, 2), 1, 1, 4)


class TestFibTable:
    def test_hand_dp_n5(self):
        table, value = fib_lambda_table(5)
        assert table.entry(0, 1) == 10
        assert table.entry(1, 1) == 5
        assert table.top() == 60
        assert value == 5

    def test_smallest_case(self):
        _, value = fib_lambda_table(2)
        assert value == 1

    def test_tenth(self):
        assert fib_lambda_table(10)[1] == 55

    @pytest.mark.parametrize("n", range(2, 40))
    def test_matches_fibonacci(self, n):
        assert fib_lambda_table(n)[1] == fibonacci(n)


class TestHelpers:
    def test_falling_factorial(self):
        assert falling_factorial(7) == 6 * 5 * 4
        assert falling_factorial(1) == 1

    def test_rising_product(self):
        assert rising_product(3) == 3 * 4 * 5

    def test_fib_lucas(self):
        assert [fibonacci(n) for n in range(7)] == [0, 1, 1, 2, 3, 5, 8]
        assert [lucas(n) for n in range(7)] == [2, 1, 3, 4, 7, 11, 18]

    def test_seq_params(self):
        from quanta.sequences import SeqParams

        params = SeqParams(1, 4, 9)
        assert params.delta_n == 1
        assert params.psi() == psi_rec(1, 4, 9)
        with pytest.raises(ValueError):
            SeqParams(0, 0, 3)
        with pytest.raises(AttributeError):
            params.n = 4

    def test_qpoint_rejects_zero(self):
        with pytest.raises(ValueError):
            QPoint(0, 0)

    def test_qpoint_mixed_radicand(self):
        with pytest.raises(Exception):
            QPoint(SQRT2, SQRT5)
