"""Exact scalar semantics: quadratic elements, residues, text round-trip."""

from fractions import Fraction

import pytest

from quanta.scalars import (
    GOLDEN,
    LocalizationError,
    ModInt,
    QuadExt,
    RingMismatchError,
    SQRT2,
    SQRT5,
    ScalarParseError,
    divides_int,
    exact_div,
    format_scalar,
    is_square_free,
    parse_scalar,
    reduce_mod,
)


class TestQuadExt:
    def test_square_expansion(self):
        x = QuadExt(1, 1, 2)
        assert x * x == QuadExt(3, 2, 2)

    def test_multiplicative_identity(self):
        x = QuadExt(Fraction(2, 3), Fraction(-5, 7), 3)
        assert x * QuadExt(1) == x
        assert 1 * x == x

    def test_conjugate_product(self):
        x = QuadExt(1, 1, 5)
        assert x * x.conjugate() == QuadExt(-4)
        assert x * x.conjugate() == -4

    def test_radicand_normalization(self):
        assert QuadExt(3, 5, 0) == QuadExt(3)
        assert QuadExt(3, 5, 1) == QuadExt(8)
        assert QuadExt(2, 0, 7).d == 0

    def test_square_free_validation(self):
        with pytest.raises(ValueError):
            QuadExt(0, 1, 4)
        with pytest.raises(ValueError):
            QuadExt(0, 1, 12)
        assert is_square_free(30)
        assert not is_square_free(18)

    def test_radicand_mismatch(self):
        with pytest.raises(RingMismatchError):
            SQRT2 * QuadExt(0, 1, 3)
        with pytest.raises(RingMismatchError):
            SQRT2 + QuadExt(0, 1, 5)

    def test_rational_coerces_into_any_radicand(self):
        assert QuadExt(2) + SQRT2 == QuadExt(2, 1, 2)
        assert QuadExt(Fraction(1, 2)) * SQRT5 == QuadExt(0, Fraction(1, 2), 5)

    def test_pow(self):
        x = 1 + SQRT2
        assert x**0 == 1
        assert x**2 == 3 + 2 * SQRT2
        assert x**5 == (x * x) * (x * x) * x
        with pytest.raises(ValueError):
            x ** (-1)

    def test_golden_ratio_identity(self):
        # phi^2 = phi + 1
        assert GOLDEN * GOLDEN == GOLDEN + 1

    def test_norm_and_inverse(self):
        x = QuadExt(1, -1, 2)
        assert x.norm() == -1
        assert x * x.inverse() == 1
        with pytest.raises(ZeroDivisionError):
            QuadExt(0).inverse()

    def test_integral_flags(self):
        assert QuadExt(3, -2, 5).is_integral
        assert not GOLDEN.is_integral
        assert QuadExt(4).is_rational
        assert not SQRT2.is_rational

    def test_hash_consistency_with_int(self):
        assert hash(QuadExt(7)) == hash(7)
        assert QuadExt(7) == 7

    def test_immutable(self):
        with pytest.raises(AttributeError):
            SQRT2.a = Fraction(1)


class TestDivisibility:
    def test_plain_integers(self):
        assert divides_int(5, QuadExt(120))
        assert divides_int(5, QuadExt(0))
        assert not divides_int(3, QuadExt(4, 6, 2))

    def test_denominator_localization(self):
        assert divides_int(5, QuadExt(Fraction(10, 3)))
        with pytest.raises(LocalizationError):
            divides_int(5, QuadExt(Fraction(1, 5)))

    def test_golden_components(self):
        # (5 + 5 sqrt5)/2 is 5 times an element with 5-coprime denominator
        x = QuadExt(Fraction(5, 2), Fraction(5, 2), 5)
        assert divides_int(5, x)
        assert not divides_int(3, x)

    def test_modulus_bound(self):
        with pytest.raises(ValueError):
            divides_int(1, QuadExt(6))

    def test_reduce_mod(self):
        assert reduce_mod(QuadExt(7, 12, 2), 5) == (2, 2)
        assert reduce_mod(QuadExt(Fraction(1, 2)), 7) == (4, 0)
        with pytest.raises(LocalizationError):
            reduce_mod(GOLDEN, 4)


class TestExactDiv:
    def test_integers(self):
        assert exact_div(QuadExt(120), QuadExt(60)) == 2

    def test_self_division(self):
        x = QuadExt(3, -4, 7)
        assert exact_div(x, x) == 1

    def test_conjugate_route(self):
        assert exact_div(QuadExt(-4), QuadExt(1, -1, 5)) == QuadExt(1, 1, 5)

    def test_zero_divisor(self):
        with pytest.raises(ZeroDivisionError):
            exact_div(QuadExt(1), QuadExt(0))


class TestModInt:
    def test_square_of_minus_one(self):
        x = ModInt(30, 31)
        assert (x * x).residue == 1

    def test_doubling_step(self):
        x = ModInt(14, 31)
        assert (x * x - 2).residue == 8

    def test_pow(self):
        assert (ModInt(2, 31) ** 5).residue == 1

    def test_modulus_mismatch(self):
        with pytest.raises(RingMismatchError):
            ModInt(1, 5) + ModInt(1, 7)

    def test_int_coercion(self):
        assert 3 * ModInt(11, 31) == ModInt(2, 31)
        assert ModInt(30, 31) + 1 == 0

    def test_modulus_bound(self):
        with pytest.raises(ValueError):
            ModInt(0, 1)


class TestTextForm:
    @pytest.mark.parametrize(
        "text",
        ["0", "3", "-1/2", "-1-1*sqrt(2)", "1/2+1/2*sqrt(5)", "2*sqrt(3)", "-7/3+2/5*sqrt(7)"],
    )
    def test_round_trip(self, text):
        assert format_scalar(parse_scalar(text)) == text

    def test_parse_variants(self):
        assert parse_scalar("sqrt(2)") == SQRT2
        assert parse_scalar("-sqrt(2)") == -SQRT2
        assert parse_scalar(" 1 + 1*sqrt(2) ") == 1 + SQRT2
        assert parse_scalar("3/6") == QuadExt(Fraction(1, 2))

    def test_format_examples(self):
        assert format_scalar(QuadExt(0, -1, 2)) == "-1*sqrt(2)"
        assert format_scalar(GOLDEN) == "1/2+1/2*sqrt(5)"
        assert format_scalar(QuadExt(-1, -1, 2)) == "-1-1*sqrt(2)"

    def test_parse_errors_carry_position(self):
        with pytest.raises(ScalarParseError) as err:
            parse_scalar("1 + + 2")
        assert err.value.pos >= 0
        with pytest.raises(ScalarParseError):
            parse_scalar("")
        with pytest.raises(ScalarParseError):
            parse_scalar("1*sqrt(2)+1*sqrt(3)")
        with pytest.raises(ScalarParseError):
            parse_scalar("1/0")
        with pytest.raises(ScalarParseError):
            parse_scalar("1*sqrt(8)")

    def test_sqrt_one_and_zero_fold(self):
        assert parse_scalar("2*sqrt(1)") == 2
        assert parse_scalar("5+3*sqrt(0)") == 5
