"""
Unit tests for fractions of recurrence operators.

Sequences below are Taylor coefficients, where multiplication by x is the
pair (1, S) and differentiation is ((n+1) S, 1).
"""

import pytest

from orthorec.algebra.fractions import (
    RecFraction,
    annihilator_check,
    frac_add,
    frac_mul,
    fractions_equivalent,
    fractions_proportional,
    is_irreducible,
    recurrence_normal_form,
)
from orthorec.algebra.scalars import ScalarDomain
from orthorec.algebra.shift import ShiftOperator
from orthorec.exceptions import AlgebraError


@pytest.fixture
def N():
    return ScalarDomain()


@pytest.fixture
def X(N):
    return RecFraction(ShiftOperator.one(N), ShiftOperator.monomial(N, 1))


@pytest.fixture
def D(N):
    return RecFraction(ShiftOperator(N, [0, N.gen + 1]), ShiftOperator.one(N))


def padded(values, size=8):
    return list(values) + [0] * (size - len(values))


# f = 1 + 2x + 3x^2
F = padded([1, 2, 3])


class TestNormalForm:
    """Structural equality is equality of Z_N classes."""

    def test_constant_factor(self, N):
        a = ShiftOperator(N, [1, N.gen])
        b = ShiftOperator.monomial(N, 1)
        assert RecFraction(a.left_scale(2), b.left_scale(2)) == RecFraction(a, b)
        assert RecFraction.of(N, 2, 4) == RecFraction.of(N, 1, 2)

    def test_unit_factor_stripped(self, N):
        a = ShiftOperator(N, [1, N.gen])
        b = ShiftOperator.monomial(N, 1)
        unit = 2 * N.gen + 1
        assert RecFraction(a.left_scale(unit), b.left_scale(unit)) == RecFraction(a, b)

    def test_natural_factor_kept(self, N):
        a = ShiftOperator(N, [1, N.gen])
        b = ShiftOperator.monomial(N, 1)
        assert RecFraction(a.left_scale(N.gen), b.left_scale(N.gen)) != RecFraction(a, b)

    def test_sign(self, N):
        a = ShiftOperator(N, [1, N.gen])
        b = ShiftOperator(N, [3, -1])
        fraction = RecFraction(-a, -b)
        assert fraction == RecFraction(a, b)
        assert fraction.den.leading_coefficient.numer.LC > 0

    def test_recurrence_normal_form(self, N):
        n = N.gen
        op = ShiftOperator(N, [-(n + 1) / 2, (n + 1) / 4])
        assert recurrence_normal_form(op) == ShiftOperator(N, [-2, 1])

    def test_domains_must_agree(self, N):
        with pytest.raises(AlgebraError):
            RecFraction(ShiftOperator.one(N), ShiftOperator.one(ScalarDomain(["a"])))

    def test_degree(self, X, D):
        assert X.degree == 1
        assert D.degree == 1


class TestArithmetic:
    """Sum and composition, checked against coefficient sequences."""

    def test_product_of_multiplications(self, X):
        x_squared = frac_mul(X, X)
        assert annihilator_check(x_squared, F, padded([0, 0, 1, 2, 3]))

    def test_sum(self, X, D):
        # x f + f' = 2 + 7x + 2x^2 + 3x^3
        assert annihilator_check(frac_add(X, D), F, padded([2, 7, 2, 3]))

    def test_composition_order(self, X, D):
        # (x f)' = 1 + 4x + 9x^2
        assert annihilator_check(frac_mul(D, X), F, padded([1, 4, 9]))
        # x f' = 2x + 6x^2
        assert annihilator_check(frac_mul(X, D), F, padded([0, 2, 6]))

    def test_operators(self, X, D):
        assert X + D == frac_add(X, D)
        assert X * D == frac_mul(X, D)

    def test_zero_is_absorbing(self, N, X):
        zero = RecFraction.zero(N)
        assert frac_add(zero, X).is_zero()
        assert frac_mul(X, zero).is_zero()

    def test_left_scale(self, N, X):
        assert X.left_scale(2 * N.gen + 3) == X


class TestPredicates:

    def test_irreducible(self, N, X):
        assert is_irreducible(X)
        shift = ShiftOperator.monomial(N, 1)
        assert not is_irreducible(RecFraction(shift, shift * ShiftOperator(N, [1, 1])))

    def test_irreducible_zero(self, N):
        with pytest.raises(AlgebraError):
            is_irreducible(RecFraction.zero(N))

    def test_equivalent_and_proportional(self, N, X):
        n = N.gen
        scaled = RecFraction(X.num.left_scale(n), X.den.left_scale(n))
        assert not fractions_equivalent(X, scaled)
        assert fractions_proportional(X, scaled)
        assert fractions_equivalent(X, RecFraction(X.num, X.den))
        other = RecFraction(ShiftOperator(N, [1, 1]), X.den)
        assert not fractions_proportional(X, other)

    def test_annihilator_check_detects_mismatch(self, X):
        assert not annihilator_check(X, F, padded([0, 1, 2, 4]))

    def test_annihilator_check_short_prefix(self, X):
        with pytest.raises(AlgebraError):
            annihilator_check(X, [1], [1])
