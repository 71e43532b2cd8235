"""
Unit tests for shift operators and the Euclidean algorithms of Sh
"""

import pytest

from orthorec.algebra.scalars import ScalarDomain
from orthorec.algebra.shift import (
    ShiftOperator,
    extended_left_gcd_with_Sn_power,
    gcld,
    gcld_cofactors,
    gcld_ext,
    gcrd,
    gcrd_ext,
    lclm_ext,
    left_divmod,
    render_shift,
    right_divmod,
    sh_mul,
)
from orthorec.exceptions import AlgebraError


@pytest.fixture
def N():
    return ScalarDomain()


def S(N, k=1):
    return ShiftOperator.monomial(N, k)


class TestShiftOperator:
    """Structure and the commutation rule S n = (n+1) S."""

    def test_sh_mul(self, N):
        n = N.gen
        a = ShiftOperator(N, [n, 1])
        b = ShiftOperator(N, [1, n])
        assert sh_mul(a, b) == ShiftOperator(N, [n, n ** 2 + 1, n + 1])

    def test_commutation(self, N):
        n = N.gen
        assert S(N) * ShiftOperator.scalar(N, n) == ShiftOperator(N, [0, n + 1])

    def test_trailing_zeros_dropped(self, N):
        op = ShiftOperator(N, [1, 0, 0])
        assert op.degree == 0
        assert ShiftOperator.zero(N).degree == -1

    def test_valuation(self, N):
        assert ShiftOperator(N, [0, 0, N.gen]).valuation == 2
        with pytest.raises(AlgebraError):
            ShiftOperator.zero(N).valuation

    def test_monomial_power(self, N):
        assert S(N, 3).is_monomial_power()
        assert not (2 * S(N, 3)).is_monomial_power()
        with pytest.raises(AlgebraError):
            ShiftOperator.monomial(N, -1)

    def test_scales(self, N):
        n = N.gen
        op = ShiftOperator(N, [1, 1])
        assert op.left_scale(n) == ShiftOperator(N, [n, n])
        assert op.right_scale(n) == ShiftOperator(N, [n, n + 1])
        assert op.right_scale(n) == op * ShiftOperator.scalar(N, n)

    def test_shift_arg(self, N):
        n = N.gen
        op = ShiftOperator(N, [n, 1])
        assert S(N, 2) * op == op.shift_arg(2) * S(N, 2)

    def test_strip_low(self, N):
        n = N.gen
        op = ShiftOperator(N, [0, 0, n, 1])
        assert S(N, 2) * op.strip_low(2) == op
        with pytest.raises(AlgebraError):
            ShiftOperator(N, [1, 1]).strip_low(1)

    def test_involution_is_anti_automorphism(self, N):
        n = N.gen
        a = ShiftOperator(N, [n, 2, n ** 2])
        b = ShiftOperator(N, [1, n + 3])
        assert (a * b).involution() == b.involution() * a.involution()
        assert a.involution().involution() == a

    def test_operators_over_different_domains(self, N):
        other = ScalarDomain(["a"])
        with pytest.raises(AlgebraError):
            S(N) + S(other)


class TestDivision:
    """Left and right Euclidean division."""

    def test_right_divmod(self, N):
        n = N.gen
        a = ShiftOperator(N, [n, 1, n ** 2, 3])
        b = ShiftOperator(N, [1, n + 1])
        q, r = right_divmod(a, b)
        assert q * b + r == a
        assert r.degree < b.degree

    def test_left_divmod(self, N):
        n = N.gen
        a = ShiftOperator(N, [n, 1, n ** 2, 3])
        b = ShiftOperator(N, [1, n + 1])
        q, r = left_divmod(a, b)
        assert b * q + r == a
        assert r.degree < b.degree

    def test_division_by_zero(self, N):
        with pytest.raises(AlgebraError):
            right_divmod(S(N), ShiftOperator.zero(N))
        with pytest.raises(AlgebraError):
            left_divmod(S(N), ShiftOperator.zero(N))


class TestEuclid:
    """gcrd, lclm and their left-sided counterparts."""

    def test_gcrd_ext_bezout(self, N):
        n = N.gen
        common = ShiftOperator(N, [n, 1])
        a = ShiftOperator(N, [1, 2]) * common
        b = ShiftOperator(N, [n + 1, 0, 1]) * common
        g, s, t, s1, t1 = gcrd_ext(a, b)
        assert g == common.monic()
        assert s * a + t * b == g
        assert not (s1 * a + t1 * b)

    def test_gcrd_of_coprime(self, N):
        n = N.gen
        assert gcrd(ShiftOperator(N, [n, 1]), ShiftOperator(N, [n + 2, 1])) == ShiftOperator.one(N)

    def test_gcrd_of_zeros(self, N):
        with pytest.raises(AlgebraError):
            gcrd(ShiftOperator.zero(N), ShiftOperator.zero(N))

    def test_lclm(self, N):
        n = N.gen
        a = ShiftOperator(N, [n, 1])
        b = ShiftOperator(N, [1, n])
        m, u, v = lclm_ext(a, b)
        assert u * a == m
        assert v * b == m
        assert m.degree == 2
        assert m.leading_coefficient == N.one

    def test_gcld(self, N):
        n = N.gen
        common = ShiftOperator(N, [n, 1])
        a = common * ShiftOperator(N, [1, 2])
        b = common * ShiftOperator(N, [n + 1, 0, 1])
        g = gcld(a, b)
        assert g.degree == 1
        g2, u, v = gcld_ext(a, b)
        assert g2 == g
        assert a * u + b * v == g

    def test_gcld_cofactors(self, N):
        n = N.gen
        a = ShiftOperator(N, [n, 1]) * ShiftOperator(N, [1, 2])
        b = ShiftOperator(N, [n, 1]) * ShiftOperator(N, [3, n])
        g, qa, qb = gcld_cofactors(a, b)
        assert g * qa == a
        assert g * qb == b

    def test_extended_left_gcd_with_Sn_power(self, N):
        n = N.gen
        g = ShiftOperator(N, [n + 1, 1, 1])
        u, v, c = extended_left_gcd_with_Sn_power(g, 2)
        assert u * g + v * S(N, 2) == ShiftOperator.one(N)
        assert N.is_polynomial(c)
        assert all(N.is_polynomial(x * c) for x in u.coeffs + v.coeffs)

    def test_extended_left_gcd_needs_coprime(self, N):
        with pytest.raises(AlgebraError):
            extended_left_gcd_with_Sn_power(ShiftOperator(N, [0, 1, 1]), 2)


class TestRendering:

    def test_render_shift(self, N):
        n = N.gen
        assert render_shift(ShiftOperator(N, [-1, n + 1, 1])) == "S^2 + (n+1)*S + (-1)"
        assert render_shift(ShiftOperator.zero(N)) == "0"
