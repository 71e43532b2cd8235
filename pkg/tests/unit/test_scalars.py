"""
Unit tests for ScalarDomain
"""

from fractions import Fraction

import pytest

from orthorec.algebra.scalars import ScalarDomain
from orthorec.exceptions import AlgebraError


@pytest.fixture
def N():
    return ScalarDomain(["a"])


class TestScalarDomain:
    """Construction, conversion and structure."""

    def test_variable_collision_rejected(self):
        with pytest.raises(AlgebraError):
            ScalarDomain(["n"])

    def test_duplicate_parameters_rejected(self):
        with pytest.raises(AlgebraError):
            ScalarDomain(["a", "a"])

    def test_equality_by_names(self):
        assert ScalarDomain(["a"]) == ScalarDomain(["a"])
        assert ScalarDomain(["a"]) != ScalarDomain(["a"], "x")
        assert hash(ScalarDomain(["a"])) == hash(ScalarDomain(["a"]))

    def test_conversion(self, N):
        assert N(Fraction(1, 2)) * 2 == N.one
        assert N("a") == N.symbol("a")
        assert N("n") == N.gen

    def test_bool_rejected(self, N):
        with pytest.raises(AlgebraError):
            N(True)

    def test_unknown_symbol(self, N):
        with pytest.raises(AlgebraError):
            N.symbol("b")

    def test_move_between_domains(self, N):
        wide = N.widen(["b"])
        assert wide.params == ("a", "b")
        assert wide(N.gen + N("a")) == wide.gen + wide("a")

    def test_degree_and_coefficients(self, N):
        n, a = N.gen, N("a")
        p = a * n ** 2 + 3
        assert N.degree(p) == 2
        assert N.degree(N.zero) == -1
        assert N.coefficients(p) == [N(3), N.zero, a]
        assert N.leading_coefficient(p) == a

    def test_degree_of_rational_function_rejected(self, N):
        with pytest.raises(AlgebraError):
            N.degree(1 / N.gen)

    def test_constant_and_polynomial(self, N):
        a = N("a")
        assert N.is_constant(1 / a)
        assert N.is_polynomial(N.gen / a)
        assert not N.is_polynomial(a / N.gen)


class TestSubstitutions:
    """Shifts, reflections and evaluation."""

    def test_shift(self, N):
        n = N.gen
        assert N.shift(n ** 2, 1) == (n + 1) ** 2
        assert N.shift(1 / n, -1) == 1 / (n - 1)

    def test_reflect(self, N):
        n = N.gen
        assert N.reflect(n, 2) == -n - 2
        assert N.reflect(N("a")) == N("a")

    def test_evaluate(self, N):
        n = N.gen
        assert N.evaluate((n + N("a")) / (n + 1), 1) == (1 + N("a")) / 2

    def test_evaluate_at_pole(self, N):
        with pytest.raises(AlgebraError) as exc_info:
            N.evaluate(1 / (N.gen - 3), 3)
        assert exc_info.value.context["point"] == 3

    def test_specialize(self, N):
        value = N.specialize(N.gen + N("a"), {"a": Fraction(1, 2)})
        assert value == N.gen + N(Fraction(1, 2))

    def test_specialize_vanishing_denominator(self, N):
        with pytest.raises(AlgebraError):
            N.specialize(1 / (N("a") - 1), {"a": 1})

    def test_derivative(self, N):
        assert N.derivative(N.gen ** 3) == 3 * N.gen ** 2


class TestEuclid:
    """Univariate division, gcd and lcm over K."""

    def test_divrem(self, N):
        n = N.gen
        q, r = N.divrem(n ** 3 + 1, n - 1)
        assert q * (n - 1) + r == n ** 3 + 1
        assert r == N(2)

    def test_divrem_by_zero(self, N):
        with pytest.raises(AlgebraError) as exc_info:
            N.divrem(N.gen, N.zero)
        assert exc_info.value.subtype == "division_by_zero"

    def test_gcd_is_monic(self, N):
        n = N.gen
        assert N.gcd(2 * (n - 1) * (n + 2), 4 * (n - 1) * n) == n - 1

    def test_lcm_denominators(self, N):
        n = N.gen
        assert N.lcm_denominators([1 / (2 * n), 3 / (n * (n + 1))]) == n * (n + 1)


class TestNaturalRoots:
    """The Z_N machinery."""

    def test_nonneg_integer_roots(self, N):
        n = N.gen
        assert N.nonneg_integer_roots(n * (n - 3) ** 2 * (n + 1) * (2 * n - 1)) == {0: 1, 3: 2}

    def test_parameters_hide_roots(self, N):
        assert N.in_zn(N.gen - N("a"))
        assert not N.in_zn(N.gen * (N.gen - N("a")))

    def test_roots_of_zero(self, N):
        with pytest.raises(AlgebraError):
            N.nonneg_integer_roots(N.zero)

    def test_zn_unit_part(self, N):
        n = N.gen
        q = (2 * n + 1) * (n - 2) / (n * (n + 5))
        unit, rest = N.zn_unit_part(q)
        assert rest == (n - 2) / n
        assert unit * rest == q

    def test_is_rec_unit(self, N):
        n = N.gen
        assert N.is_rec_unit(N.one)
        assert N.is_rec_unit((2 * n + 1) / (3 * (n + 5)))
        assert not N.is_rec_unit(n - 2)
        assert not N.is_rec_unit(1 / n)
        assert not N.is_rec_unit(N.zero)

    def test_zn_denominator_lcm(self, N):
        n = N.gen
        values = [1 / (n * (2 * n + 1)), N.zero, n / ((n - 4) * n)]
        assert N.zn_denominator_lcm(values) == n * (n - 4)

    def test_natural_poles(self, N):
        assert N.natural_poles(1 / (N.gen - 1)) == {1: 1}
        assert N.natural_poles(N.zero) == {}


class TestRendering:

    def test_render_strips_spaces(self, N):
        assert N.render(2 * N.gen + 3) == "2*n+3"
