"""
Unit tests for the operator and scalar parser
"""

from fractions import Fraction

import pytest

from orthorec.algebra.diffop import DiffOperator
from orthorec.algebra.scalars import ScalarDomain
from orthorec.exceptions import ParseError
from orthorec.parser import (
    collect_identifiers,
    parse_operator,
    parse_polynomial,
    parse_scalar,
    tokenize,
)


@pytest.fixture
def X():
    return ScalarDomain(["alpha", "m"], "x")


@pytest.fixture
def N():
    return ScalarDomain(["alpha"])


class TestTokenize:

    def test_tokens(self):
        kinds = [t.kind for t in tokenize("2*x**3 + Dx")]
        assert kinds == ["number", "op", "name", "op", "number", "op", "name"]

    def test_double_star_is_caret(self):
        assert [t.value for t in tokenize("x**2")] == ["x", "^", "2"]

    def test_bad_character(self):
        with pytest.raises(ParseError) as exc_info:
            tokenize("x $ 1")
        assert exc_info.value.position == 2

    def test_collect_identifiers(self):
        assert collect_identifiers("alpha*x + Dx + n - beta2") == {"alpha", "beta2"}


class TestParseOperator:

    def test_composition(self, X):
        Dx = DiffOperator.derivation(X)
        x = DiffOperator.scalar(X, X.gen)
        assert parse_operator("Dx*x", X) == x * Dx + 1

    def test_power_spellings(self, X):
        assert parse_operator("x^2*Dx", X) == parse_operator("x**2*Dx", X)
        assert parse_operator("Dx^(2)", X) == parse_operator("Dx*Dx", X)

    def test_parameters(self, X):
        L = parse_operator("(1-x^2)*Dx^2 - (2*alpha+1)*x*Dx + m", X)
        assert L.order == 2
        assert L.coefficient(0) == X("m")
        assert L.coefficient(1) == -(2 * X("alpha") + 1) * X.gen

    def test_division_by_constant(self, X):
        L = parse_operator("Dx/(2*alpha)", X)
        assert L.coefficient(1) == 1 / (2 * X("alpha"))

    def test_negative_exponent_of_constant(self, X):
        assert parse_operator("2^-1*x", X).coefficient(0) == X.gen * X(Fraction(1, 2))

    def test_unary_minus(self, X):
        assert parse_operator("-(-x)", X) == parse_operator("x", X)

    @pytest.mark.parametrize(
        "text,subtype",
        [
            ("2x", "syntax"),
            ("x Dx", "syntax"),
            ("n*Dx", "identifier"),
            ("beta*Dx", "identifier"),
            ("Dx/x", "division"),
            ("1/0", "division"),
            ("x^-1", "exponent"),
            ("x^y", "syntax"),
            ("(x+1", "syntax"),
            ("", "syntax"),
            ("x +", "syntax"),
        ],
    )
    def test_rejected(self, X, text, subtype):
        with pytest.raises(ParseError) as exc_info:
            parse_operator(text, X)
        assert exc_info.value.subtype == subtype

    def test_requires_x_domain(self, N):
        with pytest.raises(ParseError):
            parse_operator("Dx", N)


class TestParsePolynomial:

    def test_polynomial(self, X):
        assert parse_polynomial("(1-x)^3", X) == (1 - X.gen) ** 3

    def test_operator_rejected(self, X):
        with pytest.raises(ParseError):
            parse_polynomial("x*Dx", X)


class TestParseScalar:

    def test_rational_function(self, N):
        value = parse_scalar("(n+1)/(2*alpha) - n^2", N)
        assert value == (N.gen + 1) / (2 * N("alpha")) - N.gen ** 2

    def test_negative_power(self, N):
        assert parse_scalar("(n+1)^-2", N) == 1 / (N.gen + 1) ** 2

    def test_x_not_allowed(self, N):
        with pytest.raises(ParseError) as exc_info:
            parse_scalar("x + n", N)
        assert exc_info.value.subtype == "identifier"

    def test_division_by_zero(self, N):
        with pytest.raises(ParseError):
            parse_scalar("n/(alpha-alpha)", N)
