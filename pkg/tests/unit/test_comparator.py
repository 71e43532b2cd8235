"""
Unit tests for RecurrenceComparator
"""

import pytest

from orthorec.algebra.scalars import ScalarDomain
from orthorec.algebra.shift import ShiftOperator
from orthorec.comparator import RecurrenceComparator, expected_operator, proportional
from orthorec.config import GoldenCase
from orthorec.exceptions import HypothesisError, ParseError
from orthorec.problem import load_problem, solve


@pytest.fixture
def comparator():
    return RecurrenceComparator()


@pytest.fixture
def exp_chebyshev():
    return solve(load_problem("Dx - 1", "chebyshev"))


def case(**kwargs):
    fields = {"name": "c", "operator": "Dx - 1", "basis": "chebyshev"}
    fields.update(kwargs)
    return GoldenCase(**fields)


class TestHelpers:

    def test_expected_operator(self):
        N = ScalarDomain(["a"])
        op = expected_operator({0: "a", 2: "n+1"}, N)
        assert op == ShiftOperator(N, [N("a"), 0, N.gen + 1])

    def test_proportional(self):
        N = ScalarDomain()
        n = N.gen
        a = ShiftOperator(N, [1, n])
        assert proportional(a, a.left_scale(n + 3))
        assert not proportional(a, ShiftOperator(N, [1, n + 1]))
        assert not proportional(a, ShiftOperator(N, [1, n, 1]))
        assert proportional(ShiftOperator.zero(N), ShiftOperator.zero(N))


class TestCompareResults:

    def test_exact_match(self, comparator, exp_chebyshev):
        matched, message = comparator.compare_results(
            case(expected={2: "1", 1: "2*n+2", 0: "-1"}), exp_chebyshev
        )
        assert matched
        assert message is None

    def test_exact_is_modulo_units(self, comparator, exp_chebyshev):
        matched, _ = comparator.compare_results(
            case(expected={2: "-(2*n+5)", 1: "-(2*n+5)*(2*n+2)", 0: "2*n+5"}), exp_chebyshev
        )
        assert matched

    def test_exact_keeps_natural_factors(self, comparator, exp_chebyshev):
        matched, message = comparator.compare_results(
            case(expected={2: "n", 1: "n*(2*n+2)", 0: "-n"}), exp_chebyshev
        )
        assert not matched
        assert "expected" in message

    def test_proportional(self, comparator, exp_chebyshev):
        matched, _ = comparator.compare_results(
            case(expected={2: "n", 1: "n*(2*n+2)", 0: "-n"}, comparison="proportional"),
            exp_chebyshev,
        )
        assert matched

    def test_mismatch_message(self, comparator, exp_chebyshev):
        matched, message = comparator.compare_results(
            case(expected={1: "1", 0: "-1"}), exp_chebyshev
        )
        assert not matched
        assert "u(n+2) + (2*n+2)*u(n+1) - u(n) = 0" in message

    def test_error_expected_but_recurrence_returned(self, comparator, exp_chebyshev):
        matched, message = comparator.compare_results(
            case(expected_error="PARSE_ERROR"), exp_chebyshev
        )
        assert not matched
        assert "PARSE_ERROR" in message


class TestCompareError:

    def test_expected_code(self, comparator):
        matched, _ = comparator.compare_error(
            case(expected_error="HYPOTHESIS_ERROR"), HypothesisError("no", mode="theta")
        )
        assert matched

    def test_other_code(self, comparator):
        matched, message = comparator.compare_error(
            case(expected_error="HYPOTHESIS_ERROR"), ParseError("bad")
        )
        assert not matched
        assert "PARSE_ERROR" in message

    def test_unexpected_error(self, comparator):
        matched, message = comparator.compare_error(
            case(expected={0: "1"}), ParseError("bad")
        )
        assert not matched
        assert "bad" in message
