"""
Comparison of computed recurrences with expected ones.
"""

from typing import Dict, Optional, Tuple
import logging

from .algebra.fractions import recurrence_normal_form
from .algebra.scalars import ScalarDomain
from .algebra.shift import ShiftOperator
from .config import GoldenCase
from .engine import RecurrenceResult
from .exceptions import OrthorecError
from .output import render_recurrence
from .parser import parse_scalar

logger = logging.getLogger(__name__)


def expected_operator(expected: Dict[int, str], domain: ScalarDomain) -> ShiftOperator:
    """Build the operator sum_k e_k(n) S^k from shift -> coefficient text."""
    size = max(expected) + 1 if expected else 0
    coeffs = [domain.zero] * size
    for shift, text in expected.items():
        coeffs[shift] = parse_scalar(text, domain)
    return ShiftOperator(domain, coeffs)


def proportional(a: ShiftOperator, b: ShiftOperator) -> bool:
    """True iff a = c(n) b for a nonzero c in K(n)."""
    if a.degree != b.degree or not a:
        return a.degree == b.degree
    top_a, top_b = a.leading_coefficient, b.leading_coefficient
    return all(
        a.coefficient(k) * top_b == b.coefficient(k) * top_a for k in range(a.degree + 1)
    )


class RecurrenceComparator:
    """Decides whether a golden case passed."""

    def compare_results(
        self, case: GoldenCase, result: RecurrenceResult
    ) -> Tuple[bool, Optional[str]]:
        """
        Compare a computed recurrence with the case expectation.

        Returns:
            (matched, message); the message describes a mismatch
        """
        if case.expected_error:
            return False, f"expected error {case.expected_error}, got a recurrence"
        computed = result.recurrence
        expected = expected_operator(case.expected, computed.domain)
        if case.comparison == "exact":
            matched = recurrence_normal_form(expected) == computed
        else:
            matched = proportional(computed, expected)
        if matched:
            return True, None
        message = (
            f"expected {render_recurrence(recurrence_normal_form(expected))}, "
            f"got {render_recurrence(computed)}"
        )
        logger.debug(f"{case.name}: {message}")
        return False, message

    def compare_error(self, case: GoldenCase, error: OrthorecError) -> Tuple[bool, Optional[str]]:
        """A raised error passes only when the case expects exactly its code."""
        code = error.error_code.value if error.error_code else "UNKNOWN"
        if case.expected_error and case.expected_error == code:
            return True, None
        if case.expected_error:
            return False, f"expected error {case.expected_error}, got {code}: {error.message}"
        return False, str(error)
