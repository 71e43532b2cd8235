"""
Output generation: text and JSON forms of a recurrence, and suite summaries.
"""

from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from .algebra.scalars import Scalar, ScalarDomain
from .algebra.shift import ShiftOperator
from .engine import RecurrenceResult
from .models import CheckResult, RecurrenceReport, SuiteResults
from .utils.constants import DEFAULT_SEQUENCE_NAME
import logging

logger = logging.getLogger(__name__)


def _is_negative(c: Scalar) -> bool:
    return c.numer.LC < 0


def _single_term(text: str) -> bool:
    body = text[1:] if text.startswith("-") else text
    return "+" not in body and "-" not in body


def _index(domain: ScalarDomain, k: int) -> str:
    return domain.variable if k == 0 else f"{domain.variable}+{k}"


def render_recurrence(op: ShiftOperator, name: str = DEFAULT_SEQUENCE_NAME) -> str:
    """
    Text such as ``(2*n+3)*u(n+2) - (2*n+1)*u(n) = 0``, highest shift first.
    """
    domain = op.domain
    parts: List[str] = []
    for k in range(op.degree, -1, -1):
        c = op.coefficient(k)
        if not c:
            continue
        negative = _is_negative(c)
        text = domain.render(-c if negative else c)
        term = f"{name}({_index(domain, k)})"
        if text != "1":
            term = f"{text}*{term}" if _single_term(text) else f"({text})*{term}"
        if not parts:
            parts.append(f"-{term}" if negative else term)
        else:
            parts.append(f"- {term}" if negative else f"+ {term}")
    return (" ".join(parts) or "0") + " = 0"


class OutputGenerator:
    """Builds RecurrenceReport objects and renders them."""

    def __init__(self, sequence_name: str = DEFAULT_SEQUENCE_NAME) -> None:
        self.sequence_name = sequence_name

    def build_report(
        self,
        result: RecurrenceResult,
        checks: Sequence[Tuple[str, bool]] = (),
    ) -> RecurrenceReport:
        domain = result.domain
        fraction = result.fraction
        return RecurrenceReport(
            order=result.order,
            coefficients=[domain.render(c) for c in self._padded(result.recurrence)],
            numerator=[domain.render(c) for c in self._padded(fraction.num)],
            denominator=[domain.render(c) for c in self._padded(fraction.den)],
            hypotheses=result.hypotheses.lines(),
            mode=result.mode,
            basis=result.basis.label if result.basis is not None else None,
            name=self.sequence_name,
            text=render_recurrence(result.recurrence, self.sequence_name),
            irreducible=result.irreducible,
            path=result.path or None,
            check=[CheckResult(polynomial=p, passed=ok) for p, ok in checks],
        )

    @staticmethod
    def _padded(op: ShiftOperator) -> List[Scalar]:
        return [op.coefficient(k) for k in range(op.degree + 1)]

    def render_text(self, report: RecurrenceReport) -> str:
        lines = [report.text, f"mode: {report.mode}"]
        if report.basis:
            lines.append(f"basis: {report.basis}")
        if report.irreducible is not None:
            lines.append(f"irreducible: {'yes' if report.irreducible else 'no'}")
        lines.append("hypotheses:")
        lines.extend(f"  - {h}" for h in report.hypotheses)
        for check in report.check:
            lines.append(f"check {check.polynomial}: {'pass' if check.passed else 'FAIL'}")
        return "\n".join(lines) + "\n"

    def render_json(self, report: RecurrenceReport) -> str:
        return report.model_dump_json(indent=2) + "\n"

    def write_results(self, results: SuiteResults, path: str) -> None:
        Path(path).write_text(results.model_dump_json(indent=2) + "\n", encoding="utf-8")
        logger.info(f"Results written to {path}")

    def print_summary(self, results: SuiteResults, failures_only: Optional[bool] = True) -> None:
        """Print a summary of a suite run."""
        total = len(results.cases)
        print("\n" + "=" * 50)
        print(f"Golden suite summary: {results.source}")
        print("=" * 50)
        for case in results.cases:
            if failures_only and case.status == "PASS":
                continue
            detail = case.error.message if case.error else ""
            print(f"{case.status:4}  {case.name}  ({case.duration_ms:.0f} ms)  {detail}")
        print(f"Total cases: {total}")
        print(f"Passed: {results.passed}")
        print(f"Failed: {results.failed}")
        if total > 0:
            print(f"Success Rate: {results.pass_rate():.1f}%")
        print("=" * 50)
