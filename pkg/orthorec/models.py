"""
Pydantic models for the machine-readable output of single runs and of the golden suite.
"""

from __future__ import annotations

from datetime import datetime, timezone
from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, Field

UTC = timezone.utc

Status = Literal["PASS", "FAIL"]


class ErrorInfo(BaseModel):
    """Structured error metadata, built from OrthorecError.to_error_context()."""
    code: Literal[
        "PARSE_ERROR",
        "VALIDATION_ERROR",
        "ALGEBRA_ERROR",
        "HYPOTHESIS_ERROR",
        "UNSUPPORTED_MODE",
        "ORACLE_ERROR",
        "MISMATCH_ERROR",
        "IO_ERROR",
    ]
    subtype: Optional[str] = None
    message: str
    context: Dict[str, Any] = Field(default_factory=dict)


class CheckResult(BaseModel):
    """Oracle check of one polynomial solution."""
    polynomial: str
    passed: bool


class RecurrenceReport(BaseModel):
    """JSON form of one engine run."""
    order: int
    # recurrence coefficients, index = shift
    coefficients: List[str]
    numerator: List[str]
    denominator: List[str]
    hypotheses: List[str]
    mode: str
    basis: Optional[str] = None
    name: str = "u"
    text: str
    irreducible: Optional[bool] = None
    path: Optional[str] = None
    check: List[CheckResult] = Field(default_factory=list)


class CaseResult(BaseModel):
    """Outcome of one golden case."""
    name: str
    status: Status
    duration_ms: float
    report: Optional[RecurrenceReport] = None
    error: Optional[ErrorInfo] = None
    c_trivial: Optional[bool] = None


class SuiteResults(BaseModel):
    """All case results of one suite run."""
    created_at: datetime = Field(default_factory=lambda: datetime.now(UTC))
    source: str
    cases: List[CaseResult]

    @property
    def passed(self) -> int:
        return sum(1 for c in self.cases if c.status == "PASS")

    @property
    def failed(self) -> int:
        return sum(1 for c in self.cases if c.status == "FAIL")

    def pass_rate(self) -> float:
        """Overall pass rate percentage."""
        total = len(self.cases) or 1
        return round(self.passed / total * 100.0, 2)

    def aggregates(self) -> Dict[str, int]:
        return {"passed": self.passed, "failed": self.failed, "total": len(self.cases)}
