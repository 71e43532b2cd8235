"""
Golden-suite runner: evaluates every case of a SuiteConfig, in parallel.
"""

import time
from concurrent.futures import ThreadPoolExecutor, as_completed
from typing import List, Optional
import logging

from .comparator import RecurrenceComparator
from .config import GoldenCase, SuiteConfig
from .exceptions import ErrorCode, MismatchError, OracleError, OrthorecError
from .models import CaseResult, ErrorInfo, SuiteResults
from .output import OutputGenerator
from .problem import check_solutions, load_problem, solve

logger = logging.getLogger(__name__)


def _error_info(error: OrthorecError) -> ErrorInfo:
    context = error.to_error_context()
    if context is None:
        return ErrorInfo(code=ErrorCode.ALGEBRA_ERROR.value, message=error.message)
    return ErrorInfo(**context.to_dict())


class SuiteRunner:
    """Runs the golden cases of a suite."""

    __test__ = False  # Tell pytest this is not a test class

    def __init__(self, config: SuiteConfig, source: str = "golden.yaml"):
        """
        Initialize suite runner.

        Args:
            config: Validated suite configuration
            source: Where the configuration came from, for reporting
        """
        self.config = config
        self.source = source
        self.comparator = RecurrenceComparator()
        self.output = OutputGenerator(config.settings.sequence_name)

    def run_case(self, case: GoldenCase) -> CaseResult:
        """Run one case; every OrthorecError becomes a failed or an expected-error result."""
        settings = self.config.settings
        start_time = time.time()
        report = None
        c_trivial = None
        try:
            problem = load_problem(case.operator, case.basis, case.mode, case.product, case.check)
            result = solve(problem)
            if result.c is not None:
                c_trivial = result.domain.is_rec_unit(result.c)
            checks = check_solutions(problem, result, case.check, settings.oracle_size)
            report = self.output.build_report(result, checks)

            matched, message = self.comparator.compare_results(case, result)
            if not matched:
                raise MismatchError(message or "recurrence mismatch", case=case.name)
            failed = [p for p, ok in checks if not ok]
            if failed:
                raise OracleError(f"Relation check failed for {', '.join(failed)}",
                                  subtype="relation")
            if settings.assert_irreducible and result.mode == "standard" and not result.irreducible:
                raise MismatchError("Standard mode returned a reducible fraction",
                                    case=case.name, subtype="irreducibility")
            status, error = "PASS", None
        except OrthorecError as e:
            matched, _ = self.comparator.compare_error(case, e)
            status = "PASS" if matched else "FAIL"
            error = None if matched else _error_info(e)
            if not matched:
                logger.warning(f"{case.name}: {e}")

        duration_ms = (time.time() - start_time) * 1000.0
        logger.info(f"{case.name}: {status} in {duration_ms:.0f} ms")
        return CaseResult(
            name=case.name,
            status=status,
            duration_ms=duration_ms,
            report=report,
            error=error,
            c_trivial=c_trivial,
        )

    def run_all(self, names: Optional[List[str]] = None) -> SuiteResults:
        """
        Run all cases (or the named ones) with a thread pool.

        Results keep the configuration order.
        """
        cases = [c for c in self.config.cases if names is None or c.name in names]
        results = {}
        workers = self.config.settings.parallel_cases
        with ThreadPoolExecutor(max_workers=workers) as executor:
            futures = {executor.submit(self.run_case, case): case.name for case in cases}
            for future in as_completed(futures):
                results[futures[future]] = future.result()
        nontrivial = [r.name for r in results.values() if r.c_trivial is False]
        if nontrivial:
            logger.info(f"c(n) != 1 for: {', '.join(sorted(nontrivial))}")
        return SuiteResults(source=self.source, cases=[results[c.name] for c in cases])
