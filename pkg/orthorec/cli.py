"""
Command-line front end.

    orthorec --basis chebyshev --mode theta '2*(1-x^2)*Dx - x'
    orthorec --basis hermite 'Dx - 1' --format json
    orthorec --suite golden.yaml
"""

import argparse
import logging
import sys
from typing import List, Optional

from pydantic import BaseModel, Field

from . import __version__
from .config import EngineSettings, SuiteConfig, load_settings
from .exceptions import ConfigurationError, ErrorCode, OrthorecError
from .families.registry import describe_families
from .output import OutputGenerator
from .problem import check_solutions, load_problem, solve
from .runner import SuiteRunner
from .utils.constants import (
    DEFAULT_GOLDEN_FILE,
    DEFAULT_SEQUENCE_NAME,
    EXIT_CHECK_FAILED,
    EXIT_INPUT_ERROR,
    EXIT_OK,
    EXIT_PRECONDITION_ERROR,
    Mode,
    OutputFormat,
)

logger = logging.getLogger(__name__)

INPUT_ERRORS = {ErrorCode.PARSE_ERROR, ErrorCode.VALIDATION_ERROR, ErrorCode.IO_ERROR}


class InputSpec(BaseModel):
    """One CLI invocation."""
    operator: str
    basis: Optional[str] = None
    mode: Mode = Mode.AUTO
    name: str = DEFAULT_SEQUENCE_NAME
    format: OutputFormat = OutputFormat.TEXT
    product: Optional[str] = None
    check: List[str] = Field(default_factory=list)
    oracle_size: Optional[int] = None


def exit_code_for(error: OrthorecError) -> int:
    if error.error_code in INPUT_ERRORS:
        return EXIT_INPUT_ERROR
    return EXIT_PRECONDITION_ERROR


def run(spec: InputSpec) -> tuple[str, int]:
    """
    Compute and render the recurrence of one input.

    Returns:
        (rendered output, exit code)

    Raises:
        OrthorecError: Propagated from parsing and the engine
    """
    problem = load_problem(spec.operator, spec.basis, spec.mode, spec.product, spec.check)
    result = solve(problem)
    checks = check_solutions(problem, result, spec.check, spec.oracle_size)
    generator = OutputGenerator(spec.name)
    report = generator.build_report(result, checks)
    if spec.format is OutputFormat.JSON:
        rendered = generator.render_json(report)
    else:
        rendered = generator.render_text(report)
    code = EXIT_OK if all(ok for _, ok in checks) else EXIT_CHECK_FAILED
    return rendered, code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orthorec",
        description="Recurrences for the coefficients of solutions of linear ODEs "
        "in classical orthogonal bases",
    )
    parser.add_argument("operator", nargs="?", help="Differential operator, e.g. '(1-x^2)*Dx^2 - x*Dx'")
    parser.add_argument("--basis", help="Family, e.g. chebyshev, gegenbauer:lambda, jacobi:0,1/2")
    parser.add_argument("--mode", default=Mode.AUTO.value, choices=[m.value for m in Mode],
                        help="Recurrence mode")
    parser.add_argument("--format", default=OutputFormat.TEXT.value,
                        choices=[f.value for f in OutputFormat], help="Output format")
    parser.add_argument("--name", help="Sequence name used in the output (default u)")
    parser.add_argument("--product", help="Second operator; use the symmetric product of both")
    parser.add_argument("--check", action="append", default=[],
                        help="Polynomial solution to verify with the oracle (repeatable)")
    parser.add_argument("--config", help="YAML file with engine settings")
    parser.add_argument("--log-level", choices=["DEBUG", "INFO", "WARNING", "ERROR"],
                        help="Logging level")
    parser.add_argument("--list-families", action="store_true",
                        help="List the available families and exit")
    parser.add_argument("--suite", nargs="?", const=DEFAULT_GOLDEN_FILE,
                        help="Run a golden-case suite (default golden.yaml)")
    parser.add_argument("--results", help="Write suite results as JSON to this file")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    return parser


def _configure_logging(level: str) -> None:
    logging.basicConfig(
        level=getattr(logging, level),
        format="%(asctime)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
        force=True,
    )


def _io_error(message: str, path: str, subtype: str) -> OrthorecError:
    return OrthorecError(message, error_code=ErrorCode.IO_ERROR, subtype=subtype,
                         context={"path": path})


def _load_settings(path: Optional[str]) -> EngineSettings:
    if path is None:
        return EngineSettings()
    try:
        return load_settings(path)
    except FileNotFoundError as e:
        raise _io_error(str(e), path, "missing_file") from e
    except ValueError as e:
        raise ConfigurationError(str(e), config_path=path) from e


def _run_suite(path: str, args, settings_path: Optional[str]) -> int:
    try:
        config = SuiteConfig.load_from_file(path)
    except FileNotFoundError as e:
        raise _io_error(str(e), path, "missing_file") from e
    except ValueError as e:
        raise ConfigurationError(str(e), config_path=path) from e
    if settings_path:
        config.settings = _load_settings(settings_path)
    _configure_logging(args.log_level or "INFO")
    runner = SuiteRunner(config, source=path)
    results = runner.run_all()
    generator = OutputGenerator(config.settings.sequence_name)
    generator.print_summary(results)
    if args.results:
        try:
            generator.write_results(results, args.results)
        except OSError as e:
            raise _io_error(f"Cannot write results: {e}", args.results, "write") from e
    return EXIT_OK if results.failed == 0 else EXIT_INPUT_ERROR


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        settings = _load_settings(args.config)
        _configure_logging(args.log_level or settings.log_level)

        if args.list_families:
            print("Available families:")
            for info in describe_families():
                print(f"  {info['name']}({info['parameters']}): sigma = {info['sigma']}, "
                      f"tau = {info['tau']}, lambda_n = {info['lambda_n']}, "
                      f"theta: {info['theta']}, endpoint: {info['endpoint']}")
            return EXIT_OK

        if args.suite:
            return _run_suite(args.suite, args, args.config)

        if not args.operator:
            parser.print_usage(sys.stderr)
            print("orthorec: error: an operator is required", file=sys.stderr)
            return EXIT_INPUT_ERROR

        spec = InputSpec(
            operator=args.operator,
            basis=args.basis,
            mode=args.mode,
            name=args.name or settings.sequence_name,
            format=args.format,
            product=args.product,
            check=args.check,
            oracle_size=settings.oracle_size,
        )
        rendered, code = run(spec)
        sys.stdout.write(rendered)
        return code
    except OrthorecError as e:
        print(f"orthorec: {e}", file=sys.stderr)
        logger.debug("Failure details", exc_info=True)
        return exit_code_for(e)


if __name__ == "__main__":
    sys.exit(main())
