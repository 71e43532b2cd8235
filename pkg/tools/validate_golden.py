#!/usr/bin/env python3
"""
Validate golden.yaml without running the engine.

Checks that every case loads, names a known family, and that its operator,
product and check polynomials parse over the basis domain.
"""

import sys
from pathlib import Path

from orthorec.config import SuiteConfig
from orthorec.exceptions import OrthorecError
from orthorec.problem import load_problem


def main():
    config_path = Path(sys.argv[1] if len(sys.argv) > 1 else "golden.yaml")
    if not config_path.exists():
        print(f"Error: {config_path} not found", file=sys.stderr)
        sys.exit(1)

    try:
        config = SuiteConfig.load_from_file(str(config_path))
    except ValueError as e:
        print(f"Error: {e}", file=sys.stderr)
        sys.exit(1)

    errors = []
    warnings = []

    for case in config.cases:
        try:
            load_problem(case.operator, case.basis, case.mode, case.product, case.check)
        except OrthorecError as e:
            code = e.error_code.value if e.error_code else "UNKNOWN"
            if case.expected_error != code:
                errors.append(f"{case.name}: {e}")
            continue
        if case.expected and not case.description and case.comparison == "proportional":
            warnings.append(f"{case.name}: proportional case without a description")

    if errors:
        print("Errors (cases that do not load):", file=sys.stderr)
        for error in errors:
            print(f"  ✗ {error}", file=sys.stderr)
        sys.exit(1)

    if warnings:
        print("Warnings:", file=sys.stderr)
        for warning in warnings:
            print(f"  ⚠ {warning}", file=sys.stderr)

    print(f"✓ All {len(config.cases)} cases in {config_path} load")
    sys.exit(0)


if __name__ == "__main__":
    main()
