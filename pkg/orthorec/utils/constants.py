"""
Constants and enums for orthorec.

Named modes, family names and defaults shared by the engine, the CLI and
the golden-suite configuration.
"""

from enum import Enum
from typing import Literal

class Mode(str, Enum):
    """Recurrence generation modes."""
    AUTO = "auto"
    STANDARD = "standard"
    THETA = "theta"
    ENDPOINT_PLUS = "endpoint:+1"
    ENDPOINT_MINUS = "endpoint:-1"
    TAYLOR = "taylor"

class FamilyName(str, Enum):
    """Classical orthogonal families."""
    CHEBYSHEV = "chebyshev"
    GEGENBAUER = "gegenbauer"
    JACOBI = "jacobi"
    LAGUERRE = "laguerre"
    HERMITE = "hermite"

class OutputFormat(str, Enum):
    """CLI output formats."""
    TEXT = "text"
    JSON = "json"

class HornerScheme(str, Enum):
    """Bracketing of a differential operator for Horner evaluation."""
    LEFT = "left"
    RIGHT = "right"


# Comparison kind for golden cases
Comparison = Literal["exact", "proportional"]

# Reserved identifiers in the input language
VARIABLE_X = "x"
VARIABLE_N = "n"
DERIVATION = "Dx"
RESERVED_SYMBOLS = frozenset({VARIABLE_X, VARIABLE_N, DERIVATION})

# Defaults
DEFAULT_SEQUENCE_NAME = "u"
DEFAULT_ORACLE_SIZE = 16
DEFAULT_GOLDEN_FILE = "golden.yaml"

# CLI exit codes
EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_PRECONDITION_ERROR = 2
EXIT_CHECK_FAILED = 3
