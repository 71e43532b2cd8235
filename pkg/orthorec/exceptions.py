"""
Custom exception hierarchy for orthorec.

Every failure raised by the library carries an ErrorCode so that the CLI
and the golden-suite runner can report it in a structured way.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Optional


class ErrorCode(Enum):
    """Error codes for orthorec failures."""
    PARSE_ERROR = "PARSE_ERROR"                    # Bad operator / scalar / basis syntax
    VALIDATION_ERROR = "VALIDATION_ERROR"          # Well-formed but invalid input (config, parameters)
    ALGEBRA_ERROR = "ALGEBRA_ERROR"                # Precondition of an algebraic operation violated
    HYPOTHESIS_ERROR = "HYPOTHESIS_ERROR"          # Divisibility hypothesis of a singular mode fails
    UNSUPPORTED_MODE = "UNSUPPORTED_MODE"          # Mode not available for the chosen basis
    ORACLE_ERROR = "ORACLE_ERROR"                  # Verification window or basis construction failure
    MISMATCH_ERROR = "MISMATCH_ERROR"              # Result differs from the expected recurrence
    IO_ERROR = "IO_ERROR"                          # File could not be read or written


@dataclass
class ErrorContext:
    """Structured error context for reporting."""
    code: ErrorCode
    subtype: str  # e.g., "division_by_zero", "sigma_divisibility"
    message: str
    context: Optional[Dict[str, Any]] = None

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for JSON serialization."""
        return {
            "code": self.code.value,
            "subtype": self.subtype,
            "message": self.message,
            "context": self.context or {},
        }


class OrthorecError(Exception):
    """Base exception for all orthorec errors."""

    def __init__(
        self,
        message: str,
        error_code: Optional[ErrorCode] = None,
        subtype: Optional[str] = None,
        context: Optional[Dict[str, Any]] = None,
    ):
        """
        Initialize orthorec error.

        Args:
            message: Human-readable error message
            error_code: Optional error code from ErrorCode enum
            subtype: Optional error subtype (e.g., "zero_operator")
            context: Optional additional context dictionary
        """
        super().__init__(message)
        self.message = message
        self.error_code = error_code
        self.subtype = subtype
        self.context = context or {}

    def to_error_context(self) -> Optional[ErrorContext]:
        """Convert to ErrorContext if error_code is set."""
        if self.error_code is None:
            return None
        return ErrorContext(
            code=self.error_code,
            subtype=self.subtype or "generic",
            message=self.message,
            context=self.context,
        )

    def __str__(self) -> str:
        if self.error_code:
            return f"[{self.error_code.value}] {self.message}"
        return self.message


class ConfigurationError(OrthorecError):
    """Exception raised for configuration-related errors."""

    def __init__(
        self,
        message: str,
        config_path: Optional[str] = None,
        field: Optional[str] = None,
        **kwargs,
    ):
        """
        Initialize configuration error.

        Args:
            message: Error message
            config_path: Path to configuration file (if applicable)
            field: Configuration field that caused the error (if applicable)
            **kwargs: Additional arguments passed to base class
        """
        context = kwargs.pop("context", {})
        if config_path:
            context["config_path"] = config_path
        if field:
            context["field"] = field

        super().__init__(
            message,
            error_code=ErrorCode.VALIDATION_ERROR,
            subtype="configuration",
            context=context,
            **kwargs,
        )
        self.config_path = config_path
        self.field = field


class ParseError(OrthorecError):
    """Exception raised when operator, scalar or basis text cannot be parsed."""

    def __init__(
        self,
        message: str,
        text: Optional[str] = None,
        position: Optional[int] = None,
        **kwargs,
    ):
        context = kwargs.pop("context", {})
        if text is not None:
            context["text"] = text
        if position is not None:
            context["position"] = position

        super().__init__(
            message,
            error_code=ErrorCode.PARSE_ERROR,
            subtype=kwargs.pop("subtype", "syntax"),
            context=context,
            **kwargs,
        )
        self.text = text
        self.position = position


class AlgebraError(OrthorecError):
    """Exception raised when an algebraic precondition is violated."""

    def __init__(
        self,
        message: str,
        operation: Optional[str] = None,
        **kwargs,
    ):
        """
        Initialize algebra error.

        Args:
            message: Error message
            operation: Name of the operation that failed (e.g., "right_divmod")
            **kwargs: Additional arguments passed to base class
        """
        context = kwargs.pop("context", {})
        if operation:
            context["operation"] = operation

        super().__init__(
            message,
            error_code=ErrorCode.ALGEBRA_ERROR,
            subtype=kwargs.pop("subtype", "precondition"),
            context=context,
            **kwargs,
        )
        self.operation = operation


class FamilyError(OrthorecError):
    """Exception raised for unknown families or inadmissible parameters."""

    def __init__(
        self,
        message: str,
        family: Optional[str] = None,
        parameter: Optional[str] = None,
        **kwargs,
    ):
        context = kwargs.pop("context", {})
        if family:
            context["family"] = family
        if parameter:
            context["parameter"] = parameter

        super().__init__(
            message,
            error_code=ErrorCode.VALIDATION_ERROR,
            subtype=kwargs.pop("subtype", "family"),
            context=context,
            **kwargs,
        )
        self.family = family
        self.parameter = parameter


class HypothesisError(OrthorecError):
    """Exception raised when the divisibility hypothesis of a singular mode fails."""

    def __init__(
        self,
        message: str,
        mode: Optional[str] = None,
        failing_index: Optional[int] = None,
        **kwargs,
    ):
        """
        Initialize hypothesis error.

        Args:
            message: Error message
            mode: Mode whose hypothesis failed ("theta" or "endpoint")
            failing_index: Derivative order k for which the divisibility fails
            **kwargs: Additional arguments passed to base class
        """
        context = kwargs.pop("context", {})
        if mode:
            context["mode"] = mode
        if failing_index is not None:
            context["failing_index"] = failing_index

        super().__init__(
            message,
            error_code=ErrorCode.HYPOTHESIS_ERROR,
            subtype=kwargs.pop("subtype", "divisibility"),
            context=context,
            **kwargs,
        )
        self.mode = mode
        self.failing_index = failing_index


class UnsupportedModeError(OrthorecError):
    """Exception raised when a mode is not available for a family."""

    def __init__(
        self,
        message: str,
        family: Optional[str] = None,
        mode: Optional[str] = None,
        **kwargs,
    ):
        context = kwargs.pop("context", {})
        if family:
            context["family"] = family
        if mode:
            context["mode"] = mode

        super().__init__(
            message,
            error_code=ErrorCode.UNSUPPORTED_MODE,
            subtype="mode",
            context=context,
            **kwargs,
        )
        self.family = family
        self.mode = mode


class OracleError(OrthorecError):
    """Exception raised by the verification oracle."""

    def __init__(
        self,
        message: str,
        window: Optional[int] = None,
        **kwargs,
    ):
        context = kwargs.pop("context", {})
        if window is not None:
            context["window"] = window

        super().__init__(
            message,
            error_code=ErrorCode.ORACLE_ERROR,
            subtype=kwargs.pop("subtype", "oracle"),
            context=context,
            **kwargs,
        )
        self.window = window


class MismatchError(OrthorecError):
    """Exception raised when a computed recurrence differs from the expected one."""

    def __init__(
        self,
        message: str,
        case: Optional[str] = None,
        **kwargs,
    ):
        context = kwargs.pop("context", {})
        if case:
            context["case"] = case

        super().__init__(
            message,
            error_code=ErrorCode.MISMATCH_ERROR,
            subtype=kwargs.pop("subtype", "recurrence"),
            context=context,
            **kwargs,
        )
        self.case = case
