"""
Custom exceptions for the butson package
"""

from typing import Any, Dict, Optional


class ButsonError(Exception):
    """Base exception class for the butson package"""

    def __init__(
        self,
        message: str,
        code: str,
        details: Optional[Dict[str, Any]] = None,
        exit_code: int = 1
    ):
        self.message = message
        self.code = code
        self.details = details or {}
        self.exit_code = exit_code
        super().__init__(message)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "message": self.message,
            "code": self.code,
            "details": self.details
        }


class InvalidArgumentError(ButsonError):
    """Invalid argument exception"""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(
            message=message,
            code="INVALID_ARGUMENT",
            details=details,
            exit_code=2
        )


class MatrixParseError(ButsonError):
    """Matrix text could not be parsed"""

    def __init__(self, message: str, line: int, column: int, source: str = "<input>"):
        self.line = line
        self.column = column
        super().__init__(
            message=f"{source}:{line}:{column}: {message}",
            code="MATRIX_PARSE_ERROR",
            details={"source": source, "line": line, "column": column},
            exit_code=2
        )


class NumericFailureError(ButsonError):
    """Floating-point eigensolver did not produce an acceptable result"""

    def __init__(self, message: str, index: Optional[int] = None):
        self.index = index
        super().__init__(
            message=message,
            code="NUMERIC_FAILURE",
            details={"index": index},
            exit_code=5
        )


class PreconditionError(ButsonError):
    """Operation precondition does not hold"""

    def __init__(self, message: str, reason: str, exit_code: int = 1):
        self.reason = reason
        super().__init__(
            message=message,
            code="PRECONDITION_FAILED",
            details={"reason": reason},
            exit_code=exit_code
        )


class ConfigurationError(ButsonError):
    """Invalid configuration exception"""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(
            message=message,
            code="CONFIGURATION_ERROR",
            details=details,
            exit_code=2
        )


class CheckpointError(ButsonError):
    """Checkpoint cannot be read, written or resumed"""

    def __init__(self, message: str, path: Optional[str] = None):
        super().__init__(
            message=message,
            code="CHECKPOINT_ERROR",
            details={"path": path} if path else {},
            exit_code=2
        )
