"""Custom exception classes for intervalsep.

All exceptions inherit from IntervalSepException, which carries a
human-readable message and a machine-readable error code. The CLI maps the
classes to exit codes in one table (see src/cli/commands.py).
"""

from typing import Any, List, Optional


class IntervalSepException(Exception):
    """Base exception class for intervalsep errors.

    All custom exceptions should inherit from this class.
    Provides error code and message structure.
    """

    def __init__(self, message: str, error_code: Optional[str] = None):
        """Initialize exception.

        Args:
            message: Human-readable error message
            error_code: Machine-readable error code
        """
        self.message = message
        self.error_code = error_code or self.__class__.__name__
        super().__init__(self.message)


class InvalidScalarError(IntervalSepException):
    """Exception raised when a value cannot be turned into an exact rational."""

    def __init__(self, value: Any, reason: str = "not an exact number"):
        super().__init__(
            message=f"Invalid number {value!r}: {reason}",
            error_code="INVALID_SCALAR"
        )
        self.value = value


class DegenerateIntervalError(IntervalSepException):
    """Exception raised when an interval has left >= right."""

    def __init__(self, left: Any, right: Any, ordinal: int):
        super().__init__(
            message=f"Interval #{ordinal} [{left}, {right}] has non-positive length",
            error_code="DEGENERATE_INTERVAL"
        )
        self.left = left
        self.right = right
        self.ordinal = ordinal


class EmptyInstanceError(IntervalSepException):
    """Exception raised when a solver receives zero intervals."""

    def __init__(self):
        super().__init__(message="Instance has no intervals", error_code="EMPTY_INSTANCE")


class InvalidPermutationError(IntervalSepException):
    """Exception raised when an order has duplicate or out-of-range indices."""

    def __init__(self, message: str):
        super().__init__(message=message, error_code="INVALID_PERMUTATION")


class InstanceTooLargeError(IntervalSepException):
    """Exception raised when brute force is asked for more intervals than it allows."""

    def __init__(self, n: int, limit: int):
        super().__init__(
            message=f"Brute force supports at most {limit} intervals, got {n}",
            error_code="INSTANCE_TOO_LARGE"
        )
        self.n = n
        self.limit = limit


class UnequalLengthsError(IntervalSepException):
    """Exception raised when the equal-length greedy gets intervals of different lengths."""

    def __init__(self, lengths: List[Any]):
        shown = ", ".join(str(x) for x in lengths[:5])
        super().__init__(
            message=f"Intervals must all have the same length, found: {shown}",
            error_code="UNEQUAL_LENGTHS"
        )
        self.lengths = lengths


class ReconstructionError(IntervalSepException):
    """Exception raised when replaying the branch tree does not reproduce the solver's delta."""

    def __init__(self, message: str, expected: Any = None, actual: Any = None):
        super().__init__(message=message, error_code="RECONSTRUCTION_MISMATCH")
        self.expected = expected
        self.actual = actual


class InvariantViolationError(IntervalSepException):
    """Exception raised in debug mode when the fast solver's state breaks an invariant."""

    def __init__(self, violations: List[str], step: int):
        super().__init__(
            message=f"Invariant violated after step {step}: " + "; ".join(violations),
            error_code="INVARIANT_VIOLATION"
        )
        self.violations = violations
        self.step = step


class ParseError(IntervalSepException):
    """Exception raised when an instance or solution file cannot be parsed."""

    def __init__(self, message: str, line_number: Optional[int] = None):
        where = f"line {line_number}: " if line_number is not None else ""
        super().__init__(message=f"{where}{message}", error_code="PARSE_ERROR")
        self.line_number = line_number


class InvalidInputError(IntervalSepException):
    """Exception raised when command options are individually valid but inconsistent."""

    def __init__(self, message: str, field: Optional[str] = None):
        super().__init__(message=message, error_code="INVALID_INPUT")
        self.field = field


class VerificationError(IntervalSepException):
    """Exception raised when a stated solution is infeasible or its delta is wrong."""

    def __init__(self, message: str):
        super().__init__(message=message, error_code="VERIFICATION_FAILED")
