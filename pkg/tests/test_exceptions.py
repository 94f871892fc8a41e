"""Tests for custom exception classes."""

import pytest
from src.core.exceptions import (
    IntervalSepException,
    InvalidScalarError,
    DegenerateIntervalError,
    EmptyInstanceError,
    InstanceTooLargeError,
    UnequalLengthsError,
    ReconstructionError,
    InvariantViolationError,
    ParseError,
    InvalidInputError,
    VerificationError
)


class TestIntervalSepException:
    """Tests for base exception class."""

    def test_basic_exception(self):
        """Test basic exception creation."""
        exc = IntervalSepException("Test message")
        assert exc.message == "Test message"
        assert exc.error_code == "IntervalSepException"
        assert str(exc) == "Test message"

    def test_exception_with_code(self):
        """Test exception with custom error code."""
        exc = IntervalSepException("Test message", "CUSTOM_CODE")
        assert exc.error_code == "CUSTOM_CODE"


class TestInputErrors:
    """Tests for errors raised while reading input."""

    def test_invalid_scalar(self):
        """Test InvalidScalarError keeps the offending value."""
        exc = InvalidScalarError("x1", "unparseable")
        assert exc.error_code == "INVALID_SCALAR"
        assert exc.value == "x1"
        assert "unparseable" in exc.message

    def test_degenerate_interval(self):
        """Test DegenerateIntervalError names the ordinal."""
        exc = DegenerateIntervalError("1", "1", 3)
        assert exc.error_code == "DEGENERATE_INTERVAL"
        assert exc.ordinal == 3
        assert "#3" in exc.message

    def test_parse_error_with_line(self):
        """Test ParseError prefixes the line number."""
        exc = ParseError("bad token", line_number=4)
        assert exc.message == "line 4: bad token"
        assert exc.error_code == "PARSE_ERROR"
        assert exc.line_number == 4

    def test_parse_error_without_line(self):
        exc = ParseError("empty file")
        assert exc.message == "empty file"
        assert exc.line_number is None

    def test_invalid_input(self):
        """Test InvalidInputError with and without field."""
        assert InvalidInputError("bad").field is None
        exc = InvalidInputError("bad sizes", field="sizes")
        assert exc.error_code == "INVALID_INPUT"
        assert exc.field == "sizes"


class TestSolverErrors:
    """Tests for errors raised by solvers and oracles."""

    def test_empty_instance(self):
        exc = EmptyInstanceError()
        assert exc.error_code == "EMPTY_INSTANCE"

    def test_instance_too_large(self):
        """Test InstanceTooLargeError keeps n and limit."""
        exc = InstanceTooLargeError(11, 10)
        assert exc.error_code == "INSTANCE_TOO_LARGE"
        assert (exc.n, exc.limit) == (11, 10)
        assert "11" in exc.message

    def test_unequal_lengths(self):
        exc = UnequalLengthsError([1, 2])
        assert exc.error_code == "UNEQUAL_LENGTHS"
        assert exc.lengths == [1, 2]

    def test_reconstruction(self):
        """Test ReconstructionError keeps both deltas."""
        exc = ReconstructionError("mismatch", expected=3, actual=4)
        assert exc.error_code == "RECONSTRUCTION_MISMATCH"
        assert (exc.expected, exc.actual) == (3, 4)

    def test_invariant_violation(self):
        """Test InvariantViolationError joins the violations."""
        exc = InvariantViolationError(["a broke", "b broke"], step=5)
        assert exc.error_code == "INVARIANT_VIOLATION"
        assert exc.step == 5
        assert exc.message == "Invariant violated after step 5: a broke; b broke"

    def test_verification(self):
        exc = VerificationError("intervals 1 and 2 overlap")
        assert exc.error_code == "VERIFICATION_FAILED"


class TestExceptionInheritance:
    """Tests for exception inheritance."""

    def test_all_inherit_from_base(self):
        """Test all custom exceptions inherit from IntervalSepException."""
        for exc in [
            InvalidScalarError("x"),
            DegenerateIntervalError(1, 1, 1),
            EmptyInstanceError(),
            InstanceTooLargeError(11, 10),
            UnequalLengthsError([1, 2]),
            ReconstructionError("m"),
            InvariantViolationError(["v"], 2),
            ParseError("p"),
            InvalidInputError("i"),
            VerificationError("v"),
        ]:
            assert isinstance(exc, IntervalSepException)

    def test_can_catch_as_base(self):
        """Test catching with the base class."""
        with pytest.raises(IntervalSepException):
            raise EmptyInstanceError()
