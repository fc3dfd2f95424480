"""
Unit tests for validation utilities
"""

import pytest

from butson.shared.exceptions import InvalidArgumentError
from butson.shared.validation import (
    parse_range,
    validate_exponent_row,
    validate_positive_int,
    validate_range,
    validate_square,
    validate_workers,
)


@pytest.mark.unit
class TestPositiveIntValidation:
    """Test positive integer validation"""

    def test_valid_value(self):
        """Test a positive integer passes through"""
        assert validate_positive_int(5, "m") == 5

    def test_zero(self):
        """Test zero raises error"""
        with pytest.raises(InvalidArgumentError, match="m must be a positive integer"):
            validate_positive_int(0, "m")

    def test_non_integer(self):
        """Test a float raises error"""
        with pytest.raises(InvalidArgumentError, match="l must be an integer"):
            validate_positive_int(2.0, "l")

    def test_bool_rejected(self):
        """Test True is not accepted as 1"""
        with pytest.raises(InvalidArgumentError):
            validate_positive_int(True, "m")


@pytest.mark.unit
class TestExponentRowValidation:
    """Test exponent row validation"""

    def test_valid_row(self):
        """Test a valid row is returned as a tuple"""
        assert validate_exponent_row([1, 3, 4, 4, 3], 5) == (1, 3, 4, 4, 3)

    def test_exponent_too_large(self):
        """Test an exponent equal to l raises error"""
        with pytest.raises(InvalidArgumentError, match=r"row\[2\] = 5 is outside \[0, 5\)"):
            validate_exponent_row([0, 1, 5], 5)

    def test_negative_exponent(self):
        """Test a negative exponent raises error"""
        with pytest.raises(InvalidArgumentError, match="outside"):
            validate_exponent_row([-1], 4)

    def test_empty_row(self):
        """Test an empty row raises error"""
        with pytest.raises(InvalidArgumentError, match="must not be empty"):
            validate_exponent_row([], 2)


@pytest.mark.unit
class TestSquareValidation:
    """Test shape validation"""

    def test_square(self):
        """Test a square array passes"""
        validate_square([[0, 1], [1, 0]], 2)

    def test_short_row(self):
        """Test a short row raises error"""
        with pytest.raises(InvalidArgumentError, match="Row 1 has 1 entries, expected 2"):
            validate_square([[0, 1], [1]], 2)

    def test_wrong_row_count(self):
        """Test a missing row raises error"""
        with pytest.raises(InvalidArgumentError, match="Expected 3 rows, got 2"):
            validate_square([[0, 0, 0], [0, 0, 0]], 3)


@pytest.mark.unit
class TestRangeValidation:
    """Test rank range parsing and validation"""

    def test_parse_range(self):
        """Test lo..hi parsing"""
        assert parse_range("10..20") == (10, 20)
        assert parse_range(" 0 .. 0 ") == (0, 0)

    def test_parse_invalid_range(self):
        """Test malformed ranges raise error"""
        for text in ("10-20", "..5", "a..b", "-1..3"):
            with pytest.raises(InvalidArgumentError, match="Invalid range"):
                parse_range(text)

    def test_none_range(self):
        """Test None means the full range"""
        assert validate_range(None, 100) is None

    def test_empty_range_allowed(self):
        """Test lo == hi is a valid empty range"""
        assert validate_range((0, 0), 3125) == (0, 0)

    def test_reversed_range(self):
        """Test hi < lo raises error"""
        with pytest.raises(InvalidArgumentError, match="must satisfy"):
            validate_range((5, 4), 100)

    def test_range_past_end(self):
        """Test hi beyond l^m raises error"""
        with pytest.raises(InvalidArgumentError, match="exceeds the number of rows 3125"):
            validate_range((0, 3126), 3125)


@pytest.mark.unit
class TestWorkersValidation:
    """Test worker count validation"""

    def test_none_defaults_to_one(self):
        """Test None uses the default"""
        assert validate_workers(None) == 1

    def test_valid_workers(self):
        """Test a valid worker count"""
        assert validate_workers(8) == 8

    def test_invalid_workers(self):
        """Test out-of-range worker counts raise error"""
        for workers in (0, 257):
            with pytest.raises(InvalidArgumentError, match="between 1 and 256"):
                validate_workers(workers)
