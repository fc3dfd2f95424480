"""
Input validation utilities for the butson package
"""

import re
from typing import Any, Optional, Sequence, Tuple

from butson.shared.exceptions import InvalidArgumentError

RANGE_PATTERN = re.compile(r"^\s*(\d+)\s*\.\.\s*(\d+)\s*$")


def validate_positive_int(value: Any, field_name: str) -> int:
    """Validate a positive integer"""
    if isinstance(value, bool) or not isinstance(value, int):
        raise InvalidArgumentError(f"{field_name} must be an integer")

    if value < 1:
        raise InvalidArgumentError(
            f"{field_name} must be a positive integer",
            details={field_name: value}
        )

    return value


def validate_exponent_row(row: Sequence[int], l: int, field_name: str = "row") -> Tuple[int, ...]:
    """Validate a sequence of exponents in [0, l)"""
    if len(row) == 0:
        raise InvalidArgumentError(f"{field_name} must not be empty")

    validated = []
    for position, exponent in enumerate(row):
        if isinstance(exponent, bool) or not isinstance(exponent, int):
            raise InvalidArgumentError(
                f"{field_name}[{position}] must be an integer",
                details={"position": position}
            )
        if exponent < 0 or exponent >= l:
            raise InvalidArgumentError(
                f"{field_name}[{position}] = {exponent} is outside [0, {l})",
                details={"position": position, "exponent": exponent, "l": l}
            )
        validated.append(exponent)

    return tuple(validated)


def validate_square(rows: Sequence[Sequence[int]], m: int) -> None:
    """Validate that rows form an m x m array"""
    if len(rows) != m:
        raise InvalidArgumentError(
            f"Expected {m} rows, got {len(rows)}",
            details={"m": m, "rows": len(rows)}
        )

    for index, row in enumerate(rows):
        if len(row) != m:
            raise InvalidArgumentError(
                f"Row {index} has {len(row)} entries, expected {m}",
                details={"row": index, "length": len(row), "m": m}
            )


def parse_range(text: str) -> Tuple[int, int]:
    """Parse a 'lo..hi' rank range"""
    match = RANGE_PATTERN.match(text)
    if not match:
        raise InvalidArgumentError(f"Invalid range '{text}'. Use lo..hi")

    return int(match.group(1)), int(match.group(2))


def validate_range(bounds: Optional[Tuple[int, int]], total: int) -> Optional[Tuple[int, int]]:
    """Validate a half-open rank range within [0, total]"""
    if bounds is None:
        return None

    lo, hi = bounds
    if lo < 0 or hi < lo:
        raise InvalidArgumentError(
            f"Range {lo}..{hi} must satisfy 0 <= lo <= hi",
            details={"lo": lo, "hi": hi}
        )

    if hi > total:
        raise InvalidArgumentError(
            f"Range end {hi} exceeds the number of rows {total}",
            details={"hi": hi, "total": total}
        )

    return lo, hi


def validate_workers(workers: Optional[int]) -> int:
    """Validate worker count (defaults to 1)"""
    if workers is None:
        return 1

    if workers < 1 or workers > 256:
        raise InvalidArgumentError("Workers must be an integer between 1 and 256")

    return workers
