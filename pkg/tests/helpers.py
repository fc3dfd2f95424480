"""
Shared assertions for float-valued results
"""

import cmath
import math
from typing import Iterable, List


def turn(num: int, den: int) -> complex:
    """e^(2 pi i num/den)"""
    return cmath.exp(2j * math.pi * num / den)


def multiset_close(actual: Iterable[complex], expected: Iterable[complex], tol: float = 1e-9) -> bool:
    """Greedy multiset matching of complex values within tol"""
    remaining: List[complex] = list(expected)
    for z in actual:
        match = next((w for w in remaining if abs(z - w) < tol), None)
        if match is None:
            return False
        remaining.remove(match)
    return not remaining
