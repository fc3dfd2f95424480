"""
Integer helpers shared by the exact and numeric layers
"""

from functools import lru_cache, reduce
from math import gcd
from typing import List, Tuple


def lcm(*values: int) -> int:
    """Least common multiple of positive integers (1 for no arguments)"""
    return reduce(lambda a, b: a * b // gcd(a, b), values, 1)


@lru_cache(maxsize=1024)
def divisors(n: int) -> Tuple[int, ...]:
    """Positive divisors of n in increasing order"""
    small: List[int] = []
    large: List[int] = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return tuple(small + large[::-1])


@lru_cache(maxsize=4096)
def euler_phi(n: int) -> int:
    """Euler's totient"""
    result = n
    p = 2
    rest = n
    while p * p <= rest:
        if rest % p == 0:
            while rest % p == 0:
                rest //= p
            result -= result // p
        p += 1
    if rest > 1:
        result -= result // rest
    return result


def reduced_fraction(numerator: int, denominator: int) -> Tuple[int, int]:
    """Reduce numerator/denominator with numerator taken mod denominator"""
    numerator %= denominator
    g = gcd(numerator, denominator)
    return numerator // g, denominator // g
