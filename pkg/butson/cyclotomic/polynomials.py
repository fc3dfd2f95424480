"""
Integer polynomials and cyclotomic polynomials
"""

import logging
from functools import lru_cache
from typing import Iterable, List, Sequence, Tuple

from butson.shared.arithmetic import divisors
from butson.shared.exceptions import InvalidArgumentError

logger = logging.getLogger(__name__)


class IntPoly:
    """Polynomial with arbitrary-precision integer coefficients, ascending degree"""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int]):
        trimmed = [int(c) for c in coeffs]
        while trimmed and trimmed[-1] == 0:
            trimmed.pop()
        object.__setattr__(self, "coeffs", tuple(trimmed))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("IntPoly is immutable")

    @property
    def degree(self) -> int:
        """Degree, -1 for the zero polynomial"""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.leading == 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        return poly_mul(self, other)

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return poly_sub(self, other)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for power in range(self.degree, -1, -1):
            c = self.coeffs[power]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            magnitude = abs(c)
            if power == 0:
                body = str(magnitude)
            else:
                monomial = "x" if power == 1 else f"x^{power}"
                body = monomial if magnitude == 1 else f"{magnitude}*{monomial}"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


def poly_mul(a: IntPoly, b: IntPoly) -> IntPoly:
    if a.is_zero() or b.is_zero():
        return IntPoly([])
    out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, ca in enumerate(a.coeffs):
        if ca:
            for j, cb in enumerate(b.coeffs):
                out[i + j] += ca * cb
    return IntPoly(out)


def poly_sub(a: IntPoly, b: IntPoly) -> IntPoly:
    size = max(len(a.coeffs), len(b.coeffs))
    out = list(a.coeffs) + [0] * (size - len(a.coeffs))
    for i, c in enumerate(b.coeffs):
        out[i] -= c
    return IntPoly(out)


def reduce_coefficients(coeffs: Sequence[int], modulus: IntPoly) -> List[int]:
    """Remainder of sum coeffs[t] x^t modulo a monic polynomial, as exactly deg(modulus) coefficients"""
    if not modulus.is_monic():
        raise InvalidArgumentError("Reduction requires a monic modulus", details={"modulus": str(modulus)})

    degree = modulus.degree
    remainder = list(coeffs)
    if len(remainder) < degree:
        remainder.extend([0] * (degree - len(remainder)))
    terms = _lower_terms(modulus)

    for top in range(len(remainder) - 1, degree - 1, -1):
        c = remainder[top]
        if c:
            base = top - degree
            for k, mk in terms:
                remainder[base + k] -= c * mk
            remainder[top] = 0

    return remainder[:degree]


def divmod_monic(a: IntPoly, b: IntPoly) -> Tuple[IntPoly, IntPoly]:
    """Exact long division by a monic polynomial"""
    if not b.is_monic():
        raise InvalidArgumentError("Division requires a monic divisor", details={"divisor": str(b)})

    degree = b.degree
    remainder = list(a.coeffs)
    if len(remainder) <= degree:
        return IntPoly([]), IntPoly(remainder)

    quotient = [0] * (len(remainder) - degree)
    terms = _lower_terms(b)
    for top in range(len(remainder) - 1, degree - 1, -1):
        c = remainder[top]
        if c:
            base = top - degree
            quotient[base] = c
            for k, bk in terms:
                remainder[base + k] -= c * bk
            remainder[top] = 0

    return IntPoly(quotient), IntPoly(remainder[:degree])


def _lower_terms(monic: IntPoly) -> Tuple[Tuple[int, int], ...]:
    return tuple((k, c) for k, c in enumerate(monic.coeffs[:-1]) if c)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> IntPoly:
    """
    The n-th cyclotomic polynomial, by exact division of x^n - 1 by the
    cyclotomic polynomials of the proper divisors of n
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise InvalidArgumentError(f"Cyclotomic polynomial order must be a positive integer, got {n}")

    quotient = IntPoly([-1] + [0] * (n - 1) + [1])
    for d in divisors(n)[:-1]:
        quotient, remainder = divmod_monic(quotient, cyclotomic_polynomial(d))
        if not remainder.is_zero():
            raise ArithmeticError(f"Inexact division while building Phi_{n}")

    logger.debug(f"Computed Phi_{n} of degree {quotient.degree}")
    return quotient
