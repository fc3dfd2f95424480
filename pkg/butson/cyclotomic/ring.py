"""
Cyclotomic integers in group-ring form.

A CycInt of order N stores one integer coefficient per exponent class mod N,
so the same ring element has many representations. Every equality decision
goes through the residue of the coefficient polynomial modulo Phi_N.
"""

import cmath
import math
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

from butson.cyclotomic.polynomials import cyclotomic_polynomial, reduce_coefficients
from butson.shared.exceptions import InvalidArgumentError


class CycInt:
    """Immutable element of Z[zeta_N]; coeffs[t] is the coefficient of zeta_N^t"""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Sequence[int]):
        if isinstance(order, bool) or not isinstance(order, int) or order < 1:
            raise InvalidArgumentError(f"Order must be a positive integer, got {order}")
        values = tuple(int(c) for c in coeffs)
        if len(values) != order:
            raise InvalidArgumentError(
                f"Expected {order} coefficients, got {len(values)}",
                details={"order": order, "length": len(values)}
            )
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", values)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("CycInt is immutable")

    def __add__(self, other: "CycInt") -> "CycInt":
        return add(self, other)

    def __sub__(self, other: "CycInt") -> "CycInt":
        return sub(self, other)

    def __neg__(self) -> "CycInt":
        return neg(self)

    def __mul__(self, other: "CycInt") -> "CycInt":
        return mul(self, other)

    def __pow__(self, exponent: int) -> "CycInt":
        return power(self, exponent)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CycInt):
            return NotImplemented
        return equals(self, other)

    # ring equality is not coefficient equality, so there is no consistent hash
    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"CycInt({self.order}, {list(self.coeffs)})"

    def __str__(self) -> str:
        terms = []
        for t, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if t == 0:
                terms.append(str(c))
            else:
                root = f"z{self.order}^{t}"
                terms.append(root if c == 1 else f"-{root}" if c == -1 else f"{c}*{root}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"


def _make(order: int, coeffs: List[int]) -> CycInt:
    value = CycInt.__new__(CycInt)
    object.__setattr__(value, "order", order)
    object.__setattr__(value, "coeffs", tuple(coeffs))
    return value


def _check_same_order(a: CycInt, b: CycInt) -> None:
    if a.order != b.order:
        raise InvalidArgumentError(
            f"Order mismatch: {a.order} vs {b.order}; embed into a common order first",
            details={"left": a.order, "right": b.order}
        )


def zero(order: int) -> CycInt:
    return CycInt(order, [0] * order)


def from_int(order: int, value: int) -> CycInt:
    """The rational integer value as an element of Z[zeta_order]"""
    coeffs = [0] * order
    coeffs[0] = value
    return CycInt(order, coeffs)


def from_root(order: int, t: int) -> CycInt:
    """zeta_order^t, with t reduced mod order"""
    if isinstance(order, bool) or not isinstance(order, int) or order < 1:
        raise InvalidArgumentError(f"Order must be a positive integer, got {order}")
    coeffs = [0] * order
    coeffs[t % order] = 1
    return _make(order, coeffs)


def add(a: CycInt, b: CycInt) -> CycInt:
    _check_same_order(a, b)
    return _make(a.order, [x + y for x, y in zip(a.coeffs, b.coeffs)])


def sub(a: CycInt, b: CycInt) -> CycInt:
    _check_same_order(a, b)
    return _make(a.order, [x - y for x, y in zip(a.coeffs, b.coeffs)])


def neg(a: CycInt) -> CycInt:
    return _make(a.order, [-x for x in a.coeffs])


def scale(a: CycInt, c: int) -> CycInt:
    return _make(a.order, [c * x for x in a.coeffs])


def mul(a: CycInt, b: CycInt) -> CycInt:
    """Cyclic convolution of coefficient sequences"""
    _check_same_order(a, b)
    n = a.order
    out = [0] * n
    right = [(j, cb) for j, cb in enumerate(b.coeffs) if cb]
    for i, ca in enumerate(a.coeffs):
        if ca:
            for j, cb in right:
                k = i + j
                if k >= n:
                    k -= n
                out[k] += ca * cb
    return _make(n, out)


def conj(a: CycInt) -> CycInt:
    """Complex conjugation: zeta^t maps to zeta^(-t)"""
    n = a.order
    out = [0] * n
    for t, c in enumerate(a.coeffs):
        out[-t % n] = c
    return _make(n, out)


def power(a: CycInt, exponent: int) -> CycInt:
    """a^exponent for exponent >= 0 by binary exponentiation"""
    if exponent < 0:
        raise InvalidArgumentError(f"Exponent must be non-negative, got {exponent}")
    result = from_int(a.order, 1)
    base = a
    while exponent:
        if exponent & 1:
            result = mul(result, base)
        exponent >>= 1
        if exponent:
            base = mul(base, base)
    return result


def residue(a: CycInt) -> Tuple[int, ...]:
    """Canonical key: remainder of the coefficient polynomial modulo Phi_N"""
    return tuple(reduce_coefficients(a.coeffs, cyclotomic_polynomial(a.order)))


@lru_cache(maxsize=512)
def _monomial_residues(order: int) -> Tuple[Tuple[int, ...], ...]:
    return tuple(residue(from_root(order, t)) for t in range(order))


def is_zero(a: CycInt) -> bool:
    return not any(residue(a))


def is_zero_coeffs(order: int, coeffs: Sequence[int]) -> bool:
    """is_zero for a raw coefficient vector, without building a CycInt"""
    return not any(reduce_coefficients(coeffs, cyclotomic_polynomial(order)))


def equals(a: CycInt, b: CycInt) -> bool:
    _check_same_order(a, b)
    return is_zero(sub(a, b))


def find_scaled_root(a: CycInt, c: int) -> Optional[int]:
    """The unique t in [0, N) with a == c * zeta_N^t, if any (c != 0)"""
    if c == 0:
        raise InvalidArgumentError("Scale must be nonzero")
    key = residue(a)
    for t, monomial in enumerate(_monomial_residues(a.order)):
        if all(x == c * y for x, y in zip(key, monomial)):
            return t
    return None


def as_root_of_unity(a: CycInt) -> Optional[int]:
    return find_scaled_root(a, 1)


def embed(a: CycInt, order: int) -> CycInt:
    """Image of a under Z[zeta_N] -> Z[zeta_order], zeta_N -> zeta_order^(order/N)"""
    if order % a.order != 0:
        raise InvalidArgumentError(
            f"Cannot embed order {a.order} into order {order}",
            details={"from": a.order, "to": order}
        )
    step = order // a.order
    out = [0] * order
    for t, c in enumerate(a.coeffs):
        out[t * step] = c
    return _make(order, out)


@lru_cache(maxsize=512)
def _unit_roots(order: int) -> Tuple[complex, ...]:
    return tuple(cmath.rect(1.0, 2.0 * math.pi * t / order) for t in range(order))


def eval_complex(a: CycInt) -> complex:
    """Double-precision value of a under zeta_N -> exp(2 pi i / N)"""
    total = 0j
    for c, root in zip(a.coeffs, _unit_roots(a.order)):
        if c:
            total += c * root
    return total
