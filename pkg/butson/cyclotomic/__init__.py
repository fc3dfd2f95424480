"""
Exact arithmetic in the cyclotomic integers Z[zeta_N]
"""

from butson.cyclotomic.polynomials import IntPoly, cyclotomic_polynomial
from butson.cyclotomic.ring import (
    CycInt,
    add,
    as_root_of_unity,
    conj,
    embed,
    equals,
    eval_complex,
    find_scaled_root,
    from_int,
    from_root,
    is_zero,
    is_zero_coeffs,
    mul,
    neg,
    power,
    residue,
    scale,
    sub,
    zero,
)

__all__ = [
    "IntPoly", "cyclotomic_polynomial", "CycInt", "add", "as_root_of_unity", "conj",
    "embed", "equals", "eval_complex", "find_scaled_root", "from_int", "from_root",
    "is_zero", "is_zero_coeffs", "mul", "neg", "power", "residue", "scale", "sub", "zero",
]
