"""
Matrices service layer - construction, exact verification and powers
"""

import logging
from typing import Iterator, List, Sequence

from butson.cyclotomic import CycInt, add, from_int, is_zero_coeffs, mul, residue
from butson.matrices.models import (
    CycMatrix, GramCell, RootMatrix, StructureFlags, VerificationReport
)
from butson.shared.arithmetic import lcm
from butson.shared.exceptions import InvalidArgumentError
from butson.shared.validation import validate_exponent_row, validate_positive_int

logger = logging.getLogger(__name__)


def _gram_cell_coeffs(M: RootMatrix, j: int, k: int) -> List[int]:
    """Coefficients of sum_c zeta^(a[j][c] - a[k][c]) in group-ring form"""
    l = M.l
    acc = [0] * l
    for a, b in zip(M.exps[j], M.exps[k]):
        acc[(a - b) % l] += 1
    return acc


def verify_bh(M: RootMatrix) -> VerificationReport:
    """Exact check of M M^* = m I over Z[zeta_l], upper triangle only"""
    m, l = M.m, M.l
    expected_diagonal = residue(from_int(l, m))

    for j in range(m):
        for k in range(j, m):
            coeffs = _gram_cell_coeffs(M, j, k)
            if j == k:
                ok = residue(CycInt(l, coeffs)) == expected_diagonal
            else:
                ok = is_zero_coeffs(l, coeffs)
            if not ok:
                logger.info(f"Matrix BH({m},{l}) check failed at Gram cell ({j}, {k})")
                return VerificationReport(
                    is_bh=False,
                    m=m,
                    l=l,
                    failing_cell=GramCell(row=j, col=k, coeffs=coeffs, expected=m if j == k else 0)
                )

    logger.info(f"Matrix verified as BH({m},{l})")
    return VerificationReport(is_bh=True, m=m, l=l)


def gram(M: RootMatrix) -> CycMatrix:
    """Full exact Gram matrix M M^*"""
    rows = [[CycInt(M.l, _gram_cell_coeffs(M, j, k)) for k in range(M.m)] for j in range(M.m)]
    return CycMatrix(M.l, rows)


def circulant(l: int, first_row: Sequence[int]) -> RootMatrix:
    """Row j is the first row cyclically shifted right j places"""
    validate_positive_int(l, "l")
    row = validate_exponent_row(first_row, l, "first_row")
    m = len(row)
    exps = tuple(tuple(row[(k - j) % m] for k in range(m)) for j in range(m))
    return RootMatrix(m=m, l=l, exps=exps)


def fourier(m: int) -> RootMatrix:
    """The BH(m, m) Fourier matrix, exps[j][k] = j*k mod m"""
    validate_positive_int(m, "m")
    return RootMatrix(m=m, l=m, exps=tuple(tuple((j * k) % m for k in range(m)) for j in range(m)))


def kronecker(A: RootMatrix, B: RootMatrix) -> RootMatrix:
    """Kronecker product over mu_L, L = lcm(A.l, B.l)"""
    L = lcm(A.l, B.l)
    sa, sb = L // A.l, L // B.l
    m = A.m * B.m
    exps = []
    for i1 in range(A.m):
        for i2 in range(B.m):
            exps.append(tuple(
                (A.exps[i1][j1] * sa + B.exps[i2][j2] * sb) % L
                for j1 in range(A.m)
                for j2 in range(B.m)
            ))
    return RootMatrix(m=m, l=L, exps=tuple(exps))


def is_symmetric(M: RootMatrix) -> bool:
    return all(M.exps[j][k] == M.exps[k][j] for j in range(M.m) for k in range(j + 1, M.m))


def is_circulant(M: RootMatrix) -> bool:
    m = M.m
    first = M.exps[0]
    return all(M.exps[j][k] == first[(k - j) % m] for j in range(1, m) for k in range(m))


def is_unreal(M: RootMatrix) -> bool:
    """No entry is real, i.e. no exponent a with 2a = 0 mod l"""
    return all((2 * a) % M.l != 0 for row in M.exps for a in row)


def structure_flags(M: RootMatrix) -> StructureFlags:
    return StructureFlags(symmetric=is_symmetric(M), circulant=is_circulant(M), unreal=is_unreal(M))


def matmul(A: CycMatrix, B: CycMatrix) -> CycMatrix:
    """Exact matrix product over Z[zeta_N]"""
    if A.m != B.m or A.order != B.order:
        raise InvalidArgumentError(
            "Matrix product needs equal dimension and order",
            details={"left": [A.m, A.order], "right": [B.m, B.order]}
        )
    m, n = A.m, A.order
    rows = []
    for j in range(m):
        row = []
        for k in range(m):
            acc = from_int(n, 0)
            for s in range(m):
                acc = add(acc, mul(A.entries[j][s], B.entries[s][k]))
            row.append(acc)
        rows.append(row)
    return CycMatrix(n, rows)


def power(M: RootMatrix, i: int) -> CycMatrix:
    """M^i over Z[zeta_l] by binary exponentiation"""
    validate_positive_int(i, "i")
    result = None
    base = M.to_cyc()
    exponent = i
    while exponent:
        if exponent & 1:
            result = base if result is None else matmul(result, base)
        exponent >>= 1
        if exponent:
            base = matmul(base, base)
    assert result is not None
    return result


def power_sequence(M: RootMatrix, upto: int) -> Iterator[CycMatrix]:
    """Yield M^1, ..., M^upto, each step a left multiplication by M"""
    m, l = M.m, M.l
    current = [[_root_vector(l, a) for a in row] for row in M.exps]
    for step in range(1, upto + 1):
        if step > 1:
            current = _left_multiply(M, current)
        yield CycMatrix(l, [[CycInt(l, entry) for entry in row] for row in current])


def _root_vector(l: int, a: int) -> List[int]:
    vector = [0] * l
    vector[a] = 1
    return vector


def _left_multiply(M: RootMatrix, X: List[List[List[int]]]) -> List[List[List[int]]]:
    # multiplying by zeta^a rotates a coefficient vector by a places
    m, l = M.m, M.l
    out = []
    for j in range(m):
        out_row = []
        for k in range(m):
            acc = [0] * l
            for s in range(m):
                shift = M.exps[j][s]
                vector = X[s][k]
                for t, c in enumerate(vector):
                    if c:
                        acc[(t + shift) % l] += c
            out_row.append(acc)
        out.append(out_row)
    return out
