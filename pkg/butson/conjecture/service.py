"""
Conjecture service layer - classify the entries of sqrt(m)^(1-i) M^i
"""

import cmath
import logging
import math
from math import gcd
from typing import List, Optional

import numpy as np

from butson.conjecture.models import ConjectureVerdict, EntryClass, ExponentResult, RootValue
from butson.cyclotomic import CycInt, embed, find_scaled_root, mul
from butson.matrices.models import CycMatrix, RootMatrix
from butson.matrices.service import power, power_sequence
from butson.shared.arithmetic import lcm, reduced_fraction
from butson.shared.exceptions import PreconditionError
from butson.spectra.models import SpectrumReport
from butson.spectra.service import spectrum_report

logger = logging.getLogger(__name__)


def ladder_top(m: int, l: int, k: int) -> int:
    """Candidate root orders are the divisors of lcm(2l, 2k, 2m)"""
    return lcm(2 * l, 2 * k, 2 * m)


def _minimal_root(u: int, order: int) -> RootValue:
    t, n = reduced_fraction(u, order)
    return RootValue(n=n, t=t)


def _match_scaled_root(e: CycInt, c: int, top: int) -> Optional[RootValue]:
    """Minimal (n, t) with e == c * zeta_n^t and n dividing top, mu_l tried first"""
    t = find_scaled_root(e, c)
    if t is not None:
        return _minimal_root(t, e.order)
    # every zeta_n with n | top is a power of zeta_top
    u = find_scaled_root(embed(e, top), c)
    if u is None:
        return None
    return _minimal_root(u, top)


def _classify_entry(e: CycInt, m: int, i: int, top: int, approx: complex) -> Optional[RootValue]:
    """approx is the float value of the scaled entry, used only to pick the sign of a square root"""
    if i % 2 == 1:
        return _match_scaled_root(e, m ** ((i - 1) // 2), top)

    square_root = _match_scaled_root(mul(e, e), m ** (i - 1), top)
    if square_root is None:
        return None
    # omega^2 = zeta_n^s leaves omega = +/- zeta_2n^s, two unit values 2 apart
    n, s = square_root.n, square_root.t
    best = min(
        (s, s + n),
        key=lambda u: abs(approx - cmath.rect(1.0, math.pi * u / n))
    )
    return _minimal_root(best, 2 * n)


def _scaled_power_float(M: RootMatrix, i: int) -> np.ndarray:
    """sqrt(m) B^i with B = M / sqrt(m); entries stay near unit modulus for every i"""
    B = M.to_complex() / math.sqrt(M.m)
    return math.sqrt(M.m) * np.linalg.matrix_power(B, i)


def classify_scaled_power(
    M: RootMatrix,
    i: int,
    k: int,
    power_matrix: Optional[CycMatrix] = None
) -> List[EntryClass]:
    """Classify every entry of sqrt(m)^(1-i) M^i as a root of unity, if it is one"""
    if i < 1:
        raise PreconditionError(f"Exponent i must be positive, got {i}", reason="invalid_exponent")

    E = power_matrix if power_matrix is not None else power(M, i)
    top = ladder_top(M.m, M.l, k)
    approx = _scaled_power_float(M, i)
    classes = []
    for row in range(M.m):
        for col in range(M.m):
            root = _classify_entry(E[row, col], M.m, i, top, complex(approx[row, col]))
            if root is None:
                logger.debug(f"i={i}: entry ({row}, {col}) is not a scaled root of order dividing {top}")
            classes.append(EntryClass(
                row=row,
                col=col,
                root=root,
                in_mu_l=root is not None and M.l % root.n == 0,
                in_mu_k=root is not None and k % root.n == 0,
            ))
    return classes


def summarise_classes(i: int, classes: List[EntryClass]) -> ExponentResult:
    distinct = sorted({c.root for c in classes if c.root is not None}, key=lambda r: (r.n, r.t))
    return ExponentResult(
        i=i,
        all_in_mu_l=all(c.in_mu_l for c in classes),
        all_in_mu_k=all(c.in_mu_k for c in classes),
        distinct_values=distinct,
        unclassified=sum(1 for c in classes if c.root is None),
    )


def conjecture_test(M: RootMatrix, spectrum: Optional[SpectrumReport] = None) -> ConjectureVerdict:
    """
    Test every i in [1, k] coprime to k. B^k = I makes the scaled powers
    periodic in i with period k, so this range is exhaustive.
    """
    report = spectrum if spectrum is not None else spectrum_report(M)
    if report.common_k is None:
        reason = report.failure.value if report.failure else "no_common_k"
        raise PreconditionError(
            "Eigenvalues of the associated unitary matrix are not all primitive k-th roots for one k",
            reason=reason,
            exit_code=4
        )

    k = report.common_k
    per_i = []
    for i, E in enumerate(power_sequence(M, k), start=1):
        if gcd(i, k) != 1:
            continue
        per_i.append(summarise_classes(i, classify_scaled_power(M, i, k, power_matrix=E)))

    failing = [result.i for result in per_i if not result.all_in_mu_l]
    counterexample_i = failing[0] if failing else None
    if counterexample_i is None:
        logger.info(f"Conjecture holds for BH({M.m},{M.l}) matrix with k={k}")
    else:
        logger.info(f"Counterexample for BH({M.m},{M.l}) matrix with k={k} at i={counterexample_i}")

    return ConjectureVerdict(
        m=M.m,
        l=M.l,
        k=k,
        per_i=per_i,
        holds=counterexample_i is None,
        counterexample_i=counterexample_i,
    )
