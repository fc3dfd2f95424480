"""
Spectra service layer - eigenvalues of B = M / sqrt(m) and their orders
"""

import cmath
import logging
import math
from fractions import Fraction
from typing import List, Optional, Tuple

import numpy as np

from butson.config import get_settings
from butson.cyclotomic import CycInt, conj, equals, eval_complex, from_int, mul, power
from butson.matrices.models import RootMatrix
from butson.matrices.service import is_circulant, verify_bh
from butson.shared.arithmetic import divisors, euler_phi, lcm, reduced_fraction
from butson.shared.exceptions import InvalidArgumentError, NumericFailureError, PreconditionError
from butson.spectra.models import (
    Angle, ComplexValue, EigenFinding, ExactValue, FailureReason, SpectrumReport
)

logger = logging.getLogger(__name__)

TWO_PI = 2.0 * math.pi
UNIT_MODULUS_SLACK = 1e-6


def principal_angle(z: complex) -> float:
    """Argument of z in [0, 2 pi)"""
    angle = cmath.phase(z) % TWO_PI
    return 0.0 if angle >= TWO_PI else angle


def angle_fraction(z: complex, order: int) -> Angle:
    """Angle of a root of unity of the given order, as a reduced fraction of a turn"""
    numerator = round(principal_angle(z) / TWO_PI * order) % order
    num, den = reduced_fraction(numerator, order)
    return Angle(num=num, den=den)


def exact_order_bound(m: int, l: int) -> int:
    """Every root of unity in Q(zeta_L, sqrt(m)) has order dividing lcm(2, L, 4m)"""
    return lcm(2, lcm(l, m), 4 * m)


def numeric_order_bound(m: int, l: int) -> int:
    """
    Largest denominator tried on the numeric path.

    lambda has degree at most 2*m*phi(l) over Q, so a root of unity of order q
    needs phi(q) <= 2*m*phi(l); phi(q) >= sqrt(q/2) turns that into a bound on q.
    """
    degree = 2 * m * euler_phi(l)
    bound = max(lcm(2, l, m, 4 * m), 2 * degree * degree)
    return min(bound, get_settings().numeric_order_cap)


def circulant_eigenvalues_exact(M: RootMatrix) -> List[CycInt]:
    """h_j = sum_s zeta_l^(a_s) xi^(j s) in Z[zeta_L], L = lcm(l, m), xi = zeta_m"""
    if not is_circulant(M):
        raise InvalidArgumentError("Exact eigenvalues require a circulant matrix")

    m, l = M.m, M.l
    L = lcm(l, m)
    step_root, step_xi = L // l, L // m
    first_row = M.exps[0]
    eigenvalues = []
    for j in range(m):
        coeffs = [0] * L
        for s, a in enumerate(first_row):
            coeffs[(a * step_root + j * s * step_xi) % L] += 1
        eigenvalues.append(CycInt(L, coeffs))
    return eigenvalues


def eig_numeric(M: RootMatrix) -> List[complex]:
    """Eigenvalues of B = M / sqrt(m) by LAPACK (Hessenberg reduction + shifted QR), sorted by angle"""
    settings = get_settings()
    B = M.to_complex() / math.sqrt(M.m)

    try:
        values, vectors = np.linalg.eig(B)
    except np.linalg.LinAlgError as e:
        logger.error(f"Eigensolver failed for {M.m}x{M.m} matrix: {e}")
        raise NumericFailureError(f"Eigensolver did not converge: {e}")

    scale = float(np.linalg.norm(B, 2))
    for index in range(M.m):
        v = vectors[:, index]
        residual = float(np.linalg.norm(B @ v - values[index] * v) / np.linalg.norm(v))
        if not residual <= settings.eig_residual_tol * scale:
            logger.error(f"Eigenpair {index} residual {residual:.3e} above tolerance")
            raise NumericFailureError(
                f"Eigenpair {index} has residual {residual:.3e}", index=index
            )

    return sorted((complex(z) for z in values), key=principal_angle)


def order_exact(h: CycInt, m: int, bound: int) -> Optional[int]:
    """
    Minimal d dividing bound with (h / sqrt(m))^d = 1, decided in Z[zeta_N].

    Even d: h^d == m^(d/2). Odd d: h^(2d) == m^d gives h^d = +/- m^(d/2), and the
    sign is read from the unit-modulus float lambda^d, whose candidates are +1 and -1.
    """
    N = h.order
    if not equals(mul(h, conj(h)), from_int(N, m)):
        raise InvalidArgumentError(
            "order_exact needs h * conj(h) == m",
            details={"m": m, "order": N}
        )

    lam = eval_complex(h) / math.sqrt(m)
    for d in divisors(bound):
        h_d = power(h, d)
        if d % 2 == 0:
            if equals(h_d, from_int(N, m ** (d // 2))):
                return d
        elif equals(mul(h_d, h_d), from_int(N, m ** d)) and (lam ** d).real > 0:
            return d
    return None


def order_numeric(lam: complex, q_max: int, eps: Optional[float] = None) -> Optional[int]:
    """Order of a unit complex number via the best rational approximation of its angle"""
    if abs(abs(lam) - 1.0) > UNIT_MODULUS_SLACK:
        raise InvalidArgumentError(
            f"order_numeric needs |lambda| = 1, got {abs(lam):.9f}",
            details={"modulus": abs(lam)}
        )
    if eps is None:
        eps = get_settings().order_eps

    turn = principal_angle(lam) / TWO_PI
    q = Fraction(turn).limit_denominator(q_max).denominator
    if abs(lam ** q - 1.0) < eps:
        return q
    return None


def _finding(value: complex, order: Optional[int], exact_h: Optional[CycInt] = None) -> EigenFinding:
    return EigenFinding(
        value=ComplexValue.of(value),
        angle=angle_fraction(value, order) if order is not None else None,
        exact_h=ExactValue.of(exact_h) if exact_h is not None else None,
        order=order,
        primitive=order is not None,
    )


def _summarise(
    findings: List[EigenFinding], missing_reason: FailureReason
) -> Tuple[Optional[int], Optional[FailureReason]]:
    orders = [finding.order for finding in findings]
    if any(order is None for order in orders):
        return None, missing_reason
    if len(set(orders)) > 1:
        return None, FailureReason.MIXED_ORDERS
    return orders[0], None


def spectrum_report(M: RootMatrix) -> SpectrumReport:
    """Eigenvalue orders of the unitary matrix associated with a BH matrix"""
    if not verify_bh(M).is_bh:
        raise PreconditionError(f"Matrix is not in BH({M.m},{M.l})", reason="not_bh")

    m, l = M.m, M.l
    root_m = math.sqrt(m)

    if is_circulant(M):
        bound = exact_order_bound(m, l)
        findings = []
        for h in circulant_eigenvalues_exact(M):
            order = order_exact(h, m, bound)
            findings.append(_finding(eval_complex(h) / root_m, order, exact_h=h))
        common_k, failure = _summarise(findings, FailureReason.NON_ROOT_EIGENVALUE)
        method = "exact"
    else:
        bound = numeric_order_bound(m, l)
        findings = []
        for value in eig_numeric(M):
            findings.append(_finding(value, order_numeric(value, bound)))
        common_k, failure = _summarise(findings, FailureReason.ORDER_BOUND_EXCEEDED)
        method = "numeric"

    if common_k is not None:
        logger.info(f"Spectrum of BH({m},{l}) matrix: all eigenvalues primitive {common_k}-th roots")
    else:
        logger.info(f"Spectrum of BH({m},{l}) matrix has no common order ({failure.value if failure else 'unknown'})")

    return SpectrumReport(
        method=method,
        m=m,
        l=l,
        order_bound=bound,
        findings=findings,
        common_k=common_k,
        failure=failure,
    )
