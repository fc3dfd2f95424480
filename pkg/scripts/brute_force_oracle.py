#!/usr/bin/env python3
"""
Floating-point oracle for circulant BH counts.

Shares no code with the butson package: Gram check, eigenvalues and scaled
powers are all plain numpy, and eigenvalue orders are found by trying every q.
"""

import argparse
import json
import math
from itertools import product
from typing import Dict, List, Optional, Sequence

import numpy as np

TOL = 1e-8


def circulant_matrix(l: int, row: Sequence[int]) -> np.ndarray:
    m = len(row)
    exps = np.array([[row[(c - r) % m] for c in range(m)] for r in range(m)], dtype=float)
    return np.exp(2j * np.pi * exps / l)


def is_bh(M: np.ndarray) -> bool:
    m = M.shape[0]
    return bool(np.allclose(M @ M.conj().T, m * np.eye(m), atol=1e-9))


def root_order(z: complex, q_max: int) -> Optional[int]:
    for q in range(1, q_max + 1):
        if abs(z ** q - 1.0) < TOL:
            return q
    return None


def common_order(B: np.ndarray, q_max: int) -> Optional[int]:
    orders = {root_order(complex(z), q_max) for z in np.linalg.eigvals(B)}
    if len(orders) != 1 or None in orders:
        return None
    return orders.pop()


def scaled_powers_in_mu_l(B: np.ndarray, l: int, k: int) -> Optional[int]:
    """First i coprime to k whose scaled power leaves mu_l, or None"""
    m = B.shape[0]
    for i in range(1, k + 1):
        if math.gcd(i, k) != 1:
            continue
        P = math.sqrt(m) * np.linalg.matrix_power(B, i)
        if not np.all(np.abs(P ** l - 1.0) < 1e-6):
            return i
    return None


def oracle_counts(m: int, l: int, q_max: int = 1000) -> Dict[str, object]:
    bh = holds = no_common_k = 0
    counterexamples: List[List[int]] = []
    for row in product(range(l), repeat=m):
        M = circulant_matrix(l, row)
        if not is_bh(M):
            continue
        bh += 1
        B = M / math.sqrt(m)
        k = common_order(B, q_max)
        if k is None:
            no_common_k += 1
        elif scaled_powers_in_mu_l(B, l, k) is None:
            holds += 1
        else:
            counterexamples.append(list(row))
    return {
        "bh_count": bh,
        "holds_count": holds,
        "counterexample_count": len(counterexamples),
        "no_common_k_count": no_common_k,
        "counterexamples": counterexamples,
    }


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.strip().splitlines()[0])
    parser.add_argument("m", type=int)
    parser.add_argument("l", type=int)
    parser.add_argument("--q-max", type=int, default=1000)
    args = parser.parse_args()
    print(json.dumps(oracle_counts(args.m, args.l, args.q_max)))


if __name__ == "__main__":
    main()
