"""
Built-in matrices
"""

from typing import Dict

from butson.matrices.models import RootMatrix
from butson.matrices.service import circulant

# BH(2,4): [[1, 1], [i, -i]]
EX1 = RootMatrix.from_rows(4, [[0, 0], [1, 3]])

# BH(5,5): circulant, symmetric and unreal; its cube is the counterexample
EX2 = circulant(5, (1, 3, 4, 4, 3))

# BH(4,2) with constant diagonal
EX3 = RootMatrix.from_rows(2, [[1, 0, 1, 0], [1, 1, 1, 1], [0, 0, 1, 1], [1, 0, 0, 1]])

BUILTINS: Dict[str, RootMatrix] = {"ex1": EX1, "ex2": EX2, "ex3": EX3}


def builtin_examples() -> Dict[str, RootMatrix]:
    return dict(BUILTINS)
