"""
Matrix models: exponent matrices over Z/l and exact CycInt matrices
"""

from typing import Iterable, List, Literal, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from butson.cyclotomic import CycInt, from_int, from_root, residue
from butson.shared.exceptions import InvalidArgumentError
from butson.shared.validation import validate_exponent_row, validate_positive_int, validate_square


class RootMatrix(BaseModel):
    """m x m matrix whose entry (j, k) is zeta_l^exps[j][k]"""
    m: int = Field(..., description="Dimension")
    l: int = Field(..., description="Root order")
    exps: Tuple[Tuple[int, ...], ...] = Field(..., description="Exponents in [0, l)")

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def validate_shape(self) -> "RootMatrix":
        validate_positive_int(self.m, "m")
        validate_positive_int(self.l, "l")
        validate_square(self.exps, self.m)
        for index, row in enumerate(self.exps):
            validate_exponent_row(row, self.l, f"row {index}")
        return self

    @classmethod
    def from_rows(cls, l: int, rows: Sequence[Sequence[int]]) -> "RootMatrix":
        return cls(m=len(rows), l=l, exps=tuple(tuple(row) for row in rows))

    def to_cyc(self) -> "CycMatrix":
        """Entries as CycInt of order l"""
        return CycMatrix(self.l, [[from_root(self.l, a) for a in row] for row in self.exps])

    def to_complex(self) -> np.ndarray:
        """Entry values as a complex numpy array"""
        exps = np.array(self.exps, dtype=float)
        return np.exp(2j * np.pi * exps / self.l)


class CycMatrix:
    """Immutable square matrix of CycInt values sharing one order"""

    __slots__ = ("m", "order", "entries")

    def __init__(self, order: int, entries: Iterable[Iterable[CycInt]]):
        rows = tuple(tuple(row) for row in entries)
        m = len(rows)
        if m == 0 or any(len(row) != m for row in rows):
            raise InvalidArgumentError("CycMatrix must be square and non-empty")
        for row in rows:
            for entry in row:
                if entry.order != order:
                    raise InvalidArgumentError(
                        f"Entry of order {entry.order} in a matrix of order {order}",
                        details={"expected": order, "found": entry.order}
                    )
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "entries", rows)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("CycMatrix is immutable")

    def __getitem__(self, position: Tuple[int, int]) -> CycInt:
        row, col = position
        return self.entries[row][col]

    def equals(self, other: "CycMatrix") -> bool:
        """Exact entrywise ring equality"""
        if self.m != other.m or self.order != other.order:
            return False
        return all(
            residue(a) == residue(b)
            for row_a, row_b in zip(self.entries, other.entries)
            for a, b in zip(row_a, row_b)
        )

    def is_scalar(self, value: int) -> bool:
        """Exact test that the matrix equals value * I"""
        diagonal = residue(from_int(self.order, value))
        off_diagonal = residue(from_int(self.order, 0))
        for j, row in enumerate(self.entries):
            for k, entry in enumerate(row):
                if residue(entry) != (diagonal if j == k else off_diagonal):
                    return False
        return True

    def __repr__(self) -> str:
        return f"CycMatrix(m={self.m}, order={self.order})"


class GramCell(BaseModel):
    """A violated cell of the Gram matrix M M^*"""
    row: int
    col: int
    coeffs: List[int] = Field(..., description="Group-ring coefficients of the computed cell")
    expected: int = Field(..., description="Expected integer value (m on the diagonal, 0 elsewhere)")


class StructureFlags(BaseModel):
    """Structural predicates of a root matrix"""
    symmetric: bool
    circulant: bool
    unreal: bool


class VerificationReport(BaseModel):
    """Outcome of the exact Butson-Hadamard check"""
    kind: Literal["verification"] = "verification"
    is_bh: bool
    m: int
    l: int
    failing_cell: Optional[GramCell] = None
    structure: Optional[StructureFlags] = None
