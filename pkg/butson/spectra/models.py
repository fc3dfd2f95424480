"""
Pydantic models for spectrum reports
"""

from enum import Enum
from typing import List, Literal, Optional

from pydantic import BaseModel, Field

from butson.cyclotomic import CycInt


class FailureReason(str, Enum):
    """Why a spectrum has no common order"""
    NON_ROOT_EIGENVALUE = "non_root_eigenvalue"
    MIXED_ORDERS = "mixed_orders"
    ORDER_BOUND_EXCEEDED = "order_bound_exceeded"


class ComplexValue(BaseModel):
    """Double-precision complex number"""
    re: float
    im: float

    @classmethod
    def of(cls, z: complex) -> "ComplexValue":
        return cls(re=float(z.real), im=float(z.imag))

    def to_complex(self) -> complex:
        return complex(self.re, self.im)


class Angle(BaseModel):
    """Exact angle as a reduced fraction of a full turn"""
    num: int = Field(..., ge=0)
    den: int = Field(..., ge=1)


class ExactValue(BaseModel):
    """A cyclotomic integer in group-ring form"""
    order: int = Field(..., ge=1)
    coeffs: List[int]

    @classmethod
    def of(cls, value: CycInt) -> "ExactValue":
        return cls(order=value.order, coeffs=list(value.coeffs))

    def to_cyc(self) -> CycInt:
        return CycInt(self.order, self.coeffs)


class EigenFinding(BaseModel):
    """One eigenvalue of B = M / sqrt(m)"""
    value: ComplexValue = Field(..., description="Numeric eigenvalue of B")
    angle: Optional[Angle] = Field(None, description="Angle as a fraction of a full turn, when the order is known")
    exact_h: Optional[ExactValue] = Field(None, description="Eigenvalue of M in Z[zeta_L] (circulant input)")
    order: Optional[int] = Field(None, ge=1, description="Minimal k with lambda^k = 1")
    primitive: bool = Field(False, description="Order found and minimal")


class SpectrumReport(BaseModel):
    """Eigenvalue findings and their common primitive order"""
    kind: Literal["spectrum"] = "spectrum"
    method: Literal["exact", "numeric"]
    m: int
    l: int
    order_bound: int = Field(..., description="Bound searched for eigenvalue orders")
    findings: List[EigenFinding]
    common_k: Optional[int] = None
    failure: Optional[FailureReason] = None
