"""
Pydantic models for conjecture verdicts
"""

from typing import List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator


class RootValue(BaseModel):
    """zeta_n^t in lowest terms (gcd(n, t) = 1, or n = 1 and t = 0)"""
    n: int = Field(..., ge=1)
    t: int = Field(..., ge=0)

    model_config = ConfigDict(frozen=True)


class EntryClass(BaseModel):
    """Classification of one entry of sqrt(m)^(1-i) M^i"""
    row: int
    col: int
    root: Optional[RootValue] = Field(None, description="Entry equals sqrt(m)^(i-1) * zeta_n^t")
    in_mu_l: bool
    in_mu_k: bool


class ExponentResult(BaseModel):
    """Summary of the scaled power for one exponent i"""
    i: int
    all_in_mu_l: bool
    all_in_mu_k: bool
    distinct_values: List[RootValue]
    unclassified: int = Field(0, ge=0)


class ConjectureVerdict(BaseModel):
    """Verdict over every i in [1, k] coprime to k"""
    kind: Literal["conjecture"] = "conjecture"
    m: int
    l: int
    k: int
    per_i: List[ExponentResult]
    holds: bool
    counterexample_i: Optional[int] = None

    @model_validator(mode="after")
    def validate_counterexample(self) -> "ConjectureVerdict":
        if self.holds != (self.counterexample_i is None):
            raise ValueError("holds must be true exactly when there is no counterexample")
        return self
