"""
Pydantic models for the circulant search
"""

import hashlib
import json
from typing import List, Literal, Optional, Tuple

from pydantic import BaseModel, Field, model_validator

from butson.shared.validation import validate_positive_int, validate_range


class SearchConfig(BaseModel):
    """Parameters of one exhaustive scan over first rows of circulant m x m matrices"""
    m: int = Field(..., description="Dimension")
    l: int = Field(..., description="Root order")
    dedup: bool = Field(False, description="Process only canonical orbit representatives")
    range: Optional[Tuple[int, int]] = Field(None, description="Half-open rank interval [lo, hi)")
    checkpoint_every: int = Field(500, ge=1, description="Rows per chunk between checkpoints")

    @model_validator(mode="after")
    def validate_bounds(self) -> "SearchConfig":
        validate_positive_int(self.m, "m")
        validate_positive_int(self.l, "l")
        validate_range(self.range, self.total_rows)
        return self

    @property
    def total_rows(self) -> int:
        return self.l ** self.m

    def bounds(self) -> Tuple[int, int]:
        return self.range if self.range is not None else (0, self.total_rows)

    def config_hash(self) -> str:
        """Fingerprint of every field that changes the report"""
        lo, hi = self.bounds()
        payload = json.dumps({"m": self.m, "l": self.l, "dedup": self.dedup, "range": [lo, hi]}, sort_keys=True)
        return hashlib.sha256(payload.encode()).hexdigest()[:16]


class Counterexample(BaseModel):
    """A circulant BH matrix violating the conjecture"""
    first_row: List[int]
    k: int
    counterexample_i: int


class SearchReport(BaseModel):
    """Aggregated, exact counts of a scan"""
    kind: Literal["search"] = "search"
    scanned: int = 0
    skipped: int = Field(0, description="Non-canonical rows skipped under dedup")
    bh_count: int = 0
    tested: int = 0
    holds_count: int = 0
    counterexample_count: int = 0
    no_common_k_count: int = 0
    counterexamples: List[Counterexample] = Field(default_factory=list)

    def merged(self, later: "SearchReport") -> "SearchReport":
        """Concatenate a report over the immediately following rank range"""
        return SearchReport(
            scanned=self.scanned + later.scanned,
            skipped=self.skipped + later.skipped,
            bh_count=self.bh_count + later.bh_count,
            tested=self.tested + later.tested,
            holds_count=self.holds_count + later.holds_count,
            counterexample_count=self.counterexample_count + later.counterexample_count,
            no_common_k_count=self.no_common_k_count + later.no_common_k_count,
            counterexamples=self.counterexamples + later.counterexamples,
        )


class Shard(BaseModel):
    """A contiguous rank range and the next rank still to scan"""
    lo: int
    hi: int
    next: int
    partial: SearchReport = Field(default_factory=SearchReport)

    @property
    def done(self) -> bool:
        return self.next >= self.hi
