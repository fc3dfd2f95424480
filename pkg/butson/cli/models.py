"""
Pydantic models for CLI run reports
"""

from typing import Annotated, Literal, Optional, Union

from pydantic import BaseModel, Field

from butson.conjecture.models import ConjectureVerdict
from butson.matrices.models import VerificationReport
from butson.search.models import SearchReport
from butson.spectra.models import SpectrumReport

ResultPayload = Annotated[
    Union[VerificationReport, SpectrumReport, ConjectureVerdict, SearchReport],
    Field(discriminator="kind")
]


class InputFingerprint(BaseModel):
    """Dimensions plus a content hash of the canonical input"""
    kind: Literal["matrix", "search"]
    source: str = Field(..., description="Builtin name, file path or search parameters")
    m: int
    l: int
    sha256: str = Field(..., description="Hash of the canonical matrix text or of the search config")


class RunReport(BaseModel):
    """Top-level JSON document printed by --json"""
    command: str = Field(..., description="Echo of the command line")
    input: InputFingerprint
    result: ResultPayload
    elapsed_ms: Optional[float] = Field(None, description="Wall time, null under --no-timing")
