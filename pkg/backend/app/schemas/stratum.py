"""
KR stratum report schemas
"""
from pydantic import BaseModel, Field
from typing import Dict, List, Optional

from app.core.config import settings

class StratumReportRow(BaseModel):
    """One KR stratum as emitted by `enumerate` and `stratum`"""
    g: int = Field(..., ge=1)
    word: List[int] = Field(default_factory=list, description="Reduced word, read left to right, in front of tau")
    length: int = Field(..., ge=0)
    p_rank: int = Field(..., ge=0)
    superspecial_at: List[int] = Field(default_factory=list)
    is_supersingular: bool
    r_table: Dict[str, int]
    component_count: Optional[int] = None
    schema_version: str = Field(default_factory=lambda: settings.SCHEMA_VERSION)

class TableRow(BaseModel):
    """Summary statistics of Adm(mu) for one genus"""
    g: int
    strata_count: int
    prank_zero_count: int
    superspecial_union_dimension: int
    prank_zero_dimension: int
    max_length: int

class TableResponse(BaseModel):
    rows: List[TableRow]
    schema_version: str = Field(default_factory=lambda: settings.SCHEMA_VERSION)
