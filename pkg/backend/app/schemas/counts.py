"""
Point count and verification schemas
"""
from pydantic import BaseModel, Field
from typing import List

from app.core.config import settings

class SuperspecialComponentRow(BaseModel):
    """Connected components of one superspecial stratum w tau"""
    word: List[int]
    length: int
    superspecial_at: List[int]
    component_count: int

class CountsResponse(BaseModel):
    """Mass formula, #A_tau and per-stratum component counts"""
    g: int = Field(..., ge=1)
    p: int
    N: int = Field(..., ge=3)
    lambda_mass: int
    unitary_flag_count: int
    a_tau_count: int
    superspecial_strata: List[SuperspecialComponentRow]
    schema_version: str = Field(default_factory=lambda: settings.SCHEMA_VERSION)

class VerifyCheck(BaseModel):
    name: str
    passed: bool
    detail: str = ""

class VerifyResponse(BaseModel):
    """Outcome of all cross-checks; `passed` is the conjunction"""
    checks: List[VerifyCheck]
    passed: bool
