"""
KR strata endpoints: summary table, enumeration and single-stratum reports
"""
from fastapi import APIRouter, HTTPException, status, Query
from typing import List, Optional

from app.core.exceptions import IntegralityError, KRStrataError
from app.schemas.stratum import StratumReportRow, TableResponse
from app.services.report_service import ReportService

router = APIRouter()

def _raise_http(e: KRStrataError):
    if isinstance(e, IntegralityError):
        raise HTTPException(status_code=status.HTTP_500_INTERNAL_SERVER_ERROR, detail=str(e))
    raise HTTPException(status_code=status.HTTP_400_BAD_REQUEST, detail=str(e))

@router.get("/table", response_model=TableResponse)
def get_table(g_max: int = Query(4, ge=1, description="Largest genus")):
    """Strata counts and dimensions for g = 1..g_max"""
    try:
        return ReportService().table(g_max)
    except KRStrataError as e:
        _raise_http(e)

@router.get("/", response_model=List[StratumReportRow])
def list_strata(
    g: int = Query(..., ge=1),
    p_rank: Optional[int] = Query(None, ge=0, description="Keep strata of this p-rank")
):
    """All KR strata of GSp_2g, ordered by length then alcove"""
    try:
        return ReportService().enumerate(g, p_rank)
    except KRStrataError as e:
        _raise_http(e)

@router.get("/stratum", response_model=StratumReportRow)
def get_stratum(
    g: int = Query(..., ge=1),
    word: str = Query("", description="Reflection indices in front of tau"),
    p: Optional[int] = Query(None),
    N: Optional[int] = Query(None)
):
    """Report for one stratum s_{word} tau"""
    try:
        return ReportService().stratum(g, word, p, N)
    except KRStrataError as e:
        _raise_http(e)
