"""
Cross-check endpoint
"""
from fastapi import APIRouter, HTTPException, status, Query

from app.core.exceptions import KRStrataError
from app.schemas.counts import VerifyResponse
from app.services.report_service import ReportService

router = APIRouter()

@router.get("/", response_model=VerifyResponse)
def run_verification(g_max: int = Query(3, ge=1)):
    """Run every cross-check up to g_max"""
    try:
        return ReportService().verify(g_max)
    except KRStrataError as e:
        raise HTTPException(status_code=status.HTTP_400_BAD_REQUEST, detail=str(e))
