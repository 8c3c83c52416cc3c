"""
Point count endpoints
"""
from fastapi import APIRouter, HTTPException, status, Query

from app.core.exceptions import IntegralityError, KRStrataError
from app.schemas.counts import CountsResponse
from app.services.report_service import ReportService

router = APIRouter()

@router.get("/", response_model=CountsResponse)
def get_counts(
    g: int = Query(..., ge=1),
    p: int = Query(..., ge=2),
    N: int = Query(..., ge=3)
):
    """Mass formula, #A_tau and superspecial component counts"""
    try:
        return ReportService().counts(g, p, N)
    except IntegralityError as e:
        raise HTTPException(status_code=status.HTTP_500_INTERNAL_SERVER_ERROR, detail=str(e))
    except KRStrataError as e:
        raise HTTPException(status_code=status.HTTP_400_BAD_REQUEST, detail=str(e))
