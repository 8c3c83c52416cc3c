"""
Pydantic schemas for report payloads
"""
from app.schemas.stratum import StratumReportRow, TableRow, TableResponse
from app.schemas.counts import SuperspecialComponentRow, CountsResponse, VerifyCheck, VerifyResponse

__all__ = [
    "StratumReportRow", "TableRow", "TableResponse",
    "SuperspecialComponentRow", "CountsResponse",
    "VerifyCheck", "VerifyResponse",
]
