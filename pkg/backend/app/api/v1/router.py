"""
Main API router for version 1
"""
from fastapi import APIRouter

from app.api.v1.endpoints import strata, counts, verify

api_router = APIRouter()

api_router.include_router(strata.router, prefix="/strata", tags=["strata"])
api_router.include_router(counts.router, prefix="/counts", tags=["counts"])
api_router.include_router(verify.router, prefix="/verify", tags=["verify"])
