# app/api/routers/equation.py
import json
import time
from typing import List, Optional

from fastapi import APIRouter, HTTPException, Query
from pydantic import BaseModel, Field, ValidationError

from app.config.Settings import settings
from app.core.exceptions import CapExceededError, InvalidInputError
from app.models.catalog import CatalogRow
from app.models.crosscheck import CrossCheckReport
from app.models.equation import EquationInstance, SearchBounds, SolutionSet
from app.models.mersenne import MersennePrime
from app.services.catalog_service import CatalogService
from app.services.oracle_service import OracleService
from app.services.solver_service import SolverService
from app.utils.logging import logger


class InstanceRequest(BaseModel):
    p: int = Field(..., description="Mersenne exponent of M_p", examples=[13])
    q: int = Field(..., description="Mersenne exponent of M_q", examples=[3])
    l: int = Field(..., description="Prime l in (lz)^2", examples=[3])


class SolveRequest(InstanceRequest):
    positive_only: bool = Field(False, description="Drop solutions with a zero component")


class VerifyRequest(InstanceRequest):
    x: int = Field(..., ge=0, examples=[2])
    y: int = Field(..., ge=0, examples=[5])
    z: int = Field(..., ge=0, examples=[2731])


class VerifyResponse(BaseModel):
    holds: bool
    lhs: int
    rhs: int


class SearchRequest(InstanceRequest):
    x_max: int = Field(settings.DEFAULT_X_MAX, ge=0, le=settings.API_MAX_EXPONENT)
    y_max: int = Field(settings.DEFAULT_Y_MAX, ge=0, le=settings.API_MAX_EXPONENT)
    z_max: Optional[int] = Field(None, ge=1)


# Create the router
router = APIRouter(
    prefix="/equation",
    tags=["equation"]
)


def log_api_call(endpoint: str, request_data: dict, start_time: float, status: str):
    """Log API call details"""
    log_entry = {
        "endpoint": endpoint,
        "request": request_data,
        "duration_seconds": round(time.time() - start_time, 3),
        "status": status,
    }
    logger.info(f"API Call: {json.dumps(log_entry, default=str)}")


def _instance(request: InstanceRequest) -> EquationInstance:
    try:
        return EquationInstance.from_exponents(request.p, request.q, request.l)
    except (InvalidInputError, ValidationError) as e:
        logger.warning(f"Rejected instance {request.model_dump()}: {e}")
        raise HTTPException(status_code=422, detail=str(e))


@router.post("/solve", response_model=SolutionSet)
async def solve(request: SolveRequest):
    """Closed-form solution set of one equation."""
    start_time = time.time()
    result = SolverService.classify(_instance(request), positive_only=request.positive_only)
    log_api_call("/equation/solve", request.model_dump(), start_time, "success")
    return result


@router.post("/verify", response_model=VerifyResponse)
async def verify(request: VerifyRequest):
    start_time = time.time()
    instance = _instance(request)
    response = VerifyResponse(
        holds=OracleService.verify(instance, request.x, request.y, request.z),
        lhs=instance.lhs(request.x, request.y),
        rhs=instance.rhs(request.z),
    )
    log_api_call("/equation/verify", request.model_dump(), start_time, "success")
    return response


@router.post("/search", response_model=CrossCheckReport)
async def search(request: SearchRequest):
    """Exhaustive search within bounds, compared against the closed form."""
    start_time = time.time()
    bounds = SearchBounds(x_max=request.x_max, y_max=request.y_max, z_max=request.z_max)
    report = OracleService.cross_check(_instance(request), bounds)
    log_api_call("/equation/search", request.model_dump(), start_time, "success")
    return report


@router.get("/tables/1", response_model=List[CatalogRow])
async def table1(p_limit: int = Query(settings.DEFAULT_P_LIMIT, ge=2, le=settings.API_MAX_P_LIMIT)):
    start_time = time.time()
    try:
        rows = CatalogService.table1(p_limit)
    except CapExceededError as e:
        logger.error(f"Error building table 1: {str(e)}")
        log_api_call("/equation/tables/1", {"p_limit": p_limit}, start_time, "error")
        raise HTTPException(status_code=413, detail=str(e))
    log_api_call("/equation/tables/1", {"p_limit": p_limit}, start_time, "success")
    return rows


@router.get("/tables/2", response_model=List[CatalogRow])
async def table2():
    start_time = time.time()
    rows = CatalogService.table2()
    log_api_call("/equation/tables/2", {}, start_time, "success")
    return rows


@router.get("/mersenne", response_model=List[MersennePrime])
async def mersenne(p_limit: int = Query(settings.Q_MAX, ge=2, le=settings.API_MAX_P_LIMIT)):
    start_time = time.time()
    primes = CatalogService.mersenne_primes(p_limit)
    log_api_call("/equation/mersenne", {"p_limit": p_limit}, start_time, "success")
    return primes
