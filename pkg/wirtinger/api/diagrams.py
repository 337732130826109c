# wirtinger/api/diagrams.py
import logging

from fastapi import APIRouter
from fastapi.concurrency import run_in_threadpool

from wirtinger.schemas.common import ErrorResponse
from wirtinger.schemas.diagram import (
    BoundsResponse,
    DictionaryResponse,
    GaussRequest,
    OmegaRequest,
    OmegaResponse,
    SeedsRequest,
    VerifyResponse,
)
from wirtinger.services.diagram import DiagramService

logger = logging.getLogger(__name__)
router = APIRouter(
    prefix="/api/diagrams",
    tags=["Diagrams"],
    responses={404: {"model": ErrorResponse}, 409: {"model": ErrorResponse}, 422: {"model": ErrorResponse}},
)


@router.post("/dictionary", response_model=DictionaryResponse)
async def dictionary(body: GaussRequest):
    """Knot dictionary: overstrand name → understrand pairs."""
    return await run_in_threadpool(DiagramService().dictionary, body.gauss)


@router.post("/omega", response_model=OmegaResponse)
async def omega(body: OmegaRequest):
    """
    Wirtinger number with its least witness.
    The search is CPU-bound, so it runs off the event loop and
    always in-process; cutoff_k / budget_ms bound it.
    """
    service = DiagramService(parallelism=1, cutoff_k=body.cutoff_k, budget_ms=body.budget_ms)
    result = await run_in_threadpool(service.omega, body.gauss)
    logger.info("omega request: %s crossings → %s", result.crossings, result.omega)
    return result


@router.post("/verify", response_model=VerifyResponse)
async def verify(body: SeedsRequest):
    """Extend a seed coloring and check it."""
    return await run_in_threadpool(DiagramService().verify, body.gauss, body.seeds)


@router.post("/bounds", response_model=BoundsResponse)
async def bounds(body: OmegaRequest):
    """Twist regions, 2t bound and volume lower bound."""
    service = DiagramService(parallelism=1, cutoff_k=body.cutoff_k, budget_ms=body.budget_ms)
    return await run_in_threadpool(service.bounds, body.gauss)
