from typing import List, Optional

from fastapi import APIRouter, Depends, HTTPException, Query

from genus3.dependencies import get_cited_caps
from genus3.schemas import (
    BranchRecord,
    CitedCapsDocument,
    DeltaBounds,
    EnumerationResult,
    QuadricParams,
    ReductionTuples,
    VeroneseSolution,
)
from genus3.services import classify

router = APIRouter(prefix="/classification", tags=["classification"])


@router.get("/branches", response_model=List[BranchRecord])
async def branches(g: int = Query(3)):
    """The six adjunction branches for sectional genus three"""
    try:
        return classify.branch_map(g)
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))


@router.get("/quadric-params", response_model=QuadricParams)
async def quadric_params(g_c: int = Query(0), n: int = Query(3)):
    try:
        return classify.quadric_params(g_c, n)
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))


@router.get("/enumerate", response_model=EnumerationResult)
def enumerate_splittings(
        d: int = Query(..., ge=1),
        n_min: Optional[int] = Query(None),
        n_max: Optional[int] = Query(None),
        rules: str = Query("default"),
        caps: CitedCapsDocument = Depends(get_cited_caps)
):
    """Candidate splitting types over P^1 with the rule that excluded each"""
    try:
        default_min, default_max = classify.default_n_range(d)
        n_range = (n_min if n_min is not None else default_min,
                   n_max if n_max is not None else default_max)
        return classify.enumerate_quadric_splittings(
            d, n_range=n_range, rules=classify.parse_rules(rules, d, caps), caps=caps)
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))


@router.get("/elliptic-ampleness")
async def elliptic_ampleness(d: int = Query(...)):
    try:
        return {"d": d, "status": classify.elliptic_ampleness_status(d)}
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))


@router.get("/veronese", response_model=List[VeroneseSolution])
async def veronese(g: int = Query(3)):
    try:
        return classify.veronese_solutions(g)
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))


@router.get("/reductions", response_model=ReductionTuples)
async def reductions(g: int = Query(3)):
    try:
        return classify.reduction_tuples(g)
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))


@router.get("/deltas", response_model=DeltaBounds)
async def deltas(g: int = Query(3)):
    try:
        return classify.delta_bounds(g)
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))
