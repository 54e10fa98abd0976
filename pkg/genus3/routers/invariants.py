from typing import List

from fastapi import APIRouter, HTTPException, Query

from genus3.exceptions import Genus3Error
from genus3.schemas import (
    Corank1Result,
    DivisorClass,
    IntersectionRequest,
    IntersectionResponse,
    NormalObstructionResult,
    ProjBundleModel,
    QuadricInvariants,
    SplittingType,
    TruncationResult,
    VeroneseInvariants,
)
from genus3.services import chowcurve

router = APIRouter(prefix="/invariants", tags=["invariants"])


def _splitting(degrees: List[int]) -> SplittingType:
    return SplittingType(degrees=tuple(degrees))


@router.get("/quadric", response_model=QuadricInvariants)
async def quadric(base_genus: int = Query(0, ge=0), rank: int = Query(..., ge=2),
                  c1: int = Query(...), b: int = Query(...)):
    """Degree, sectional genus and s of a member of |2H + bF|"""
    try:
        return chowcurve.quadric_invariants(ProjBundleModel.over_curve(base_genus, rank, c1), b)
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))


@router.get("/veronese", response_model=VeroneseInvariants)
async def veronese(base_genus: int = Query(0, ge=0), c1: int = Query(...), b: int = Query(...)):
    """Degree and sectional genus of L = 2H + bF on a rank-3 bundle"""
    try:
        return chowcurve.veronese_invariants(ProjBundleModel.over_curve(base_genus, 3, c1), b)
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))


@router.get("/canonical-class", response_model=DivisorClass)
async def canonical_class(base_genus: int = Query(0, ge=0), rank: int = Query(..., ge=2),
                          c1: int = Query(...)):
    return chowcurve.canonical_class(ProjBundleModel.over_curve(base_genus, rank, c1))


@router.post("/intersection", response_model=IntersectionResponse)
async def intersection(request: IntersectionRequest):
    """Reduced product of divisor classes, with its degree when it is top-dimensional"""
    bundle = ProjBundleModel.over_curve(request.base_genus, request.rank, request.c1)
    element = chowcurve.multiply_classes(bundle, request.factors)
    try:
        degree = chowcurve.top_degree(bundle, element)
    except Genus3Error:
        degree = None
    return IntersectionResponse(element=str(element), terms=list(element.terms), top_degree=degree)


@router.get("/sym2-h0")
async def sym2_h0(splitting: List[int] = Query(...), t: int = Query(...)):
    """h0 of S^2(E)(t) on the projective line"""
    try:
        return {"h0": chowcurve.h0_sym2_twist(_splitting(splitting), t)}
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))


@router.get("/truncation", response_model=TruncationResult)
async def truncation(splitting: List[int] = Query(...), b: int = Query(...), k: int = Query(2)):
    try:
        return chowcurve.truncation_positivity(_splitting(splitting), b, k)
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))


@router.get("/corank1", response_model=Corank1Result)
async def corank1(splitting: List[int] = Query(...), b: int = Query(...)):
    try:
        return chowcurve.corank1_emptiness(_splitting(splitting), b)
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))


@router.get("/normal-obstruction", response_model=NormalObstructionResult)
async def normal_obstruction(splitting: List[int] = Query(...), b: int = Query(...)):
    try:
        return chowcurve.normal_obstruction(_splitting(splitting), b)
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))
