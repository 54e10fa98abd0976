from fastapi import APIRouter, HTTPException

from genus3.schemas import (
    DegTView,
    MinimalizationRequest,
    MinimalizationResult,
    SurfaceGenusResponse,
    SurfaceLattice,
    WeightSequence,
)
from genus3.services import surflat

router = APIRouter(prefix="/surfaces", tags=["surfaces"])


@router.get("/deg-t", response_model=DegTView)
async def deg_t():
    """deg T rows on the elliptic ruled surface, plus the scroll rank bound over the plane"""
    return surflat.deg_t_view()


@router.post("/genus", response_model=SurfaceGenusResponse)
async def genus(lattice: SurfaceLattice):
    """K^2, KA, A^2 and the sectional genus of a polarized lattice"""
    try:
        pairing = surflat.surface_invariants(lattice)
        g = surflat.sectional_genus_surface(pairing.KA, pairing.AA)
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))
    return SurfaceGenusResponse(KK=pairing.KK, KA=pairing.KA, AA=pairing.AA, g=g)


@router.post("/minimalization", response_model=MinimalizationResult)
async def minimalization(request: MinimalizationRequest):
    try:
        weights = WeightSequence(weights=tuple(request.weights))
        return surflat.minimalization_invariants(request.g_min, request.AA_min, request.KK_min,
                                                 weights)
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))
