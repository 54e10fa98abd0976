from typing import List

from fastapi import APIRouter, Depends

from genus3.dependencies import get_cited_caps, get_fixture_rows
from genus3.schemas import CitedCapsDocument, ClassificationRow, VerificationReport
from genus3.services import oracle
from genus3.services.fixtures import list_tables
from genus3.services.verification import verify

router = APIRouter(prefix="/verification", tags=["verification"])


@router.get("/tables")
async def tables():
    """Known table ids and their fixture paths"""
    return {table_id: str(path) for table_id, path in list_tables().items()}


@router.get("/verify/{table_id}", response_model=VerificationReport)
def verify_table(
        table_id: str,
        rows: List[ClassificationRow] = Depends(get_fixture_rows),
        caps: CitedCapsDocument = Depends(get_cited_caps)
):
    """Recompute a table and diff it against its fixture"""
    return verify(table_id, rows, caps)


@router.get("/oracle-selftest")
def oracle_selftest():
    report = oracle.oracle_selftest()
    return {**report.model_dump(), "exit_status": report.exit_status}
