from typing import List

from fastapi import HTTPException, status

from genus3.config import Settings, settings
from genus3.exceptions import FixtureError
from genus3.schemas import TABLE_IDS, CitedCapsDocument, ClassificationRow
from genus3.services.fixtures import default_fixture_path, load_cited_caps, load_fixture


def get_settings() -> Settings:
    return settings


def get_cited_caps() -> CitedCapsDocument:
    try:
        return load_cited_caps()
    except FixtureError as e:
        raise HTTPException(status_code=status.HTTP_500_INTERNAL_SERVER_ERROR, detail=str(e))


def get_fixture_rows(table_id: str) -> List[ClassificationRow]:
    if table_id not in TABLE_IDS:
        raise HTTPException(status_code=404, detail=f"Unknown table '{table_id}'")
    try:
        return load_fixture(default_fixture_path(table_id))
    except FixtureError as e:
        raise HTTPException(status_code=status.HTTP_500_INTERNAL_SERVER_ERROR, detail=str(e))
