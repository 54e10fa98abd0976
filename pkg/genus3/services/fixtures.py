"""JSON fixtures: classification tables, cited caps, branch records and delta notes."""
import logging
from functools import lru_cache
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Type, TypeVar, Union

from pydantic import BaseModel, ValidationError

from genus3.config import settings
from genus3.exceptions import FixtureError
from genus3.schemas import (
    TABLE_IDS,
    BranchesDocument,
    BranchRecord,
    CitedCapsDocument,
    ClassificationRow,
    DeltaNote,
    DeltaNotesDocument,
    FixtureDocument,
)

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]
DocumentT = TypeVar("DocumentT", bound=BaseModel)

BOUND_ROW_KEY = "veronese-blowup-bound"


def default_fixture_path(table_id: str) -> Path:
    if table_id not in TABLE_IDS:
        raise FixtureError(f"unknown table id: {table_id}")
    return settings.fixtures_dir / f"{table_id}.json"


def list_tables() -> Dict[str, Path]:
    return {table_id: default_fixture_path(table_id) for table_id in TABLE_IDS}


def required_parameters(row: ClassificationRow) -> Sequence[str]:
    """Parameter names the table's verifier reads from this row."""
    if row.table == "quadrics":
        if "d" not in row.parameters:
            return ("d",)
        if row.parameters.get("g_C", 0) == 0:
            return ("d", "splitting")
        return ("d", "e", "b")
    if row.table == "surfaces":
        return ("AA",)
    if row.table == "reductions":
        return ("r_max",) if row.key == BOUND_ROW_KEY else ("Ln", "r", "Ln_prime")
    if row.table == "deg-t":
        return ("degT", "degG", "c2", "L3")
    return ("g_C", "e", "b", "d")


def _fixture_error(error: ValidationError, path: Optional[Path], row=None) -> FixtureError:
    first = error.errors()[0]
    loc = [str(part) for part in first.get("loc", ())]
    message = first["msg"]
    if loc == ["table"]:
        message = f"unknown table id: {first.get('input')}"
    if row is None and len(loc) >= 2 and loc[0] == "rows":
        row, loc = loc[1], loc[2:]
    return FixtureError(message, path=path, row=row, field=".".join(loc) or None)


def load_fixture(path: PathLike) -> List[ClassificationRow]:
    path = Path(path)
    if not path.is_file():
        raise FixtureError("fixture file not found", path=path)
    text = path.read_text(encoding="utf-8")
    if not text.strip():
        return []
    try:
        document = FixtureDocument.model_validate_json(text)
    except ValidationError as e:
        raise _fixture_error(e, path) from e

    rows: List[ClassificationRow] = []
    for index, raw in enumerate(document.rows):
        label = raw.get("key", index)
        if raw.get("table", document.table) != document.table:
            raise FixtureError(f"row belongs to table '{raw['table']}'",
                               path=path, row=label, field="table")
        try:
            row = ClassificationRow.model_validate({**raw, "table": document.table})
        except ValidationError as e:
            raise _fixture_error(e, path, row=label) from e
        for name in required_parameters(row):
            if name not in row.parameters:
                raise FixtureError("missing parameter", path=path, row=label, field=name)
        rows.append(row)
    logger.debug(f"Loaded {len(rows)} rows of table {document.table} from {path}")
    return rows


def write_fixture(rows: Sequence[ClassificationRow], path: PathLike,
                  table: Optional[str] = None) -> Path:
    tables = {row.table for row in rows}
    if table is None:
        if len(tables) != 1:
            raise FixtureError("cannot infer the table id of an empty or mixed row list", path=path)
        table = tables.pop()
    elif tables - {table}:
        raise FixtureError(f"rows from tables {sorted(tables - {table})} in a '{table}' fixture",
                           path=path)
    document = FixtureDocument(
        table=table, rows=[row.model_dump(exclude={"table"}) for row in rows])
    path = Path(path)
    path.write_text(document.model_dump_json(indent=2) + "\n", encoding="utf-8")
    return path


@lru_cache(maxsize=None)
def _load_document(model: Type[DocumentT], path: str) -> DocumentT:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except FileNotFoundError as e:
        raise FixtureError("fixture file not found", path=path) from e
    try:
        return model.model_validate_json(text)
    except ValidationError as e:
        raise _fixture_error(e, Path(path)) from e


def load_cited_caps(path: Optional[PathLike] = None) -> CitedCapsDocument:
    path = path or settings.fixtures_dir / settings.cited_caps_file
    return _load_document(CitedCapsDocument, str(path))


def load_delta_notes(path: Optional[PathLike] = None) -> List[DeltaNote]:
    path = path or settings.fixtures_dir / settings.delta_notes_file
    return list(_load_document(DeltaNotesDocument, str(path)).notes)


def load_branches(path: Optional[PathLike] = None) -> List[BranchRecord]:
    path = path or settings.fixtures_dir / settings.branches_file
    return list(_load_document(BranchesDocument, str(path)).branches)
