import pytest
from fastapi.testclient import TestClient

from genus3.main import app
from genus3.schemas import ProjBundleModel, SplittingType
from genus3.services.fixtures import default_fixture_path, load_fixture


@pytest.fixture
def client():
    with TestClient(app) as c:
        yield c


@pytest.fixture
def p1_bundle():
    def make(*degrees: int) -> ProjBundleModel:
        return ProjBundleModel.over_p1(SplittingType.of(*degrees))
    return make


@pytest.fixture
def fixture_rows():
    def load(table_id: str):
        return load_fixture(default_fixture_path(table_id))
    return load
