from genus3.config import Settings
from genus3.dependencies import get_settings


def test_root_and_health(client):
    response = client.get("/")
    assert response.status_code == 200
    assert response.json()["status"] == "running"
    assert client.get("/health").json() == {"status": "healthy"}
    assert "X-Process-Time-Ms" in response.headers
    assert response.headers["X-Genus3-Version"] == "1.0.0"


def test_root_reads_injected_settings(client):
    client.app.dependency_overrides[get_settings] = lambda: Settings(api_title="genus3-test")
    try:
        assert client.get("/").json()["message"] == "genus3-test"
    finally:
        client.app.dependency_overrides.clear()


def test_quadric_invariants(client):
    response = client.get("/invariants/quadric", params={"rank": 4, "c1": 7, "b": -3})
    assert response.json() == {"d": 11, "g": 3, "s": 2}


def test_quadric_invariants_validate_rank(client):
    response = client.get("/invariants/quadric", params={"rank": 1, "c1": 7, "b": -3})
    assert response.status_code == 422


def test_veronese_invariants(client):
    response = client.get("/invariants/veronese", params={"base_genus": 0, "c1": 0, "b": 1})
    assert response.json() == {"d": 12, "g": 3}


def test_canonical_class(client):
    response = client.get("/invariants/canonical-class", params={"base_genus": 1, "rank": 3, "c1": 2})
    assert response.json() == {"h": -3, "f": 2}


def test_intersection_top_degree(client):
    factors = [{"h": 1, "f": -1}] * 3 + [{"h": 2, "f": -2}]
    response = client.post("/invariants/intersection", json={"rank": 4, "c1": 6, "factors": factors})
    assert response.status_code == 200
    assert response.json()["top_degree"] == 4


def test_intersection_below_top_degree(client):
    response = client.post("/invariants/intersection",
                           json={"rank": 3, "c1": 1, "factors": [{"h": 1, "f": 0}]})
    data = response.json()
    assert data["top_degree"] is None
    assert data["terms"] == [[1, 0, 1]]


def test_intersection_needs_factors(client):
    response = client.post("/invariants/intersection", json={"rank": 3, "c1": 1, "factors": []})
    assert response.status_code == 422


def test_sym2_h0(client):
    response = client.get("/invariants/sym2-h0", params={"splitting": [1, 2, 2, 2], "t": -3})
    assert response.json() == {"h0": 15}


def test_sym2_h0_rejects_unsorted_splitting(client):
    response = client.get("/invariants/sym2-h0", params={"splitting": [2, 1, 2, 2], "t": -3})
    assert response.status_code == 400
    assert "nondecreasing" in response.json()["detail"]


def test_truncation_bad_k(client):
    response = client.get("/invariants/truncation", params={"splitting": [0, 0, 1, 2], "b": 0, "k": 7})
    assert response.status_code == 400


def test_corank1(client):
    response = client.get("/invariants/corank1", params={"splitting": [1, 1, 1, 4], "b": -3})
    assert response.json()["excluded"] is True


def test_normal_obstruction(client):
    response = client.get("/invariants/normal-obstruction",
                          params={"splitting": [1, 1, 2, 3], "b": -3})
    data = response.json()
    assert data["excluded"] is True and data["pairing"] == 1


def test_branches(client):
    assert len(client.get("/classification/branches").json()) == 6
    assert client.get("/classification/branches", params={"g": 4}).status_code == 400


def test_quadric_params(client):
    data = client.get("/classification/quadric-params", params={"g_c": 1}).json()
    assert data["d_range"] == [1, 6]


def test_enumerate(client):
    data = client.get("/classification/enumerate", params={"d": 12}).json()
    admitted = {tuple(c["splitting"]) for c in data["candidates"] if c["status"] != "excluded"}
    assert admitted == {(1, 1, 3, 3), (1, 2, 2, 3), (2, 2, 2, 2)}


def test_enumerate_rejects_unknown_rule(client):
    response = client.get("/classification/enumerate", params={"d": 5, "rules": "Astrology"})
    assert response.status_code == 400
    assert "Astrology" in response.json()["detail"]


def test_enumerate_validates_degree(client):
    assert client.get("/classification/enumerate", params={"d": 0}).status_code == 422


def test_elliptic_ampleness(client):
    assert client.get("/classification/elliptic-ampleness", params={"d": 3}).json() == {
        "d": 3, "status": "ample-if-indecomposable"}
    assert client.get("/classification/elliptic-ampleness", params={"d": 9}).status_code == 400


def test_veronese_and_reductions(client):
    assert [s["d"] for s in client.get("/classification/veronese").json()] == [12, 4]
    assert client.get("/classification/reductions").json()["veronese_blowup_bound"] == 3
    assert client.get("/classification/deltas").json()["d_range"] == [1, 4]


def test_deg_t(client):
    view = client.get("/surfaces/deg-t").json()
    assert [row["L3"] for row in view["rows"]] == [4, 3, 2, 1]
    assert view["rank_bound"] == {"degree": 4, "A_dot_line": 4, "max_rank": 4}


def test_surface_genus(client):
    lattice = {"labels": ["h"], "gram": [[1]], "K": [-3], "A": [4]}
    assert client.post("/surfaces/genus", json=lattice).json() == {"KK": 9, "KA": -12, "AA": 16, "g": 3}


def test_surface_genus_rejects_bad_lattice(client):
    lattice = {"labels": ["H", "f"], "gram": [[0, 1], [2, 0]], "K": [-2, 0], "A": [2, 2]}
    assert client.post("/surfaces/genus", json=lattice).status_code == 422


def test_minimalization(client):
    body = {"g_min": 6, "AA_min": 16, "KK_min": 9, "weights": [3, 2]}
    assert client.post("/surfaces/minimalization", json=body).json() == {
        "g": 2, "AA": 3, "KK": 7, "genus_drop": 4}
    body["weights"] = [0]
    assert client.post("/surfaces/minimalization", json=body).status_code == 400


def test_verification_tables(client):
    assert set(client.get("/verification/tables").json()) == {
        "surfaces", "quadrics", "reductions", "deg-t", "veronese"}


def test_verify_table(client):
    report = client.get("/verification/verify/surfaces").json()
    assert report["exit_status"] == 0
    assert report["summary"]["discrepancy"] == 1


def test_verify_unknown_table(client):
    assert client.get("/verification/verify/3.25").status_code == 404
