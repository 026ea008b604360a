import pytest
from fastapi.testclient import TestClient

from src.api.main import app
from src.config import settings


@pytest.fixture
def client():
    return TestClient(app)


def test_root_and_health(client):
    assert client.get("/").json()["message"] == "Refinery API"
    health = client.get("/health").json()
    assert health["status"] == "healthy"
    assert health["oracle_cap"] == settings.oracle_cap


class TestSearch:
    def test_stabiliser(self, client):
        response = client.post(
            "/api/v1/search/stabiliser", json={"degree": 4, "kind": "set-of-sets", "source": "{{1,4},{2,3}}"}
        )
        assert response.status_code == 200
        body = response.json()
        assert body["order"] == 8
        assert body["perfect"] is True
        assert body["representative"] is None

    def test_empty_transporter(self, client):
        body = client.post(
            "/api/v1/search/transporter", json={"degree": 4, "kind": "subset", "source": "{1,2}", "target": "{1,2,3}"}
        ).json()
        assert body["empty"] is True
        assert body["order"] is None

    def test_transporter_needs_target(self, client):
        response = client.post("/api/v1/search/transporter", json={"degree": 4, "kind": "subset", "source": "{1}"})
        assert response.status_code == 400

    def test_point_outside_domain(self, client):
        response = client.post("/api/v1/search/stabiliser", json={"degree": 3, "kind": "point", "source": "7"})
        assert response.status_code == 400

    def test_digraph_document(self, client):
        document = "digraph n=3\nv 1 x\nv 2 x\nv 3 y\na 1 2 x\na 2 1 x\n"
        body = client.post(
            "/api/v1/search/stabiliser", json={"degree": 3, "kind": "labelled-digraph", "source": document}
        ).json()
        assert body["order"] == 2

    def test_intersect(self, client):
        queries = [{"kind": "subset", "source": "{1,2}"}, {"kind": "point", "source": "5"}]
        body = client.post("/api/v1/search/intersect", json={"degree": 5, "queries": queries}).json()
        assert body["order"] == 4
        assert body["nodes"] == 1
        assert body["perfect"] is True
        assert body["refiner_applications"] == 2
        plain = client.post(
            "/api/v1/search/intersect", json={"degree": 5, "queries": queries, "apply_refiners": False}
        ).json()
        assert plain["order"] == 4
        assert plain["nodes"] > 1
        assert plain["refiner_applications"] == 0

    def test_overlapping_family_is_exact(self, client):
        body = client.post(
            "/api/v1/search/stabiliser",
            json={"degree": 4, "kind": "disjoint-sets", "source": "{{1,2,3},{1,2}}"},
        ).json()
        assert body["perfect"] is False
        assert body["exact"] is True
        assert body["order"] == 2

    def test_benchmark(self, client, monkeypatch, benchmark_file):
        monkeypatch.setattr(settings, "benchmark_path", str(benchmark_file))
        rows = client.get("/api/v1/search/benchmark").json()
        assert len(rows) == 10
        assert all(row["refined_nodes"] <= row["plain_nodes"] for row in rows)

    def test_missing_benchmark_file(self, client, monkeypatch, tmp_path):
        monkeypatch.setattr(settings, "benchmark_path", str(tmp_path / "missing.json"))
        assert client.get("/api/v1/search/benchmark").status_code == 500


class TestGroups:
    def test_normaliser(self, client):
        body = client.post("/api/v1/groups/normaliser", json={"degree": 4, "gens": ["(1 2 3 4)"]}).json()
        assert body["exact"] is True
        assert body["order"] == 8

    def test_normaliser_over_cap(self, client):
        body = client.post("/api/v1/groups/normaliser", json={"degree": 4, "gens": ["(1 2 3 4)"], "cap": 2}).json()
        assert body["exact"] is False
        assert body["order"] is None

    def test_is_two_closed(self, client):
        body = client.post("/api/v1/groups/is-two-closed", json={"degree": 4, "gens": ["(1 2 3)", "(2 3 4)"]}).json()
        assert body == {"two_closed": False, "order": 12, "closure_order": 24}

    def test_two_closure(self, client):
        body = client.post("/api/v1/groups/two-closure", json={"degree": 4, "gens": ["(1 2 3 4)"]}).json()
        assert body["order"] == 4

    def test_conjugate(self, client):
        body = client.post(
            "/api/v1/groups/conjugate", json={"degree": 4, "gens": ["(1 2)"], "to_gens": ["(3 4)"]}
        ).json()
        assert body["empty"] is False
        assert body["order"] == 4

    def test_centraliser(self, client):
        body = client.post("/api/v1/groups/centraliser", json={"degree": 4, "gens": ["(1 2)(3 4)"]}).json()
        assert body["order"] == 8

    def test_malformed_generator(self, client):
        response = client.post("/api/v1/groups/normaliser", json={"degree": 4, "gens": ["(1 5)"]})
        assert response.status_code == 400


class TestRefiners:
    def test_check(self, client):
        body = client.post(
            "/api/v1/refiners/check", json={"degree": 4, "kind": "subset", "source": "{1,2}", "samples": 5, "seed": 1}
        ).json()
        assert body["perfect"] is True
        assert [r["check"] for r in body["reports"]] == ["sound", "perfect"]
        assert all(r["passed"] and r["lines"] == ["PASS"] for r in body["reports"])

    def test_encode(self, client):
        body = client.post("/api/v1/refiners/encode", json={"degree": 4, "kind": "subset", "source": "{1,2}"}).json()
        assert body["kind"] == "ordered-partition"
        assert body["length"] == 1
        assert body["entries"] == ["partition n=4 | 1 2 | 3 4"]

    def test_oracle(self, client):
        body = client.post(
            "/api/v1/refiners/oracle",
            json={"degree": 4, "kind": "subset", "source": "{1,2}", "target": "{1,3}", "transport": True},
        ).json()
        assert body["empty"] is False
        assert body["order"] == 4

    def test_oracle_rejects_groups(self, client):
        response = client.post("/api/v1/refiners/oracle", json={"degree": 4, "kind": "group", "gens": ["(1 2)"]})
        assert response.status_code == 400
