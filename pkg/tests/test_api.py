import pytest
from fastapi.testclient import TestClient

from app.api.routers import equation
from app.main import app


@pytest.fixture(scope="module")
def client():
    with TestClient(app) as c:
        yield c


def test_health(client):
    response = client.get("/health")
    assert response.status_code == 200
    assert response.json() == {"status": "ok"}


def test_solve_example_1(client):
    response = client.post("/api/equation/solve", json={"p": 13, "q": 3, "l": 3})
    assert response.status_code == 200
    body = response.json()
    assert [(s["x"], s["y"], s["z"]) for s in body["solutions"]] == [(0, 1, 1), (2, 5, 2731)]
    assert body["solutions"][1]["trace"] == {"k": 1, "alpha": 14, "beta": 1}
    assert body["instance"]["mp"] == {"p": 13, "value": 8191}


def test_solve_positive_only_empty(client):
    response = client.post("/api/equation/solve", json={"p": 3, "q": 2, "l": 7, "positive_only": True})
    assert response.status_code == 200
    body = response.json()
    assert body["solutions"] == []
    assert "LNotDividesTwoPPlus1" in [r["kind"] for r in body["nonexistence_reasons"]]


@pytest.mark.parametrize("payload", [{"p": 4, "q": 3, "l": 3}, {"p": 13, "q": 3, "l": 9}, {"p": 13, "q": 3}])
def test_solve_rejects_invalid_instances(client, payload):
    assert client.post("/api/equation/solve", json=payload).status_code == 422


def test_verify(client):
    response = client.post("/api/equation/verify", json={"p": 13, "q": 3, "l": 3, "x": 2, "y": 5, "z": 2731})
    assert response.status_code == 200
    assert response.json() == {"holds": True, "lhs": 67125249, "rhs": 67125249}


def test_search(client):
    response = client.post("/api/equation/search", json={"p": 13, "q": 5, "l": 3, "x_max": 6, "y_max": 6})
    assert response.status_code == 200
    body = response.json()
    assert body["consistent"] is True
    assert body["discrepancies"] == []
    assert [(s["x"], s["y"], s["z"]) for s in body["oracle"]["solutions"]] == [(2, 3, 2731)]


def test_table1(client):
    response = client.get("/api/equation/tables/1", params={"p_limit": 7})
    assert response.status_code == 200
    rows = response.json()
    assert [tuple(r["solution"]) for r in rows] == [
        (2, 2, 1), (2, 1, 3), (2, 1, 11), (2, 1, 3), (2, 3, 43), (2, 3, 3),
    ]


def test_table1_beyond_factor_cap(client):
    assert client.get("/api/equation/tables/1", params={"p_limit": 89}).status_code == 413


def test_table2(client):
    response = client.get("/api/equation/tables/2")
    assert response.status_code == 200
    assert [r["status"] for r in response.json()] == ["Unsolvable"] * 4


def test_mersenne(client):
    response = client.get("/api/equation/mersenne", params={"p_limit": 7})
    assert response.status_code == 200
    assert response.json() == [
        {"p": 2, "value": 3}, {"p": 3, "value": 7}, {"p": 5, "value": 31}, {"p": 7, "value": 127},
    ]


@pytest.mark.parametrize("path, params", [
    ("/api/equation/mersenne", {"p_limit": 100000}),
    ("/api/equation/tables/1", {"p_limit": 100000}),
])
def test_p_limit_upper_bound(client, path, params):
    assert client.get(path, params=params).status_code == 422


@pytest.mark.parametrize("field", ["x_max", "y_max"])
def test_search_exponent_upper_bound(client, field):
    payload = {"p": 13, "q": 3, "l": 3, field: 10000}
    assert client.post("/api/equation/search", json=payload).status_code == 422


@pytest.mark.parametrize("path, endpoint", [
    ("/api/equation/tables/2", "/equation/tables/2"),
    ("/api/equation/mersenne", "/equation/mersenne"),
])
def test_catalog_endpoints_log_calls(client, monkeypatch, path, endpoint):
    calls = []
    monkeypatch.setattr(equation, "log_api_call", lambda *args: calls.append(args))
    assert client.get(path).status_code == 200
    assert [(c[0], c[3]) for c in calls] == [(endpoint, "success")]
