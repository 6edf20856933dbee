import pytest
from fastapi.testclient import TestClient

from fcy.service.api import app


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


def test_health(client):
    assert client.get("/health").json()["status"] == "ok"


def test_coxeter(client):
    r = client.post("/coxeter", json={"m": 1, "n": 1})
    assert r.status_code == 200
    body = r.json()
    assert body["schema"] == "fcy/1" and body["command"] == "coxeter"
    assert (body["exponent"], body["sign"], body["holds"]) == (3, -1, True)


def test_orbit(client):
    body = client.post("/orbit", json={"m": 5, "n": 7, "alpha": [0, 2, 3, 7, 7]}).json()
    assert body["ok"] and body["steps"] == 13 and body["sum"] == 35


def test_lattice_and_hom(client):
    L = client.post("/lattice", json={"m": 2, "n": 2}).json()
    assert L["size"] == 6 and len(L["covers"]) == 6
    H = client.post("/hom", json={"m": 2, "n": 2}).json()
    assert H["ok"] and H["pairs"] == 36 and H["nonzero"] == 15


def test_presentation_and_auslander(client):
    P = client.post("/presentation", json={"m": 3, "n": 3, "variant": "w"}).json()
    assert P["ok"] and P["square_types"]["anticommuting"] == 12
    A = client.post("/auslander", json={"s": 4, "d": 1}).json()
    assert A["ok"] and A["checks"] == {"dimensions": True, "self_dual": True}


def test_verify(client):
    body = client.post("/verify", json={"m": 1, "n": 1}).json()
    assert body["ok"] and body["scope"] == "instance"
    assert all(r["passed"] for r in body["results"])


@pytest.mark.parametrize("path,body,status", [
    ("/orbit", {"m": 2, "n": 2, "alpha": [1, 5]}, 400),
    ("/orbit", {"m": 2, "n": 2, "alpha": [1]}, 422),
    ("/lattice", {"m": 0, "n": 2}, 422),
    ("/lattice", {"m": 3, "n": 3, "cap": 5}, 400),
    ("/presentation", {"m": 2, "n": 2, "variant": "z"}, 422),
    ("/coxeter", {"m": 2, "n": 2, "extra": 1}, 422),
])
def test_bad_requests(client, path, body, status):
    assert client.post(path, json=body).status_code == status
