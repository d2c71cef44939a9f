import pytest
from fastapi.testclient import TestClient

from qbps.service.app import app

THREE_LOOP = {"vertices": ["0"], "edges": [["0", "0"], ["0", "0"], ["0", "0"]]}
JORDAN = {"vertices": ["0"], "edges": [["0", "0"]]}


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


def test_health(client):
    assert client.get("/health").json() == {"status": "ok"}


def test_describe(client):
    r = client.post("/quiver/describe", json={"quiver": THREE_LOOP})
    assert r.status_code == 200
    body = r.json()
    assert body["symmetric"] is True
    assert body["assum11"] is True
    assert body["very_symmetric_A"] == 3
    assert body["alpha_min"] == 4


def test_build_triple(client):
    r = client.post("/quiver/build", json={"quiver": JORDAN, "op": "triple"})
    assert r.status_code == 200
    assert len(r.json()["quiver"]["edges"]) == 3


def test_build_companion_uspec(client):
    q = {"vertices": ["0", "1"],
         "edges": [["0", "1"], ["1", "0"]]}
    r = client.post("/quiver/build", json={"quiver": q, "op": "companion"})
    assert r.status_code == 200
    body = r.json()
    assert body["uspec"] == [["0", "0"], ["1", "1"], ["0", "1"]]


def test_generators_endpoint(client):
    r = client.post("/generators", json={
        "quiver": THREE_LOOP, "d": {"0": 2}, "v": 0})
    assert r.status_code == 200
    assert r.json() == {
        "generators": [{"0": ["-1", "1"]}, {"0": ["0", "0"]}], "count": 2}
    r = client.post("/generators", json={
        "quiver": THREE_LOOP, "d": {"0": 2}, "mu": "0:-1", "window": "dd"})
    assert r.json()["count"] == 3


def test_decompose_endpoint(client):
    r = client.post("/decompose", json={
        "quiver": THREE_LOOP, "d": {"0": 2}, "chi": {"0": ["-2", "2"]}})
    assert r.status_code == 200
    body = r.json()
    assert body["steps"][0]["r"] == "5/6"
    assert body["label"] == [[{"0": 1}, "-1"], [{"0": 1}, "1"]]


def test_sod_framed_endpoint(client):
    r = client.post("/sod/framed", json={
        "quiver": THREE_LOOP, "d": {"0": 2}, "mu": "0:-1", "alpha": 1,
        "generator_counts": True})
    assert r.status_code == 200
    body = r.json()
    assert body["count"] == 2
    assert body["generator_total"] == 3


def test_sod_unframed_endpoint(client):
    r = client.post("/sod/unframed", json={
        "quiver": THREE_LOOP, "d": {"0": 2}, "w": 0, "window": ["-3/2", "3/2"]})
    assert r.json()["count"] == 2


def test_sod_preprojective_endpoint(client):
    q = {"vertices": ["0"], "edges": [["0", "0"], ["0", "0"]]}
    r = client.post("/sod/preprojective", json={
        "quiver": q, "d": {"0": 2}, "window": ["-1", "1"]})
    assert r.status_code == 200
    assert all("shifted" in lab for lab in r.json()["labels"])


def test_check_endpoints(client):
    r = client.post("/check/good-weight", json={
        "quiver": THREE_LOOP, "d": {"0": 2}, "delta": {"0": "1/3"}})
    assert r.json() == {"good": True}
    r = client.post("/check/support", json={"d": {"0": 2}, "v": 1})
    assert r.json()["gate"] is True
    r = client.post("/check/structure", json={
        "quiver": {"vertices": ["0"], "edges": [["0", "0"], ["0", "0"]]},
        "d": {"0": 2}, "v": 1})
    assert r.json()["dim_P"] == 10
    r = client.post("/check/knorrer", json={
        "quiver": {"vertices": ["0", "1"], "edges": [["0", "1"], ["1", "0"]]},
        "d": {"0": 1, "1": 1},
        "partition": [{"0": 1, "1": 0}, {"0": 0, "1": 1}]})
    assert r.json()["ok"] is True


def test_precondition_maps_to_409(client):
    r = client.post("/sod/framed", json={
        "quiver": THREE_LOOP, "d": {"0": 2}, "mu": "0", "alpha": 1})
    assert r.status_code == 409


def test_validation_maps_to_400(client):
    r = client.post("/generators", json={
        "quiver": {"vertices": ["0"], "edges": [["0", "9"]]}, "d": {"0": 2}})
    assert r.status_code == 400
    r = client.post("/quiver/describe", json={
        "quiver": {"vertices": ["∞"], "edges": []}})
    assert r.status_code == 400


def test_verify_endpoint(client):
    r = client.post("/verify", json={"seed": 1, "samples": 25})
    assert r.status_code == 200
    body = r.json()
    assert body["ok"] is True
    assert len(body["checks"]) >= 5


def test_zonotope_endpoint(client):
    r = client.post("/zonotope", json={
        "quiver": THREE_LOOP, "d": {"0": 2}, "x": {"0": ["-5/2", "5/2"]},
        "op": "rinv"})
    assert r.json()["r"] == "5/6"
    r = client.post("/zonotope", json={
        "quiver": THREE_LOOP, "d": {"0": 2}, "x": {"0": ["-8/5", "8/5"]},
        "op": "contains"})
    assert r.json()["contains"] is False
    r = client.post("/zonotope", json={
        "quiver": THREE_LOOP, "d": {"0": 2}, "x": {"0": ["-8/5", "8/5"]},
        "op": "contains", "scale": "2"})
    assert r.json()["contains"] is True
