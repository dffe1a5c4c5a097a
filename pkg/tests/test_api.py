"""HTTP surface tests using FastAPI's test client."""
from __future__ import annotations

import json
from pathlib import Path

import pytest
from fastapi.testclient import TestClient

from cosmos import config as settings
from cosmos.config import Config
from cosmos.main import app

SAMPLES = Path(__file__).resolve().parent.parent / "samples"


@pytest.fixture
def client(monkeypatch: pytest.MonkeyPatch) -> TestClient:
    monkeypatch.setattr(settings, "config", Config())
    return TestClient(app)


def _document(name: str) -> dict:
    return json.loads((SAMPLES / name).read_text(encoding="utf-8"))


def test_health(client: TestClient) -> None:
    response = client.get("/health")
    assert response.status_code == 200
    assert response.json() == {"status": "ok"}


def test_lists_commands(client: TestClient) -> None:
    commands = client.get("/checks").json()
    assert "qcheck" in commands
    assert commands == sorted(commands)


def test_nerve_check(client: TestClient) -> None:
    response = client.post("/checks/qcheck", json={"document": _document("nerve2.json"), "dims": 4})
    assert response.status_code == 200
    body = response.json()
    assert body["status"] == "YES"
    assert body["certificate"]["dims"] == 4


def test_fibration_variant(client: TestClient) -> None:
    document = _document("inclusion.json")
    cartesian = client.post("/checks/fibcheck", json={"document": document})
    cocartesian = client.post("/checks/fibcheck", json={"document": document, "variant": "cocartesian"})
    assert cartesian.json()["status"] == "NO"
    assert cocartesian.json()["status"] == "YES"


def test_unknown_command(client: TestClient) -> None:
    response = client.post("/checks/nonsense", json={"document": _document("nerve2.json")})
    assert response.status_code == 404


def test_corrupt_document_is_unprocessable(client: TestClient) -> None:
    response = client.post("/checks/validate", json={"document": _document("corrupt.json")})
    assert response.status_code == 422
    assert "composite boundary" in response.json()["detail"]


def test_dimension_bound_is_enforced(client: TestClient) -> None:
    response = client.post("/checks/adjcheck", json={"document": _document("galois.json"), "dims": 1})
    assert response.status_code == 422


def test_library_listing(client: TestClient) -> None:
    listing = client.get("/library").json()
    assert "galois" in listing["adjunction"]
    assert "Iso" in listing["category"]


def test_library_group_run(client: TestClient) -> None:
    report = client.post("/library/run", params={"group": "foundations"}).json()
    assert report["passed"]
    assert set(report["groups"]) == {"foundations"}
