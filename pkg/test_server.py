#!/usr/bin/env python3
"""
HTTP tests for the Tamari Engine API
"""

import pytest
from fastapi.testclient import TestClient

from src.main import app


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


def test_health(client):
    response = client.get("/health")
    assert response.status_code == 200
    assert response.json()["status"] == "healthy"


def test_count(client):
    response = client.post("/api/v1/count", json={"n": 3, "oracle": True})
    assert response.status_code == 200
    body = response.json()
    assert body["success"] is True
    assert body["generated"] == body["formula"] == body["oracle"] == 13
    assert "processing_time_ms" in body


def test_count_validation(client):
    response = client.post("/api/v1/count", json={"n": -1})
    assert response.status_code == 422


def test_poly(client):
    response = client.post("/api/v1/poly", json={"tree": "110010110100"})
    assert response.status_code == 200
    assert response.json()["polynomial"]["text"] == "x^3 + 2x^4 + 2x^5 + x^6"


def test_convert_error_is_a_bad_request(client):
    response = client.post("/api/v1/convert", json={"value": "110", "source": "dyck", "target": "bracket"})
    assert response.status_code == 400
    assert response.json()["detail"]["error_type"] == "UnbalancedWord"


def test_interval_contents(client):
    response = client.post(
        "/api/v1/interval",
        json={"relations": [[2, 1], [3, 4]], "size": 4, "view": "contents"},
    )
    assert response.status_code == 200
    assert len(response.json()["value"]) >= 1


def test_interval_unknown_view(client):
    response = client.post("/api/v1/interval", json={"relations": [], "size": 2, "view": "nope"})
    assert response.status_code == 400


def test_compose_and_decompose(client):
    response = client.post(
        "/api/v1/compose",
        json={"left": {"size": 0, "relations": []}, "rights": [{"size": 2, "relations": []}]},
    )
    assert response.status_code == 200
    terms = response.json()["terms"]
    assert len(terms) == 3
    last = terms[-1]["poset"]
    response = client.post("/api/v1/decompose", json={"relations": last["relations"], "size": last["size"]})
    assert response.json()["rights"] == [{"size": 2, "relations": []}]


def test_lattice(client):
    response = client.post("/api/v1/lattice", json={"n": 2, "m": 2})
    assert response.status_code == 200
    assert response.json()["elements"] == 3


def test_compose_accepts_a_single_right_operand(client):
    response = client.post(
        "/api/v1/compose",
        json={"left": {"size": 1, "relations": []}, "right": {"size": 0, "relations": []}},
    )
    assert response.status_code == 200
    assert response.json()["weight"] == "x^2y^2"


def test_count_of_the_empty_size(client):
    response = client.post("/api/v1/count", json={"n": 0})
    assert response.json()["generated"] == response.json()["formula"] == 1


def test_malformed_relation_is_a_bad_request(client):
    response = client.post("/api/v1/interval", json={"relations": [[]], "size": 2, "view": "stats"})
    assert response.status_code == 400
    assert response.json()["detail"]["error_type"] == "ParseError"


def test_interval_views_are_guarded(client):
    response = client.post("/api/v1/interval", json={"relations": [], "size": 12, "view": "linext"})
    assert response.status_code == 400
    assert response.json()["detail"]["error_type"] == "ScaleGuard"
    response = client.post("/api/v1/interval", json={"relations": [], "size": 8, "view": "contents"})
    assert response.status_code == 400
    response = client.post("/api/v1/interval", json={"relations": [], "size": 3, "view": "linext", "force": True})
    assert response.status_code == 200
    assert len(response.json()["value"]) == 6


def test_convert_rejects_zero_arity(client):
    response = client.post("/api/v1/convert", json={"value": "1100", "source": "dyck", "target": "ballot", "m": 0})
    assert response.status_code == 422
