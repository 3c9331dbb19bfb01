import json

import pytest
from fastapi.testclient import TestClient

from wpline.cli import main
from wpline.fixtures import fixture, fixture_json
from wpline.service import create_app


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


def test_fixture_listing(client):
    resp = client.get("/fixtures")
    assert resp.status_code == 200
    names = resp.json()["fixtures"]
    assert len(names) >= 7 and "target_tubular_333" in names


def test_fixture_payload_and_404(client):
    resp = client.get("/fixtures/cuboid_cluster_244")
    assert resp.status_code == 200
    assert len(resp.json()["fixture"]["vertices"]) == 9
    assert client.get("/fixtures/nope").status_code == 404


def test_mutate_involution(client):
    q = fixture_json("tbar_cluster_333")
    body = {"quiver": {"vertices": q["vertices"], "arrows": q["arrows"]}}
    once = client.post("/mutate", json={**body, "vertex": 1}).json()["quiver"]
    twice = client.post("/mutate", json={"quiver": once, "vertex": 1}).json()["quiver"]
    original = fixture("tbar_cluster_333").to_json_dict()
    assert twice == original


def test_apply_and_iso(client):
    q = fixture("tbar_cluster_333").to_json_dict()
    res = client.post("/apply", json={"quiver": q, "sequence": [1, 2, 3]})
    assert res.status_code == 200
    t = fixture("target_tubular_333").to_json_dict()
    iso = client.post("/iso", json={"q1": res.json()["quiver"], "q2": t})
    assert iso.status_code == 200
    body = iso.json()
    assert body["isomorphic"] is True and body["witness"]


def test_search_endpoint(client):
    src = fixture("tbar_cluster_333").to_json_dict()
    tgt = fixture("target_tubular_333").to_json_dict()
    resp = client.post("/search", json={"source": src, "target": tgt, "maxDepth": 3})
    assert resp.status_code == 200
    seq = resp.json()["sequence"]
    assert seq is not None and len(seq) <= 3


def test_error_codes(client):
    assert client.post("/mutate", content=b"not json").status_code == 400
    assert client.post("/mutate", json={"quiver": {"vertices": []}, "vertex": 1}).status_code == 400
    loop = {
        "vertices": [{"id": 1, "label": "a"}],
        "arrows": [{"from": 1, "to": 1, "mult": 1}],
    }
    assert client.post("/mutate", json={"quiver": loop, "vertex": 1}).status_code == 422
    two_cycle = {
        "vertices": [{"id": 1, "label": "a"}, {"id": 2, "label": "b"}],
        "arrows": [{"from": 1, "to": 2, "mult": 1}, {"from": 2, "to": 1, "mult": 1}],
    }
    assert client.post("/mutate", json={"quiver": two_cycle, "vertex": 1}).status_code == 422
    ok = {"vertices": [{"id": 1, "label": "a"}], "arrows": []}
    assert client.post("/mutate", json={"quiver": ok, "vertex": 5}).status_code == 422
    assert client.post("/mutate", json={"quiver": ok}).status_code == 400


def test_bundle_eq_endpoint(client):
    resp = client.post(
        "/bundle/eq",
        json={"weights": [2, 4, 4], "a": "E<0,2,0>(x3)", "b": "E<0,0,0>(x1-x2+x3)"},
    )
    assert resp.status_code == 200 and resp.json()["equal"] is True


def test_replay_endpoint(client):
    resp = client.post("/replay/333")
    assert resp.status_code == 200
    assert resp.json()["pass"] is True
    assert client.post("/replay/999").status_code == 404


def test_cli_and_service_json_identical(client, capsys, tmp_path):
    # the CLI and the HTTP path must serialize the same engine output identically
    resp = client.post("/replay/333")
    out_file = tmp_path / "r.json"
    main(["replay", "333", "--json", str(out_file)])
    capsys.readouterr()
    assert out_file.read_text().strip() == resp.content.decode()

    resp = client.get("/fixtures/target_tubular_244")
    main(["fixtures", "target_tubular_244", "--json"])
    cli_out = capsys.readouterr().out.strip()
    assert json.loads(cli_out)["fixture"] == resp.json()["fixture"]
    # byte-for-byte: both sides use the canonical serializer
    assert cli_out == resp.content.decode()
