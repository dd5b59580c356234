import pytest
from fastapi.testclient import TestClient

from compenv.service import create_app
from compenv.session import open_session
from compenv.syntax import config
from compenv.verification import build_consistent_static, static_accepts
from compenv.evolving import Nfa1


@pytest.fixture()
def client():
    return TestClient(create_app())


def make_session(client, kind="ee", seed=None):
    body = {"kind": kind}
    if seed is not None:
        body["seed"] = seed
    response = client.post("/sessions", json=body)
    assert response.status_code == 200
    return response.json()["id"]


class TestSessions:
    def test_create_returns_handle(self):
        client = TestClient(create_app())
        response = client.post("/sessions", json={"kind": "blinded", "seed": 7})
        assert response.status_code == 200
        body = response.json()
        assert body["kind"] == "blinded" and body["id"]

    def test_unknown_kind_409(self, client):
        assert client.post("/sessions", json={"kind": "zz"}).status_code == 409

    def test_unknown_session_404(self, client):
        assert client.post("/sessions/deadbeef/sbox",
                           json={"config": "(h, 1[_])"}).status_code == 404


class TestQueries:
    def test_sbox_order_pair(self, client):
        sid = make_session(client, "ee")
        first = client.post(f"/sessions/{sid}/sbox", json={"config": "(h, 111[_])"})
        second = client.post(f"/sessions/{sid}/sbox", json={"config": "(h, 11[_])"})
        assert first.json() == {"verdict": "YES"}
        assert second.json() == {"verdict": "NO"}

    def test_fresh_session_accepts(self, client):
        sid = make_session(client, "ee")
        response = client.post(f"/sessions/{sid}/sbox", json={"config": "(h, 111[_])"})
        assert response.json()["verdict"] == "YES"

    def test_tbox(self, client):
        sid = make_session(client, "et")
        response = client.post(f"/sessions/{sid}/tbox", json={
            "config": "(q1, _00[1]101)", "instruction": "q1,1/q2,1,L"})
        assert response.json() == {"answer": "(q2, 0[0]1101)"}

    def test_tbox_undefined(self, client):
        sid = make_session(client, "et")
        response = client.post(f"/sessions/{sid}/tbox", json={
            "config": "(q0, [_])", "instruction": "q1,0/h,0,R"})
        assert response.json() == {"answer": None}

    def test_malformed_config_409(self, client):
        sid = make_session(client, "et")
        assert client.post(f"/sessions/{sid}/sbox",
                           json={"config": "(broken"}).status_code == 409

    def test_malformed_instruction_409(self, client):
        sid = make_session(client, "et")
        assert client.post(f"/sessions/{sid}/tbox", json={
            "config": "(q0, [_])", "instruction": "nope"}).status_code == 409


class TestRun:
    def test_run_scan_right(self, client):
        sid = make_session(client, "et")
        response = client.post(f"/sessions/{sid}/run", json={
            "procedure": "q0,_/h,_,R; h,0/h,0,R; h,1/h,1,R", "input": "101"})
        body = response.json()
        assert body["outcome"] == "success" and body["time"] == 5
        assert body["path"][0] == "(q0, [_]101)"
        assert body["path"][-1] == "(h, 101[_])"

    def test_nondeterministic_procedure_409(self, client):
        sid = make_session(client, "et")
        response = client.post(f"/sessions/{sid}/run", json={
            "procedure": "q0,0/q0,0,R; q0,0/q1,1,L", "input": "0"})
        assert response.status_code == 409

    def test_empty_procedure_single_configuration_path(self, client):
        sid = make_session(client, "et")
        response = client.post(f"/sessions/{sid}/run", json={
            "procedure": "# nothing", "input": "1"})
        body = response.json()
        assert body["outcome"] == "stuck-no" and body["time"] == 1
        assert body["path"] == ["(q0, [_]1)"]


class TestTranscript:
    def test_pass_through_equals_library_export(self, client):
        sid = make_session(client, "ee")
        client.post(f"/sessions/{sid}/sbox", json={"config": "(h, 111[_])"})
        client.post(f"/sessions/{sid}/sbox", json={"config": "(h, 11[_])"})
        body = client.get(f"/sessions/{sid}/transcript").text

        mirror = open_session("ee")
        mirror.query_sbox(config("h", "111", "_", ""))
        mirror.query_sbox(config("h", "11", "_", ""))
        assert body == mirror.export_transcript().to_jsonl()


class TestSerialization:
    def test_concurrent_queries_serialize_in_one_session(self, client):
        import json
        import threading

        sid = make_session(client, "ee")

        def worker(words):
            for w in words:
                client.post(f"/sessions/{sid}/sbox", json={"config": f"(h, {w}[_])"})

        threads = [threading.Thread(target=worker,
                                    args=(["01" * (i + 1)] * 10,))
                   for i in range(3)]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        lines = client.get(f"/sessions/{sid}/transcript").text.splitlines()
        assert len(lines) == 30
        seqs = [json.loads(line)["seq"] for line in lines]
        assert seqs == list(range(1, 31))


class TestReveal:
    def test_reveal_returns_kind_and_certificate(self, client):
        sid = make_session(client, "blinded", seed=3)
        client.post(f"/sessions/{sid}/sbox", json={"config": "(h, 10[_])"})
        response = client.post(f"/sessions/{sid}/reveal", json={"guess": "static"})
        body = response.json()
        assert body["kind"] in ("et", "ee")
        assert body["guess_matched"] in (True, False)
        cert = body["certificate"]
        assert cert["reproduces_all"]
        acceptor = Nfa1(frozenset(cert["acceptor"]["states"]),
                        cert["acceptor"]["start"],
                        tuple(((t["from"], t["symbol"]), t["to"])
                              for t in cert["acceptor"]["transitions"]),
                        frozenset(cert["acceptor"]["accepting"]))
        for x, bit in cert["pairs"]:
            assert static_accepts(acceptor, x) == bool(bit)

    def test_reveal_closes_session(self, client):
        sid = make_session(client, "blinded", seed=5)
        client.post(f"/sessions/{sid}/reveal", json={})
        after = client.post(f"/sessions/{sid}/sbox", json={"config": "(h, 1[_])"})
        assert after.status_code == 409

    def test_double_reveal_409(self, client):
        sid = make_session(client, "blinded", seed=5)
        assert client.post(f"/sessions/{sid}/reveal", json={}).status_code == 200
        assert client.post(f"/sessions/{sid}/reveal", json={}).status_code == 409

    def test_reveal_non_blinded_409(self, client):
        sid = make_session(client, "ee")
        assert client.post(f"/sessions/{sid}/reveal", json={}).status_code == 409

    def test_seeded_blinded_kind_deterministic(self, client):
        kinds = set()
        for _ in range(2):
            sid = make_session(client, "blinded", seed=11)
            kinds.add(client.post(f"/sessions/{sid}/reveal", json={}).json()["kind"])
        assert len(kinds) == 1
