"""HTTP service conformance: endpoints, error statuses, statelessness."""

import json
import subprocess
import sys
import time
from concurrent.futures import ThreadPoolExecutor

import httpx
import pytest
from fastapi.testclient import TestClient

from anita.checker import check
from anita.corpus import EXAMPLES, GOLDEN
from anita.render import report_to_dict, to_json
from anita.script import parse_proof
from anita.service import create_app


@pytest.fixture(scope="module")
def client():
    with TestClient(create_app()) as c:
        yield c


class TestCheck:
    def test_valid_verdict(self, client):
        r = client.post("/check", json={"proof": EXAMPLES["transitivity"]})
        assert r.status_code == 200
        assert r.json()["verdict"] == "valid"

    def test_countermodel_fields(self, client):
        r = client.post("/check", json={"proof": EXAMPLES["countermodel-2"]})
        assert r.status_code == 200
        assert r.json()["countermodel"] == {"A": "T", "C": "F"}

    def test_http_200_for_every_verdict(self, client):
        for name in ("transitivity", "transitivity-incomplete", "countermodel-1", "not-fresh"):
            r = client.post("/check", json={"proof": EXAMPLES[name]})
            assert r.status_code == 200, name
        # parse errors are also a well-formed outcome
        r = client.post("/check", json={"proof": "1. T A pre\n2. F A&\n"})
        assert r.status_code == 200
        assert r.json()["verdict"] == "parse_error"

    def test_empty_proof_is_400(self, client):
        assert client.post("/check", json={"proof": ""}).status_code == 400
        assert client.post("/check", json={}).status_code == 400

    def test_malformed_json_is_400(self, client):
        r = client.post("/check", content=b"{oops",
                        headers={"content-type": "application/json"})
        assert r.status_code == 400

    def test_oversized_body_is_413(self, client):
        r = client.post("/check", json={"proof": "x" * (1 << 20 + 1)})
        assert r.status_code == 413

    def test_matches_cli_json_byte_for_byte(self, client):
        for name, text in EXAMPLES.items():
            body = client.post("/check", json={"proof": text}).text
            expected = to_json(report_to_dict(check(parse_proof(text))))
            assert body == expected, name

    def test_grading_fields(self, client):
        r = client.post("/check", json={
            "proof": EXAMPLES["transitivity"],
            "expect": "valid",
            "expected_sequent": "A->B, B->C, A |- C"})
        assert r.json()["grade_ok"] is True
        r = client.post("/check", json={
            "proof": EXAMPLES["transitivity"], "expect": "countermodel"})
        assert r.json()["grade_ok"] is False
        r = client.post("/check", json={
            "proof": EXAMPLES["transitivity"], "expected_sequent": "A |- C"})
        assert r.json()["grade_ok"] is False

    def test_no_grading_field_without_expectations(self, client):
        r = client.post("/check", json={"proof": EXAMPLES["transitivity"]})
        assert "grade_ok" not in r.json()

    def test_bad_expect_value(self, client):
        r = client.post("/check", json={"proof": EXAMPLES["transitivity"], "expect": "perfect"})
        assert r.status_code == 400


class TestLatex:
    def test_valid(self, client):
        r = client.post("/latex", json={"proof": EXAMPLES["transitivity"]})
        assert r.status_code == 200
        assert "\\Tree" in r.json()["latex"]

    def test_incomplete_red(self, client):
        r = client.post("/latex", json={"proof": EXAMPLES["transitivity-incomplete"]})
        assert "\\color{red}" in r.json()["latex"]

    def test_garbage_is_422(self, client):
        r = client.post("/latex", json={"proof": "garbage"})
        assert r.status_code == 422
        assert r.json()["verdict"] == "parse_error"


class TestProve:
    def test_closed(self, client):
        r = client.post("/prove", json={"sequent": "A->B, B->C, A |- C"})
        assert r.status_code == 200
        doc = r.json()
        assert doc["result"] == "closed" and "pre" in doc["script"]

    def test_open(self, client):
        r = client.post("/prove", json={"sequent": "A, A&B->C |- C"})
        assert r.json() == {"result": "open",
                            "countermodel": {"A": "T", "B": "F", "C": "F"}}

    def test_first_order_is_422(self, client):
        assert client.post("/prove", json={"sequent": "Ax H(x) |- H(a)"}).status_code == 422


class TestHealth:
    def test_ok(self, client):
        r = client.get("/health")
        assert r.status_code == 200
        doc = r.json()
        assert doc["status"] == "ok" and doc["version"]

    def test_ok_after_many_checks(self, client):
        for _ in range(50):
            client.post("/check", json={"proof": EXAMPLES["identity"]})
        assert client.get("/health").json()["status"] == "ok"


class TestStatelessness:
    def test_concurrent_identical_requests_identical_bodies(self, client):
        payload = {"proof": EXAMPLES["transitivity"]}

        def run(_):
            return client.post("/check", json=payload).text

        with ThreadPoolExecutor(max_workers=16) as pool:
            bodies = list(pool.map(run, range(50)))
        assert len(set(bodies)) == 1

    def test_interleaved_requests_do_not_leak(self, client):
        names = ["transitivity", "countermodel-1", "not-fresh", "identity"] * 5
        expected = {name: client.post("/check", json={"proof": EXAMPLES[name]}).text
                    for name in set(names)}

        def run(name):
            return name, client.post("/check", json={"proof": EXAMPLES[name]}).text

        with ThreadPoolExecutor(max_workers=8) as pool:
            for name, body in pool.map(run, names):
                assert body == expected[name]


class TestServeCommand:
    def test_real_server_answers_health_and_check(self, tmp_path):
        port = 8601
        proc = subprocess.Popen(
            [sys.executable, "-m", "anita", "serve", "--port", str(port)],
            stdout=subprocess.DEVNULL, stderr=subprocess.DEVNULL)
        try:
            base = f"http://127.0.0.1:{port}"
            for _ in range(100):
                try:
                    r = httpx.get(f"{base}/health", timeout=1.0)
                    if r.status_code == 200:
                        break
                except httpx.HTTPError:
                    time.sleep(0.1)
            else:
                pytest.fail("service did not come up")
            r = httpx.post(f"{base}/check", json={"proof": EXAMPLES["transitivity"]},
                           timeout=5.0)
            assert r.status_code == 200 and r.json()["verdict"] == "valid"
        finally:
            proc.terminate()
            proc.wait(timeout=10)

    def test_port_in_use_is_usage_error(self):
        import socket

        from anita.cli import main

        sock = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
        sock.bind(("127.0.0.1", 0))
        port = sock.getsockname()[1]
        sock.listen(1)
        try:
            assert main(["serve", "--port", str(port)]) == 3
        finally:
            sock.close()
