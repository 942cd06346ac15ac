import json
import os
import socket
import subprocess
import time
import urllib.error
import urllib.request

import pytest

ILC = os.environ.get("ILC_BIN")
pytestmark = pytest.mark.skipif(not ILC, reason="ILC_BIN not set")


def run(*args, stdin=None):
    return subprocess.run([ILC, *args], input=stdin, capture_output=True, text=True)


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def test_exit_codes(tmp_path):
    good = write(tmp_path, "a.ilc", "(fun x -> x) (inl ())")
    stuck = write(tmp_path, "b.ilc", "() ()")
    broken = write(tmp_path, "c.ilc", "fun ->")
    bang = write(tmp_path, "d.ilcd", "inl! ~{()}")
    unit = write(tmp_path, "e.ilc", "()")

    r = run("eval", good)
    assert r.returncode == 0 and r.stdout.strip() == "inl ()"
    assert run("eval", stuck).returncode == 2
    assert run("eval", broken).returncode == 1
    assert run("eval", "-", stdin="inr ()").stdout.strip() == "inr ()"
    assert run("apply", unit, bang).returncode == 2
    assert run("check", bang, unit).returncode == 2
    assert run("compose", bang, bang).returncode == 2
    assert run("frobnicate").returncode == 1
    assert run("eval", str(tmp_path / "missing.ilc")).returncode == 1
    r = run("delta-eval", bang, "--json")
    assert r.returncode == 0
    assert json.loads(r.stdout)["value_delta"]["kind"] == "inlbang"


def test_fuzz_json():
    r = run("fuzz", "--trials", "50", "--seed", "9", "--json")
    assert r.returncode == 0
    out = json.loads(r.stdout)
    assert out["trials"] == 50 and out["incoherent"] == 0


def free_port():
    with socket.socket() as s:
        s.bind(("127.0.0.1", 0))
        return s.getsockname()[1]


def post(port, path, body):
    req = urllib.request.Request(
        f"http://127.0.0.1:{port}{path}",
        data=json.dumps(body).encode(),
        headers={"Content-Type": "application/json"},
        method="POST",
    )
    try:
        with urllib.request.urlopen(req, timeout=10) as resp:
            return resp.status, json.loads(resp.read()), dict(resp.headers)
    except urllib.error.HTTPError as e:
        return e.code, json.loads(e.read()), dict(e.headers)


def test_http_service():
    port = free_port()
    proc = subprocess.Popen([ILC, "serve", "--port", str(port)],
                            stderr=subprocess.DEVNULL)
    try:
        for _ in range(100):
            try:
                socket.create_connection(("127.0.0.1", port), timeout=0.1).close()
                break
            except OSError:
                time.sleep(0.05)
        status, body, headers = post(port, "/eval", {"term": "unroll roll ()"})
        assert status == 200 and body["outcome"]["kind"] == "value"
        assert headers.get("Access-Control-Allow-Origin") == "*"
        status, body, _ = post(port, "/delta-eval", {"delta": "inl! ~{()}"})
        assert body["value_delta"]["kind"] == "inlbang"
        status, body, _ = post(port, "/apply",
                               {"term": "inr ()", "delta": "inl! ~{()}"})
        assert body["term"] == {"kind": "inl", "body": {"kind": "unit"}}
        status, body, _ = post(port, "/parse", {"text": "(", "kind": "term"})
        assert status == 200 and body["error"]["line"] == 1
        status, _, _ = post(port, "/eval", {"nope": 1})
        assert status == 400
    finally:
        proc.terminate()
        proc.wait(timeout=10)
