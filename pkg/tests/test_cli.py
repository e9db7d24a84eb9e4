"""CLI contract: formats, exit codes, determinism, remote mode."""

import json
import socket
import subprocess
import sys
import threading
import time

import pytest

from qident.cli import build_parser, main


def run_cli(args, capsys):
    code = main(args)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_qbin_pretty(capsys):
    code, out, _ = run_cli(["qbin", "4", "2"], capsys)
    assert code == 0
    assert out == "1+q+2q^2+q^3+q^4\n"


def test_qbin_coeffs(capsys):
    code, out, _ = run_cli(["qbin", "4", "2", "--format", "coeffs"], capsys)
    assert code == 0
    assert out == "1 1 2 1 1\n"


def test_qbin_json(capsys):
    code, out, _ = run_cli(["qbin", "4", "2", "--format", "json"], capsys)
    assert code == 0
    assert json.loads(out) == {"var": "q", "coeffs": ["1", "1", "2", "1", "1"]}


def test_series_and_oracle_agree(capsys):
    _, series_out, _ = run_cli(["series", "rr1", "--order", "12", "--format", "coeffs"], capsys)
    _, oracle_out, _ = run_cli(["oracle", "rr1", "--order", "12", "--format", "coeffs"], capsys)
    assert series_out == oracle_out


def test_oracle_box(capsys):
    code, out, _ = run_cli(["oracle", "box", "--n", "4", "--k", "2", "--format", "coeffs"], capsys)
    assert code == 0
    assert out == "1 1 2 1 1\n"


def test_eval_with_bindings(capsys):
    code, out, _ = run_cli(
        ["eval", "qbin(n, k)", "--bind", "n=4", "--bind", "k=2", "--format", "coeffs"],
        capsys,
    )
    assert code == 0
    assert out == "1 1 2 1 1\n"


def test_eval_bad_binding_is_usage_error(capsys):
    code, _, err = run_cli(["eval", "q", "--bind", "nonsense"], capsys)
    assert code == 2
    assert "NAME=INT" in err
    code, _, _ = run_cli(["eval", "q", "--bind", "x=oops"], capsys)
    assert code == 2


def test_eval_parse_error_exit_code(capsys):
    code, _, err = run_cli(["eval", "qbin(4"], capsys)
    assert code == 2
    assert "ParseError" in err


def test_verify_single_report(capsys):
    code, out, _ = run_cli(["verify", "eq1", "--n-max", "6"], capsys)
    assert code == 0
    report = json.loads(out)
    assert report == {"identity": "eq1", "checked": 28, "passed": True, "counterexample": None}


def test_verify_with_k_max(capsys):
    code, out, _ = run_cli(["verify", "eq1", "--n-max", "10", "--k-max", "2"], capsys)
    assert code == 0
    assert json.loads(out)["checked"] == 30


def test_verify_all_exit_zero(capsys):
    code, out, _ = run_cli(["verify", "all", "--n-max", "5"], capsys)
    assert code == 0
    body = json.loads(out)
    assert body["passed"] is True
    assert len(body["reports"]) == 21


def test_verify_unknown_identity(capsys):
    code, _, err = run_cli(["verify", "nope", "--n-max", "3"], capsys)
    assert code == 2
    assert "UnknownIdentity" in err


def test_verify_counterexample_exit_code(monkeypatch, capsys):
    """A corrupted identity must turn into exit code 1 and a minimal
    counterexample in the report."""
    from qident import identities
    from qident.qpoly import ZERO
    from qident.qbinom import qbin as real_qbin

    def corrupted(n, k, variant="minus"):
        total = ZERO
        for j in range(-k, k + 1):
            term = real_qbin(n, k - j) * real_qbin(n, k + j)
            if not term.is_zero:
                bad = identities.pent(j) + (1 if j == 1 else 0)
                total = total + term.shift_scale(identities._sign(j), bad)
        return total

    monkeypatch.setattr(identities, "pair_sum", corrupted)
    code, out, _ = run_cli(["verify", "eq1", "--n-max", "10"], capsys)
    assert code == 1
    report = json.loads(out)
    assert report["passed"] is False
    assert report["counterexample"]["params"] == {"n": 2, "k": 1}


def test_arithmetic_failure_maps_to_exit_three(monkeypatch, capsys):
    from qident import service
    from qident.qpoly import NotDivisible

    def broken(n, k):
        raise NotDivisible("synthetic kernel fault")

    monkeypatch.setattr(service, "qbin", broken)
    code, _, err = run_cli(["qbin", "4", "2"], capsys)
    assert code == 3
    assert "arithmetic_error" in err


def test_usage_error_exits_two():
    with pytest.raises(SystemExit) as exc:
        build_parser().parse_args(["qbin", "not-a-number", "2"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        build_parser().parse_args(["series", "rr1"])  # missing --order
    assert exc.value.code == 2


def test_output_is_deterministic(capsys):
    first = run_cli(["verify", "all", "--n-max", "4"], capsys)
    second = run_cli(["verify", "all", "--n-max", "4"], capsys)
    assert first == second


def test_byte_determinism_across_processes():
    cmd = [sys.executable, "-m", "qident.cli", "qbin", "6", "3", "--format", "json"]
    runs = [subprocess.run(cmd, capture_output=True, check=True).stdout for _ in range(2)]
    assert runs[0] == runs[1]
    assert json.loads(runs[0]) == {
        "var": "q",
        "coeffs": ["1", "1", "2", "3", "3", "3", "3", "2", "1", "1"],
    }


def _free_port() -> int:
    sock = socket.socket()
    sock.bind(("127.0.0.1", 0))
    port = sock.getsockname()[1]
    sock.close()
    return port


def test_against_live_server(capsys):
    """--server must hit a real socket, not the in-process app."""
    uvicorn = pytest.importorskip("uvicorn")
    from qident.service import app

    port = _free_port()
    config = uvicorn.Config(app, host="127.0.0.1", port=port, log_level="error")
    server = uvicorn.Server(config)
    thread = threading.Thread(target=server.run, daemon=True)
    thread.start()
    try:
        deadline = time.time() + 10
        while not server.started:
            if time.time() > deadline:
                pytest.skip("server did not come up in time")
            time.sleep(0.05)
        code, out, _ = run_cli(
            ["--server", f"http://127.0.0.1:{port}", "qbin", "4", "2", "--format", "coeffs"],
            capsys,
        )
        assert code == 0
        assert out == "1 1 2 1 1\n"
        code, out, _ = run_cli(
            ["--server", f"http://127.0.0.1:{port}", "verify", "eq15", "--n-max", "6"],
            capsys,
        )
        assert code == 0
        assert json.loads(out)["passed"] is True
    finally:
        server.should_exit = True
        thread.join(timeout=5)


def test_unreachable_server_is_usage_error(capsys):
    port = _free_port()  # nothing is listening here
    code, _, err = run_cli(
        ["--server", f"http://127.0.0.1:{port}", "qbin", "1", "1"], capsys
    )
    assert code == 2
    assert "cannot reach server" in err
