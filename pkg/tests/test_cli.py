"""Command-line surface: compute subcommands, verify runs, exit codes."""

import csv
import io
import json
import math

import numpy as np
import pytest

from sectormeans import dumps_matrix, loads_matrix
from sectormeans.cli import CSV_HEADER, main


def put(tmp_path, name, M):
    path = tmp_path / name
    path.write_text(dumps_matrix(np.asarray(M, dtype=np.complex128)) + "\n")
    return str(path)


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


# ----------------------------------------------------------------- compute


def test_compute_power_diagonal(tmp_path, capsys):
    path = put(tmp_path, "a.json", np.diag([1.0, 4.0]))
    code, out, _ = run_cli(capsys, "compute", "power", path, "--r", "1.5")
    assert code == 0
    M = loads_matrix(out)
    np.testing.assert_allclose(M, np.diag([1.0, 8.0]), atol=1e-8)


def test_compute_power_engines_agree(tmp_path, capsys):
    rng = np.random.default_rng(5)
    A = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3)) + 4.0 * np.eye(3)
    path = put(tmp_path, "a.json", A)
    _, out_q, _ = run_cli(capsys, "compute", "power", path, "--r", "0.5", "--engine", "quad")
    _, out_e, _ = run_cli(capsys, "compute", "power", path, "--r", "0.5", "--engine", "eigen")
    assert np.linalg.norm(loads_matrix(out_q) - loads_matrix(out_e)) <= 1e-8 * np.linalg.norm(A)


def test_compute_power_rejects_nonaccretive(tmp_path, capsys):
    path = put(tmp_path, "bad.json", [[-1.0]])
    code, _, err = run_cli(capsys, "compute", "power", path, "--r", "0.5")
    assert code == 2
    assert "precondition" in err


def test_compute_mean_scalar(tmp_path, capsys):
    a = put(tmp_path, "a.json", [[4.0]])
    b = put(tmp_path, "b.json", [[9.0]])
    code, out, _ = run_cli(capsys, "compute", "mean", a, b, "--r", "0.5")
    assert code == 0
    assert loads_matrix(out)[0, 0] == pytest.approx(6.0, abs=1e-9)


def test_compute_mean_engines(tmp_path, capsys):
    a = put(tmp_path, "a.json", np.diag([1.0, 2.0]))
    b = put(tmp_path, "b.json", np.diag([4.0, 2.0]))
    for engine in ("integral", "eigen", "quad"):
        code, out, _ = run_cli(capsys, "compute", "mean", a, b,
                               "--r", "1.5", "--engine", engine)
        assert code == 0
        np.testing.assert_allclose(loads_matrix(out), np.diag([8.0, 2.0]), atol=1e-8)


def test_compute_mean_endpoint_passthrough(tmp_path, capsys):
    a = put(tmp_path, "a.json", np.diag([1.0, 2.0]))
    b = put(tmp_path, "b.json", np.diag([4.0, 2.0]))
    code, out, _ = run_cli(capsys, "compute", "mean", a, b, "--r", "0")
    assert code == 0
    np.testing.assert_allclose(loads_matrix(out), np.diag([1.0, 2.0]), atol=0)


def test_compute_sector(tmp_path, capsys):
    path = put(tmp_path, "s.json", [[1.0 + 1.0j]])
    code, out, _ = run_cli(capsys, "compute", "sector", path)
    assert code == 0
    assert float(out) == pytest.approx(math.pi / 4, abs=1e-10)


def test_compute_wradius(tmp_path, capsys):
    path = put(tmp_path, "n.json", [[0.0, 1.0], [0.0, 0.0]])
    code, out, _ = run_cli(capsys, "compute", "wradius", path)
    assert code == 0
    assert float(out) == pytest.approx(0.5, abs=1e-9)


def test_compute_norm_lists_all(tmp_path, capsys):
    path = put(tmp_path, "d.json", np.diag([1.0, -2.0]))
    code, out, _ = run_cli(capsys, "compute", "norm", path)
    assert code == 0
    d = json.loads(out)
    assert d["operator"] == pytest.approx(2.0)
    assert d["trace"] == pytest.approx(3.0)
    assert d["frobenius"] == pytest.approx(math.sqrt(5.0))
    assert d["kyfan"] == pytest.approx([2.0, 3.0])


def test_compute_missing_file(tmp_path, capsys):
    code, _, err = run_cli(capsys, "compute", "sector", str(tmp_path / "void.json"))
    assert code == 2
    assert "void.json" in err


# ------------------------------------------------------------------ verify


def test_verify_small_json(tmp_path, capsys):
    out_path = tmp_path / "rep.json"
    code, out, _ = run_cli(capsys, "verify", "identities", "--trials", "3",
                           "--seed", "7", "--dims", "2..4", "--nodes", "48",
                           "--out", str(out_path))
    assert code == 0
    assert "PASS" in out
    rep = json.loads(out_path.read_text())
    assert rep["suite"] == "identities"
    assert rep["seed"] == 7
    assert len(rep["checks"]) == 6
    assert rep["summary"]["violations"] == 0


def test_verify_csv_header_exact(tmp_path, capsys):
    out_path = tmp_path / "rep.csv"
    code, _, _ = run_cli(capsys, "verify", "r01", "--trials", "2", "--dims", "2..3",
                         "--nodes", "48", "--check", "C02", "--format", "csv",
                         "--out", str(out_path))
    assert code == 0
    text = out_path.read_text()
    assert text.splitlines()[0] == ",".join(CSV_HEADER)
    rows = list(csv.DictReader(io.StringIO(text)))
    assert rows[0]["check_id"] == "C02"
    assert int(rows[0]["trials"]) == 2


def test_verify_deterministic_reports(tmp_path, capsys):
    args = ("verify", "r12", "--check", "C09", "--trials", "4", "--dims", "2..4",
            "--nodes", "48", "--seed", "42")
    p1, p2 = tmp_path / "r1.json", tmp_path / "r2.json"
    assert run_cli(capsys, *args, "--out", str(p1))[0] == 0
    assert run_cli(capsys, *args, "--out", str(p2))[0] == 0
    r1, r2 = json.loads(p1.read_text()), json.loads(p2.read_text())
    for rep in (r1, r2):
        rep.pop("elapsed_s", None)
        rep["summary"].pop("elapsed_s", None)
        for c in rep["checks"]:
            c.pop("runtime_s", None)
    assert r1 == r2


def test_verify_unknown_check(capsys):
    code, _, err = run_cli(capsys, "verify", "r12", "--check", "C77", "--trials", "2")
    assert code == 1
    assert "C77" in err


def test_verify_check_suite_mismatch(capsys):
    code, _, err = run_cli(capsys, "verify", "r12", "--check", "C01", "--trials", "2")
    assert code == 1


def test_verify_replay_requires_check(capsys):
    code, _, err = run_cli(capsys, "verify", "r12", "--replay", "12345")
    assert code == 1


def test_verify_replay_round_trip(tmp_path, capsys):
    out_path = tmp_path / "rep.json"
    args = ("--trials", "5", "--dims", "2..4", "--nodes", "48", "--seed", "11")
    code, _, _ = run_cli(capsys, "verify", "r12", "--check", "C09", *args,
                         "--out", str(out_path))
    assert code == 0
    rep = json.loads(out_path.read_text())
    seed = rep["checks"][0]["worst_seed"]
    code, out, _ = run_cli(capsys, "verify", "r12", "--check", "C09",
                           "--replay", str(seed), *args)
    assert code == 0
    replay = json.loads(out)
    assert replay["margin"] == rep["checks"][0]["worst_margin"]


def test_verify_replay_unknown_seed(capsys):
    code, _, err = run_cli(capsys, "verify", "r12", "--check", "C09",
                           "--replay", "31337", "--trials", "3")
    assert code == 2
    assert "seed" in err


def test_verify_pd_flag(tmp_path, capsys):
    code, out, _ = run_cli(capsys, "verify", "r12", "--check", "C12", "--pd",
                           "--trials", "4", "--dims", "2..3", "--nodes", "48")
    assert code == 0


def test_verify_tiny_tolerance_fails_closed(capsys):
    # identity residuals sit around 1e-13; an absurd tolerance must trip
    # the failure exit path rather than being silently clamped
    code, out, _ = run_cli(capsys, "verify", "identities", "--check", "I01",
                           "--trials", "2", "--dims", "2..3", "--nodes", "48",
                           "--tol", "1e-300")
    assert code == 3
    assert "FAIL" in out


def test_usage_errors_exit_one(capsys):
    assert run_cli(capsys, "verify", "r12", "--dims", "nope")[0] == 1
    assert run_cli(capsys, "verify", "bogus-suite")[0] == 1
    assert run_cli(capsys, "frobnicate")[0] == 1
    assert run_cli(capsys)[0] == 1


def test_r_override_passthrough(capsys):
    code, _, _ = run_cli(capsys, "verify", "r12", "--check", "C09", "--r", "1.5",
                         "--trials", "3", "--dims", "2..3", "--nodes", "48")
    assert code == 0
    # r outside the check's branch is a precondition problem, not usage
    code, _, err = run_cli(capsys, "verify", "r12", "--check", "C09", "--r", "0.5",
                           "--trials", "3")
    assert code == 2
