import json
import subprocess
import sys

import pytest

_CMD = [sys.executable, "-m", "conjlab.cli"]


def run(*args):
    return subprocess.run(
        _CMD + [str(a) for a in args], capture_output=True, text=True, timeout=300
    )


def test_version_banner():
    r = run("--version")
    assert r.returncode == 0
    assert "twopart-gamma+lz77/m16" in r.stdout
    assert "C2" in r.stdout


def test_collatz_verify_summary():
    r = run("collatz", "verify", "--lo", 1, "--hi", 1000, "--budget", 1000)
    assert r.returncode == 0
    assert r.stdout == "1,1000,1000,0,113\n"
    assert "chunks=" in r.stderr


def test_collatz_verify_candidates_exit_1():
    r = run("collatz", "verify", "--lo", 27, "--hi", 27, "--budget", 5)
    assert r.returncode == 1
    assert r.stdout.splitlines() == ["27,27,0,1,0", "27,5,71"]


def test_collatz_verify_jsonl():
    r = run("collatz", "verify", "--lo", 1, "--hi", 100, "--budget", 500,
            "--format", "jsonl")
    assert r.returncode == 0
    rep = json.loads(r.stdout)
    assert rep["verified_count"] == 100
    assert rep["counterexample_candidates"] == []


def test_collatz_trajectory():
    r = run("collatz", "trajectory", "--n", 5, "--max-steps", 100)
    assert r.returncode == 0
    assert r.stdout.splitlines() == ["0,5,1", "1,8,0", "2,4,0", "3,2,0", "4,1,1"]


def test_collatz_trajectory_truncated_exit_1():
    r = run("collatz", "trajectory", "--n", 27, "--max-steps", 3)
    assert r.returncode == 1


def test_collatz_stopping_time():
    r = run("collatz", "stopping-time", "--n", 27, "--budget", 1000)
    assert r.returncode == 0
    assert r.stdout == "27,70,4616\n"


def test_collatz_stopping_time_budget_exhausted():
    r = run("collatz", "stopping-time", "--n", 27, "--budget", 5)
    assert r.returncode == 1
    assert r.stdout == ""
    assert "budget" in r.stderr


def test_parity_extract():
    r = run("parity", "extract", "--n", 7, "--k", 3)
    assert r.stdout == "7,3,111\n"


def test_parity_realize_pinned():
    r = run("parity", "realize", "--bits", "111")
    assert r.returncode == 0
    assert r.stdout == "3,7,7\n"


def test_parity_bijection():
    r = run("parity", "bijection", "--k", 8)
    assert r.returncode == 0
    assert r.stdout == "8,true\n"


def test_parity_score():
    r = run("parity", "score", "--bits", "0" * 1024)
    assert r.returncode == 0
    assert r.stdout == "1024,45,979\n"
    assert "estimator=twopart-gamma+lz77/m16" in r.stderr


def test_parity_score_from_orbit():
    r = run("parity", "score", "--n", 27, "--k", 64)
    assert r.returncode == 0
    length, estimate, deficiency = map(int, r.stdout.split(","))
    assert length == 64
    assert deficiency == length - estimate


def test_parity_score_requires_input():
    r = run("parity", "score")
    assert r.returncode == 2
    assert "error:" in r.stderr


def test_parity_fraction():
    r = run("parity", "fraction", "--k", 8, "--samples", 256, "--seed", 1,
            "--threshold", 0)
    assert r.returncode == 0
    assert r.stdout == "8,256,0,1.0\n"


def test_walk_simulate_deterministic():
    args = ("walk", "simulate", "--trials", 32, "--steps", 2000, "--seed", 11)
    a = run(*args)
    b = run(*args, "--workers", 8)
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout
    assert "expected_step_drift=" in a.stderr
    fields = a.stdout.strip().split(",")
    assert fields[0] == "32" and fields[1] == "2000"


def test_walk_empirical():
    r = run("walk", "empirical", "--lo", 1, "--count", 1, "--k", 2)
    assert r.stdout == "1,1,2,0.5\n"


def test_mertens_sieve_head():
    r = run("mertens", "sieve", "--limit", 100, "--head", 4)
    assert r.stdout.splitlines() == ["1,1", "2,-1", "3,-1", "4,0"]


def test_mertens_series_at():
    r = run("mertens", "series", "--limit", 10000, "--at", "10,100,10000")
    assert r.stdout.splitlines() == ["10,-1", "100,1", "10000,-23"]


def test_mertens_series_at_out_of_range():
    r = run("mertens", "series", "--limit", 100, "--at", "101")
    assert r.returncode == 2
    assert "error:" in r.stderr


def test_mertens_growth():
    r = run("mertens", "growth", "--limit", 10000, "--epsilon", 0.0)
    assert r.stdout == "0.0,0.8944271909999159,5\n"


def test_mertens_compare_deterministic():
    args = ("mertens", "compare", "--limit", 2000, "--trials", 8, "--seed", 3)
    a = run(*args)
    b = run(*args, "--workers", 8)
    assert a.stdout == b.stdout
    assert a.stdout.startswith("2000,8,")


def test_zeta_theta():
    r = run("zeta", "theta", "--t", 30.0)
    t, th, err = r.stdout.strip().split(",")
    assert t == "30.0"
    assert abs(float(th) - 8.057800136548158) < 1e-12
    assert float(err) > 0


def test_zeta_z_terms():
    r = run("zeta", "z", "--t", 100.0)
    fields = r.stdout.strip().split(",")
    assert fields[0] == "100.0"
    assert fields[2] == "3"


def test_zeta_scan():
    r = run("zeta", "scan", "--lo", 10.0, "--hi", 30.0, "--step", 0.05)
    lines = r.stdout.splitlines()
    assert len(lines) == 3
    lo0, hi0 = map(float, lines[0].split(","))
    assert lo0 < 14.134725 < hi0


def test_zeta_count_warning_to_stderr():
    r = run("zeta", "count", "--at", 30.0)
    assert r.returncode == 0
    assert r.stdout == "30.0,4\n"
    assert "warning:" in r.stderr
    clean = run("zeta", "count", "--at", 100.0)
    assert clean.stdout == "100.0,29\n"
    assert clean.stderr == ""


def test_zeta_refine():
    r = run("zeta", "refine", "--lo", 10.0, "--hi", 26.0, "--step", 0.05)
    lines = r.stdout.splitlines()
    assert len(lines) == 3
    idx, t = lines[0].split(",")
    assert idx == "1"
    assert abs(float(t) - 14.134725) < 1e-3


def test_zeta_verify_pinned():
    r = run("zeta", "verify", "--T", 100.0, "--step", 0.05)
    assert r.returncode == 0
    assert r.stdout == "100.0,29,29,true,0.05\n"


def test_zeta_verify_deficit_exit_1():
    r = run("zeta", "verify", "--T", 30.0, "--step", 0.05, "--max-refinements", 1)
    assert r.returncode == 1
    assert r.stdout.startswith("30.0,3,4,false,")


def test_jsonl_format():
    r = run("zeta", "verify", "--T", 100.0, "--format", "jsonl")
    rep = json.loads(r.stdout)
    assert rep == {
        "T": 100.0,
        "sign_change_count": 29,
        "analytic_count": 29,
        "verified": True,
        "grid_step": 0.05,
    }
    r = run("parity", "realize", "--bits", "111", "--format", "jsonl")
    assert json.loads(r.stdout) == {"k": 3, "residue": 7, "witness": 7}


@pytest.mark.parametrize(
    "args",
    [
        ("collatz", "verify", "--lo", 5, "--hi", 1, "--budget", 10),
        ("collatz", "verify", "--lo", 0, "--hi", 10, "--budget", 10),
        ("collatz", "stopping-time", "--n", -3, "--budget", 10),
        ("parity", "realize", "--bits", "10a1"),
        ("parity", "bijection", "--k", 99),
        ("parity", "fraction", "--k", 8, "--samples", 0),
        ("walk", "simulate", "--trials", 0, "--steps", 10),
        ("walk", "simulate", "--trials", 5, "--steps", 10, "--p-odd", 1.5),
        ("walk", "empirical", "--lo", 0, "--count", 5, "--k", 3),
        ("mertens", "sieve", "--limit", 0),
        ("mertens", "growth", "--limit", 100, "--epsilon", -1.0),
        ("mertens", "compare", "--limit", 1, "--trials", 5),
        ("zeta", "theta", "--t", 5.0),
        ("zeta", "z", "--t", 9.9),
        ("zeta", "scan", "--lo", 30.0, "--hi", 10.0),
        ("zeta", "verify", "--T", 13.0),
    ],
)
def test_domain_errors_exit_2(args):
    r = run(*args)
    assert r.returncode == 2
    assert "error:" in r.stderr
    assert r.stdout == ""


def test_usage_errors_exit_2():
    assert run("collatz", "verify", "--lo", 1).returncode == 2
    assert run("nonsense").returncode == 2
    assert run("zeta", "unknowncmd").returncode == 2


def test_repeat_runs_byte_identical():
    for args in [
        ("parity", "fraction", "--k", 64, "--samples", 16, "--seed", 9),
        ("walk", "simulate", "--trials", 8, "--steps", 500, "--seed", 2),
        ("collatz", "verify", "--lo", 1, "--hi", 5000, "--budget", 500),
    ]:
        assert run(*args).stdout == run(*args).stdout
