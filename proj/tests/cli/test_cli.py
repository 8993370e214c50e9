import json
import os
import subprocess

import pytest

CLI = os.environ.get("PROJCONN_CLI", "projconn")


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True, timeout=300)


def test_report_sphere():
    r = run("report", "--exponents", "2,2,2")
    assert r.returncode == 0
    assert "R(d12,d13) =" in r.stdout
    assert "charpoly3" in r.stdout


def test_report_json_mirrors_text():
    j = json.loads(run("report", "--exponents", "2,2,2", "--json").stdout)
    assert j["M"]["rows"] == 3
    assert j["curvature"][0]["charpoly3"]["det"] == "0"


def test_report_circle_has_no_charpoly():
    r = run("report", "--exponents", "2,2")
    assert r.returncode == 0
    assert "charpoly3" not in r.stdout


@pytest.mark.parametrize("args", [
    ["report", "--exponents", "2,0,2"],
    ["report", "--exponents", "2"],
    ["report"],
    ["verify", "--exponents", "2,2,2", "--suite", "nope"],
    ["verify", "--exponents", "2,2,2", "--samples", "0"],
    ["mcm", "--m", "2", "--n", "2", "--k", "2", "--l", "1"],
    ["jets", "--l", "0", "--k", "1"],
    ["frobnicate"],
])
def test_input_errors_exit_2(args):
    assert run(*args).returncode == 2


def test_verify_full_sphere():
    r = run("verify", "--exponents", "2,2,2", "--seed", "0", "--samples", "5")
    assert r.returncode == 0, r.stdout
    assert r.stdout.strip().endswith("ALL PASS")


def test_verify_curvature_suite():
    assert run("verify", "--suite", "curvature", "--exponents", "2,3,2").returncode == 0


def test_verify_is_deterministic():
    args = ["verify", "--suite", "connection", "--exponents", "2,2,2", "--seed", "3", "--samples", "5", "--json"]
    assert run(*args).stdout == run(*args).stdout


def test_corrupted_build_exits_1_with_witness():
    r = run("verify", "--exponents", "2,2,2", "--suite", "ellipsoid", "--corrupt-fundamental-matrix")
    assert r.returncode == 1
    assert "witness" in r.stdout


def test_jets_sphere_non_flat():
    r = run("jets", "--exponents", "2,2,2", "--l", "1", "--k", "1")
    assert r.returncode == 0
    assert "non-flat: witness K^(1,1)(dx1)" in r.stdout


def test_jets_free_flat():
    r = run("jets", "--free", "3", "--l", "2", "--k", "2")
    assert r.returncode == 0
    assert "flat: stratification candidate" in r.stdout


def test_resource_cap_exits_3():
    assert run("jets", "--l", "1", "--k", "1", "--degree-cap", "2").returncode == 3


def test_mcm_pass():
    r = run("mcm", "--m", "2", "--n", "2", "--k", "1", "--l", "1")
    assert r.returncode == 0
    assert r.stdout.strip().endswith("PASS")
