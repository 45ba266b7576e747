import json
import re
import subprocess
import sys

import pytest
from zoo import petersen, six_cycle_with_chord

from qdrg import cli, graphs, theorem
from qdrg.constructions import REGISTRY, builders
from qdrg.errors import CodeVerificationFailed
from qdrg.graphs import write_graph
from qdrg.theorem import ConditionVerdict


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def grid_file(tmp_path, capsys):
    path = tmp_path / "grid3x3.graph"
    assert cli.main(["construct", "grid3x3", "--out", str(path)]) == 0
    capsys.readouterr()
    return path


# --- analyze -----------------------------------------------------------------

def test_analyze_c2_4_rejected(capsys):
    code, out, _ = run(capsys, "analyze", "--b", "36,34,28", "--c", "1,4,18")
    assert code == 1
    assert "112/5 (22.4)" in out and "feasibility: FAIL" in out


def test_analyze_grid_verdicts(capsys):
    code, out, _ = run(capsys, "analyze", "--b", "4,2", "--c", "1,2", "--json")
    assert code == 0
    report = json.loads(out)
    assert set(report) == {"input", "spectrum", "krein", "classical", "near_polygon", "theorem", "feasibility"}
    assert report["theorem"]["theta"] == "-2"
    assert {k: v["holds"] for k, v in report["theorem"]["verdicts"].items()} == {
        "i": None, "ii": True, "iii": True, "iv": None, "v": True, "vi": True}


def test_plain_and_json_carry_the_same_rationals(capsys):
    argv = ["analyze", "--b", "36,34,28", "--c", "1,4,18"]
    _, plain, _ = run(capsys, *argv)
    _, js, _ = run(capsys, *argv, "--json")
    rationals = set(re.findall(r'"(-?\d+/\d+)"', js))
    assert rationals and all(r in plain for r in rationals)


@pytest.mark.parametrize("argv,needle", [
    (["analyze", "--b", "3,3", "--c", "1,2"], "NegativeAi"),
    (["analyze", "--b", "4,x", "--c", "1,2"], "integers"),
    (["analyze", "--b", "4,2", "--c", "1,2", "--theta", "3"], "not an eigenvalue"),
    (["analyze", "--b", "4,2", "--c", "1,2", "--theta", "abc"], "cannot parse"),
    (["analyze", "--b", "4,2", "--c", "2,2"], "C1NotOne"),
])
def test_analyze_input_errors(capsys, argv, needle):
    code, _, err = run(capsys, *argv)
    assert code == 2 and needle in err


def test_analyze_irrational_spectrum(capsys):
    code, out, _ = run(capsys, "analyze", "--b", "2,1", "--c", "1,1")
    assert code == 0 and "theorem: skipped" in out


def test_analyze_mixed_verdict_exits_3(capsys, monkeypatch):
    monkeypatch.setattr(theorem, "condition_vi", lambda arr, theta, an=None: ConditionVerdict("vi", False))
    code, _, err = run(capsys, "analyze", "--b", "4,2", "--c", "1,2")
    assert code == 3 and "mixed verdicts" in err


# --- classify ----------------------------------------------------------------

def test_classify_3(capsys):
    code, out, _ = run(capsys, "classify", "--diameter", "3")
    assert code == 0
    arrays = re.findall(r"\{[\d,;]+\}", out)
    assert arrays == ["{18,16,16;1,1,9}", "{24,22,20;1,2,12}", "{30,28,24;1,3,15}",
                      "{36,34,28;1,4,18}", "{42,40,32;1,5,21}"]
    assert "112/5 (22.4)" in out


def test_classify_2_orders(capsys):
    _, out, _ = run(capsys, "classify", "--diameter", "2")
    assert all(f"order (2,{t})" in out for t in (1, 2, 4))


def test_classify_5_json(capsys):
    code, out, _ = run(capsys, "classify", "--diameter", "5", "--json")
    rows = json.loads(out)["classification"]
    assert code == 0 and rows[4]["name"] == "dual polar graph A9(2)"


@pytest.mark.parametrize("D", ["1", "9", "x"])
def test_classify_range(capsys, D):
    assert run(capsys, "classify", "--diameter", D)[0] == 2


# --- construct ---------------------------------------------------------------

def test_construct_grid(tmp_path, capsys):
    path = tmp_path / "g.graph"
    code, out, _ = run(capsys, "construct", "grid3x3", "--out", str(path))
    assert code == 0 and "n = 9, edges = 18, verified array {4,2;1,2}" in out
    lines = path.read_text().splitlines()
    assert lines[0] == "9" and len(lines) == 19


def test_construct_octad(tmp_path, capsys):
    path = tmp_path / "octad.graph"
    code, out, _ = run(capsys, "construct", "octad", "--out", str(path), "--json")
    summary = json.loads(out)
    assert code == 0 and summary["n"] == 759 and summary["array"] == "{30,28,24;1,3,15}"
    assert path.read_text().splitlines()[0] == "759"


def test_construct_gh28_out_of_scope(capsys):
    code, _, err = run(capsys, "construct", "gh2-8")
    assert code == 2 and "construction out of scope; parameter-verified only" in err


def test_construct_unknown(capsys):
    assert run(capsys, "construct", "heawood")[0] == 2


def test_construct_code_failure_exits_1(capsys, monkeypatch, tmp_path):
    def broken():
        raise CodeVerificationFailed("bad generator")
    monkeypatch.setitem(REGISTRY, "octad", builders.Construction("octad", broken, "", ""))
    assert run(capsys, "construct", "octad", "--out", str(tmp_path / "x"))[0] == 1


# --- verify ------------------------------------------------------------------

def test_verify_grid_min(capsys, grid_file):
    code, out, _ = run(capsys, "verify", str(grid_file), "--eigenvalue", "min", "--json")
    report = json.loads(out)
    assert code == 0
    assert report["theorem"]["theta"] == "-2"
    assert all(v["holds"] for v in report["theorem"]["verdicts"].values())
    assert report["theorem"]["cliques"] == {"triangles": 6, "zero_sum": 6, "dependent": 6, "verdict": "all-dependent"}


def test_verify_grid_non_minimal(capsys, grid_file):
    code, out, _ = run(capsys, "verify", str(grid_file), "--eigenvalue", "1")
    assert code == 1 and "(vi) fails" in out


def test_verify_petersen(capsys, tmp_path):
    path = tmp_path / "petersen.graph"
    write_graph(petersen(), path)
    code, out, _ = run(capsys, "verify", str(path), "--eigenvalue", "-2", "--json")
    verdicts = json.loads(out)["theorem"]["verdicts"]
    assert code == 1 and not any(v["holds"] for v in verdicts.values())


@pytest.mark.parametrize("theta", ["3", "1/0", "abc"])
def test_verify_bad_theta(capsys, grid_file, theta):
    assert run(capsys, "verify", str(grid_file), "--eigenvalue", theta)[0] == 2


def test_verify_not_distance_regular(capsys, tmp_path):
    path = tmp_path / "chord.graph"
    write_graph(six_cycle_with_chord(), path)
    code, _, err = run(capsys, "verify", str(path))
    assert code == 2 and "NotDistanceRegular" in err


@pytest.mark.parametrize("text", ["3\n0 1\n", "2\n0 0\n", "nonsense\n"])
def test_verify_bad_file(capsys, tmp_path, text):
    path = tmp_path / "bad.graph"
    path.write_text(text)
    assert run(capsys, "verify", str(path))[0] == 2


def test_verify_missing_file(capsys, tmp_path):
    assert run(capsys, "verify", str(tmp_path / "absent.graph"))[0] == 2


def test_verify_mixed_verdict_exits_3(capsys, grid_file, monkeypatch):
    monkeypatch.setattr(graphs, "condition_vi", lambda arr, theta, an=None: ConditionVerdict("vi", False))
    code, _, err = run(capsys, "verify", str(grid_file))
    assert code == 3 and "mixed verdicts" in err


# --- argument handling -------------------------------------------------------

def test_usage_errors_exit_2(capsys):
    assert run(capsys)[0] == 2
    assert run(capsys, "frobnicate")[0] == 2


def test_help_exits_0(capsys):
    assert run(capsys, "--help")[0] == 0


def test_console_module_entry():
    proc = subprocess.run([sys.executable, "-m", "qdrg.cli", "analyze", "--b", "3,3", "--c", "1,2"],
                          capture_output=True, text=True)
    assert proc.returncode == 2 and "NegativeAi" in proc.stderr
