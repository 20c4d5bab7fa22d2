"""Command-line interface: subcommands, JSON payloads, exit codes."""
from __future__ import annotations

import json
import shutil
import subprocess

import pytest

from effdom.cli import run

P4 = "p ed 4 3\ne 1 2\ne 2 3\ne 3 4\n"
C4 = "p ed 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n"
P5 = "p ed 5 4\ne 1 2\ne 2 3\ne 3 4\ne 4 5\n"
ONE_CLAUSE = "p cnf 3 1\n1 2 3 0\n"


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, text in (("p4.ed", P4), ("c4.ed", C4), ("p5.ed", P5),
                       ("one_clause.cnf", ONE_CLAUSE)):
        p = tmp_path / name
        p.write_text(text)
        paths[name] = str(p)
    n = 26  # one past the brute-force cutoff
    lines = [f"p ed {n} {n - 1}"]
    lines += [f"e {i} {i + 1}" for i in range(1, n)]
    p = tmp_path / "p26.ed"
    p.write_text("\n".join(lines) + "\n")
    paths["p26.ed"] = str(p)
    paths["dir"] = tmp_path
    return paths


def _json_line(capsys):
    out = capsys.readouterr().out.strip().splitlines()
    return json.loads(out[-1])


# ===== SOLVE =====


def test_solve_auto_json(files, capsys):
    code = run(["solve", "--class", "auto", "--input", files["p4.ed"],
                "--json"])
    assert code == 0
    obj = _json_line(capsys)
    assert obj == {"status": "solved", "vertices": [1, 4], "weight": 2,
                   "class": "auto"}


def test_solve_no_ed_exit_code(files, capsys):
    code = run(["solve", "--input", files["c4.ed"], "--json"])
    assert code == 1
    obj = _json_line(capsys)
    assert obj["status"] == "no_ed" and "vertices" not in obj
    assert obj["class"] == "auto"


def test_solve_not_in_class_witness(files, capsys):
    code = run(["solve", "--class", "2p2", "--input", files["p5.ed"],
                "--json"])
    assert code == 2
    obj = _json_line(capsys)
    assert obj["status"] == "not_in_class"
    assert obj["witness"]["pattern"] == "2P2"
    assert len(obj["witness"]["vertices"]) == 4
    assert all(1 <= v <= 5 for v in obj["witness"]["vertices"])


def test_solve_plain_text(files, capsys):
    code = run(["solve", "--input", files["p4.ed"]])
    assert code == 0
    out = capsys.readouterr().out
    assert "status: solved" in out
    assert "vertices: 1 4" in out and "weight: 2" in out


def test_solve_bounded_class(files, capsys):
    code = run(["solve", "--class", "2bwed", "--k", "2",
                "--input", files["p4.ed"], "--json"])
    assert code == 0
    assert _json_line(capsys)["vertices"] == [1, 4]


# ===== ORACLE =====


def test_oracle_brute(files, capsys):
    code = run(["oracle", "--input", files["p4.ed"], "--method", "brute",
                "--json"])
    assert code == 0
    obj = _json_line(capsys)
    assert obj["vertices"] == [1, 4] and obj["class"] == "brute"


def test_oracle_auto_dispatches_on_size(files, capsys):
    # 4 vertices: brute force; 26 vertices: exact-cover search
    assert run(["oracle", "--input", files["p4.ed"], "--json"]) == 0
    assert _json_line(capsys)["class"] == "brute"
    assert run(["oracle", "--input", files["p26.ed"], "--json"]) == 0
    obj = _json_line(capsys)
    assert obj["class"] == "exact-cover"
    assert obj["vertices"] == list(range(1, 26, 3)) and obj["weight"] == 9


def test_oracle_no_ed(files, capsys):
    assert run(["oracle", "--input", files["c4.ed"], "--json"]) == 1
    assert _json_line(capsys)["status"] == "no_ed"


# ===== RECOGNIZE =====


def test_recognize_p5(files, capsys):
    code = run(["recognize", "--input", files["p5.ed"], "--json"])
    assert code == 0
    classes = _json_line(capsys)["classes"]
    assert set(classes) == {"2p2", "p5", "p6s122", "2p3s122", "p2p4"}
    assert classes["p5"] == {
        "member": False,
        "witness": {"pattern": "P5", "vertices": [1, 2, 3, 4, 5]}}
    assert classes["2p2"]["member"] is False
    for tag in ("p6s122", "2p3s122", "p2p4"):
        assert classes[tag] == {"member": True}


# ===== GENERATE AND CHECK =====


def test_generate_then_check_round_trip(files, capsys):
    out_path = str(files["dir"] / "g.ed")
    code = run(["generate", "--cnf", files["one_clause.cnf"],
                "--girth", "3", "--out", out_path])
    assert code == 0
    msg = capsys.readouterr().out
    assert "wrote 73 vertices" in msg
    roles = (files["dir"] / "g.ed.roles").read_text().splitlines()
    assert len(roles) == 73
    assert roles[0].split()[0] == "1"

    # the generated instance is solvable; its solution passes check
    assert run(["oracle", "--input", out_path, "--json"]) == 0
    sol = _json_line(capsys)
    ed_path = files["dir"] / "sol.txt"
    ed_path.write_text(" ".join(map(str, sol["vertices"])))
    assert run(["check", "--input", out_path, "--ed", str(ed_path),
                "--json"]) == 0
    obj = _json_line(capsys)
    assert obj == {"valid": True, "weight": sol["weight"]}


def test_check_valid_and_invalid(files, capsys):
    good = files["dir"] / "d.txt"
    good.write_text("1 4\n")
    assert run(["check", "--input", files["p4.ed"], "--ed", str(good),
                "--json"]) == 0
    assert _json_line(capsys) == {"valid": True, "weight": 2}
    bad = files["dir"] / "bad.txt"
    bad.write_text("1 2\n")
    assert run(["check", "--input", files["p4.ed"], "--ed", str(bad),
                "--json"]) == 1
    assert _json_line(capsys) == {"valid": False}


def test_check_out_of_range_id(files, capsys):
    oob = files["dir"] / "oob.txt"
    oob.write_text("9\n")
    code = run(["check", "--input", files["p4.ed"], "--ed", str(oob)])
    assert code == 3
    assert "out of range" in capsys.readouterr().err


# ===== ERROR HANDLING =====


def test_malformed_graph_is_usage_error(files, capsys):
    bad = files["dir"] / "bad.ed"
    bad.write_text("p ed 2 1\ne 1 3\n")
    code = run(["solve", "--input", str(bad)])
    assert code == 3
    assert "error" in capsys.readouterr().err


def test_missing_file_is_usage_error(files, capsys):
    assert run(["solve", "--input", str(files["dir"] / "nope.ed")]) == 3
    assert "error" in capsys.readouterr().err


def test_unknown_flag_is_usage_error(files, capsys):
    assert run(["solve", "--input", files["p4.ed"], "--bogus"]) == 3
    capsys.readouterr()


def test_unknown_class_rejected(files, capsys):
    assert run(["solve", "--class", "chordal",
                "--input", files["p4.ed"]]) == 3
    capsys.readouterr()


def test_version_flag(capsys):
    assert run(["--version"]) == 0
    capsys.readouterr()


# ===== CONSOLE SCRIPT =====


def test_console_script(files):
    exe = shutil.which("effdom")
    assert exe is not None, "console script not installed"
    proc = subprocess.run([exe, "solve", "--input", files["p4.ed"],
                           "--json"], capture_output=True, text=True)
    assert proc.returncode == 0
    obj = json.loads(proc.stdout.strip().splitlines()[-1])
    assert obj["vertices"] == [1, 4]
