import json
import os
import subprocess

import pytest

CLI = os.environ.get("ROBP_CLI")
pytestmark = pytest.mark.skipif(not CLI, reason="ROBP_CLI not set")


def run(*args):
    proc = subprocess.run([CLI, *map(str, args)], capture_output=True, text=True)
    return proc.returncode, proc.stdout


def write(path, payload):
    path.write_text(json.dumps(payload) if not isinstance(payload, str) else payload)
    return path


def test_gen_and_bias_check(tmp_path):
    out = tmp_path / "h.txt"
    code, stdout = run("gen", "--n", 10, "--epsilon", "0.9", "--m", 6, "--out", out)
    assert code == 0
    report = json.loads(stdout)
    assert report["params"]["m"] == 6
    assert len(out.read_text().split()) == report["hitting_set_size"]
    code, stdout = run("bias-check", "--set", out, "--k", 3)
    assert code == 0
    assert json.loads(stdout)["deviation_within_bias"]


def test_gen_literal_is_infeasible(tmp_path):
    code, stdout = run("gen", "--n", 16, "--epsilon", "0.9", "--mode", "literal", "--out", tmp_path / "x")
    assert code == 2
    assert json.loads(stdout)["error"] == "FeasibilityError"


def test_usage_errors(tmp_path):
    assert run("gen", "--n", 10, "--epsilon", "0.9", "--out", tmp_path / "x")[0] == 2
    assert run("gen", "--n", 10, "--epsilon", "0.9", "--m", 4, "--mode", "literal", "--out", tmp_path / "x")[0] == 2
    assert run("frobnicate")[0] == 2
    assert run("accept")[0] == 2
    assert run("accept", "--bp", tmp_path / "missing.json")[0] == 2


def test_compile_accept_normalize(tmp_path):
    formula = write(tmp_path / "f.json", {"n": 6, "Q": [[1, 2], [3]], "R": [[4, 5, 6]], "c": "010101"})
    bp = tmp_path / "bp.json"
    code, stdout = run("compile", "--formula", formula, "--out", bp)
    assert code == 0
    assert json.loads(stdout)["program"]["acceptance"]["fraction"] == "35/64"
    code, stdout = run("accept", "--bp", bp)
    assert code == 0
    assert json.loads(stdout)["program"]["acceptance"]["fraction"] == "35/64"
    norm = tmp_path / "norm.json"
    code, stdout = run("normalize", "--bp", bp, "--pad-width", "--out", norm)
    assert code == 0
    report = json.loads(stdout)
    assert report["level_sorted"]
    assert report["output"]["acceptance"] == report["input"]["acceptance"]


def test_invalid_program_is_rejected(tmp_path):
    bad = write(tmp_path / "bad.json", {"n": 1, "levels": [[{"var": 1, "e0": 0, "e1": 0}], [{"var": 1, "e0": 0, "e1": 0}], [{"sink": 1}]]})
    code, stdout = run("accept", "--bp", bad)
    assert code == 2
    assert "ReadOnceViolation" in json.loads(stdout)["message"]


def test_rich_check_exit_codes(tmp_path):
    cube = write(tmp_path / "cube.txt", "".join(format(x, "06b") + "\n" for x in range(64)))
    single = write(tmp_path / "single.txt", "010011\n")
    assert run("rich-check", "--set", cube, "--epsilon", "0.6")[0] == 0
    assert run("rich-check", "--set", cube, "--epsilon", "0.6", "--weak", "--max-r", 2)[0] == 0
    code, stdout = run("rich-check", "--set", single, "--epsilon", "0.6")
    assert code == 1
    assert json.loads(stdout)["counterexample"] is not None


def test_hit_check_exit_codes(tmp_path):
    formula = write(tmp_path / "f.json", {"n": 4, "Q": [], "R": [[1]], "c": "0000"})
    bp = tmp_path / "bp.json"
    run("compile", "--formula", formula, "--out", bp)
    hits = write(tmp_path / "hits.txt", "0000\n1000\n")
    misses = write(tmp_path / "misses.txt", "0000\n0110\n")
    assert run("hit-check", "--set", hits, "--bp", bp, "--epsilon", "1/2")[0] == 0
    code, stdout = run("hit-check", "--set", misses, "--bp", bp, "--epsilon", "1/2")
    assert code == 1
    assert json.loads(stdout)["hit"] is False


def test_campaign(tmp_path):
    config = write(tmp_path / "c.json", {"n": 8, "epsilon": "9/10", "count": 10, "seed": 2, "source": "both", "set_params": {"m": 4}})
    code, stdout = run("campaign", "--config", config)
    report = json.loads(stdout)
    assert code == (0 if report["counts"]["missed"] == 0 else 1)
    assert report["counts"]["generated"] == 10
