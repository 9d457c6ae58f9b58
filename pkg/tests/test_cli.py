import json
import subprocess
import sys

import pytest

from phirep import verifier
from phirep.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize(
    "argv, output",
    [
        (["convert", "5"], "1000.1001\n"),
        (["convert", "0"], "0\n"),
        (["convert", "25"], "1010000.000101\n"),
        (["convert", "--zeck", "1000"], "1000.1001\n"),
        (["zeck", "11"], "10100\n"),
        (["zeck", "--zeck", "10100"], "11\n"),
        (["dfa", "run", "end1", "101"], "accept\n"),
        (["dfa", "run", "end1", "()"], "reject\n"),
        (["dfa", "run", "fibluc", "[0,1][0,0][1,0]"], "accept\n"),
        (["dfa", "equiv", "end1", "end1"], "equivalent\n"),
    ],
)
def test_text_outputs(capsys, argv, output):
    code, out, err = run(capsys, *argv)
    assert (code, out, err) == (0, output, "")


def test_classify_nine(capsys):
    code, out, _ = run(capsys, "classify", "9")
    assert code == 0
    assert "not in S" in out
    assert "53-2φ (= 52-√5)" in out
    assert "[1]" in out
    code, out, _ = run(capsys, "classify", "9", "--format", "json")
    obj = json.loads(out)
    assert obj["antipalindromic"] is False
    assert obj["double_text"] == "53-2φ"
    assert obj["profile"]["odd_exponents"] == [1]
    assert obj["two_odd_pair"] is None


def test_sequence(capsys):
    code, out, _ = run(capsys, "sequence", "shevelev", "--limit", "47")
    assert code == 0
    assert list(map(int, out.split())) == [1, 3, 4, 7, 8, 10, 11, 18, 19, 21, 22, 25, 26, 28, 29, 47]
    code, out, _ = run(capsys, "sequence", "one_odd", "--limit", "30", "--format", "json")
    assert json.loads(out) == [2, 9, 20, 27]
    assert run(capsys, "sequence", "one_odd", "--limit", "30", "--json")[1] == out


@pytest.mark.parametrize(
    "argv, code",
    [
        (["convert", "5"], 0),
        (["convert", "-5"], 2),
        (["convert", "x"], 2),
        (["convert", "--zeck", "110"], 2),
        (["classify", "0"], 2),
        (["sequence", "primes", "--limit", "5"], 2),
        (["sequence", "shevelev", "--limit", "0"], 2),
        (["verify", "one_even", "--max", "50", "--jobs", "1"], 0),
        (["verify", "bogus"], 2),
        (["dfa", "builtin", "nope"], 2),
        (["dfa", "compile", "(0|1"], 2),
        (["dfa", "project", "end1", "--track", "0"], 2),
        (["dfa", "product", "and", "end1", "shiftl"], 2),
        (["dfa", "equiv", "end1", "end1", "--format", "dot"], 2),
        (["dfa", "run", "end1", "101", "--format", "dot"], 2),
        (["dfa", "minimize", "@/nonexistent/file.json"], 2),
        ([], 2),
    ],
)
def test_exit_codes(capsys, argv, code):
    try:
        got = main(argv)
    except SystemExit as e:  # argparse usage errors
        got = e.code
    assert got == code
    _, err = capsys.readouterr()
    if code == 2:
        assert err


def test_verify_failure_exits_one(capsys, monkeypatch):
    real = verifier.lucas_subset_decompose
    monkeypatch.setattr(
        verifier, "lucas_subset_decompose",
        lambda m, parity, min_index=0: None if m == 4 else real(m, parity, min_index),
    )
    code, out, _ = run(capsys, "verify", "one_even", "--max", "50", "--jobs", "1")
    assert code == 1
    assert out.startswith("FAIL one_even") and "counterexample=5" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["convert", "25", "--format", "json"],
        ["zeck", "11", "--format", "json"],
        ["classify", "5", "--format", "json"],
        ["sequence", "one_even", "--limit", "77", "--format", "json"],
        ["verify", "kimberling", "two_odd", "--max", "200", "--jobs", "1", "--format", "json"],
        ["dfa", "--format", "json", "builtin", "shiftr"],
        ["dfa", "product", "xor", "noodd1", "noeven1", "--format", "json"],
        ["dfa", "--format", "json", "equiv", "end1", "(0|1)*0"],
    ],
)
def test_json_round_trip(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    again = json.dumps(json.loads(out), indent=2, sort_keys=True, ensure_ascii=False) + "\n"
    assert again == out


def test_convert_json_fields(capsys):
    _, out, _ = run(capsys, "convert", "5", "--format", "json")
    assert json.loads(out) == {"n": "5", "exponents": [3, -1, -4], "string": "1000.1001"}


def test_verify_json_is_job_independent(capsys):
    args = ["verify", "all", "--max", "500", "--word-length", "6", "--depth", "14",
            "--margin", "2", "--lucas-max", "300", "--format", "json"]
    _, one, _ = run(capsys, *args, "--jobs", "1")
    _, two, _ = run(capsys, *args, "--jobs", "2")
    assert one == two
    assert all(r["passed"] for r in json.loads(one))


def test_dfa_suboperations(capsys, tmp_path):
    code, out, _ = run(capsys, "dfa", "compile", "(0|1)*1", "--format", "json")
    path = tmp_path / "end1.json"
    path.write_text(out)
    code, out, _ = run(capsys, "dfa", "--format", "json", "complement", f"@{path}")
    comp = json.loads(out)
    assert code == 0 and comp["accepting"] == [0]
    code, out, _ = run(capsys, "dfa", "equiv", f"@{path}", "end1")
    assert out == "equivalent\n"
    code, out, _ = run(capsys, "dfa", "minimize", "0*0", "--format", "json")
    assert json.loads(out)["states"] == 3
    code, out, _ = run(capsys, "dfa", "project", "shiftl", "--track", "0")
    assert code == 0 and out.startswith("states: 2")
    code, out, _ = run(capsys, "dfa", "compile", "1", "--arity", "1", "--format", "dot")
    assert out.startswith("digraph") and "doublecircle" in out
    code, out, _ = run(capsys, "dfa", "synthesize", "one_even", "--depth", "14", "--margin", "2")
    assert code == 0 and out.startswith("states: 16")


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "phirep", "convert", "5"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0 and proc.stdout == "1000.1001\n"
    proc = subprocess.run(
        [sys.executable, "-m", "phirep", "convert", "nope"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 2 and proc.stdout == "" and "error" in proc.stderr
