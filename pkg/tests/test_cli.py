import json
import re

import pytest

from wheelcensus.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_psi_both(capsys):
    assert run(capsys, "psi", "--n", "10", "--p", "5", "--method", "both") == (0, "16, 16\n", "")


def test_psi_methods(capsys):
    assert run(capsys, "psi", "--n", "10", "--p", "4")[:2] == (0, "16\n")
    assert run(capsys, "psi", "--n", "12", "--p", "6")[:2] == (0, "50\n")
    assert run(capsys, "psi", "--n", "9", "--p", "3", "--method", "enumerate")[:2] == (0, "7\n")
    assert run(capsys, "psi", "--n", "30", "--p", "2", "--method", "closed")[:2] == (0, "15\n")


def test_psi_without_closed_form(capsys):
    code, _, err = run(capsys, "psi", "--n", "12", "--p", "6", "--method", "closed")
    assert code == 2
    assert "--p 6" in err


def test_count(capsys):
    assert run(capsys, "count", "--kind", "bracelet", "--n", "1", "--k", "5")[:2] == (0, "5\n")
    assert run(capsys, "count", "--kind", "necklace", "--n", "10")[:2] == (0, "108\n")


def test_count_overflow(capsys):
    code, _, err = run(capsys, "count", "--kind", "necklace", "--n", "300", "--k", "2")
    assert code == 3
    assert "--n 300" in err


def test_table_csv(capsys):
    code, out, _ = run(capsys, "table", "--min-n", "4", "--max-n", "10", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "p,4,5,6,7,8,9,10"
    assert lines[5] == "4,1,1,3,4,8,10,16"
    assert lines[-1] == "psi(n),6,8,13,18,30,46,78"


def test_table_output_file(capsys, tmp_path):
    target = tmp_path / "t.json"
    code, out, _ = run(capsys, "table", "--max-n", "5", "--format", "json", "-o", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["ok"] is True


def test_enumerate_stdout_round_trip(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "10", "--p", "5")
    assert code == 0
    records = [json.loads(line) for line in out.splitlines()]
    assert len(records) == 16
    assert records[0] == {
        "n": 10,
        "p": 5,
        "word": "0000011111",
        "distance_tuple": [4, 3, 2, 1, 0, 0],
        "orbit_size": 10,
    }


def test_enumerate_dot_to_dir(capsys, tmp_path):
    code, out, _ = run(capsys, "enumerate", "--n", "8", "--p", "4", "--format", "dot", "--out", str(tmp_path))
    assert code == 0
    files = sorted(tmp_path.glob("*.dot"))
    assert len(files) == 8
    for f in files:
        assert f.read_text().startswith("graph W8_p4_")


def test_enumerate_budget(capsys):
    code, _, err = run(capsys, "enumerate", "--n", "25", "--p", "2")
    assert code == 3
    assert "--n 25" in err and "24" in err


def test_distance_lemma(capsys):
    code, out, _ = run(capsys, "distance-lemma", "--n", "10", "--p", "4")
    assert code == 0
    assert json.loads(out)["violations"] == []
    code, out, _ = run(capsys, "distance-lemma", "--n", "8", "--p", "4")
    assert code == 1
    assert len(json.loads(out)["violations"]) == 1


def test_verify_exit_code_reflects_failures(capsys):
    code, out, _ = run(capsys, "verify", "--max-n", "7")
    assert code == 0
    assert all(line.startswith("PASS") for line in out.splitlines())
    code, out, _ = run(capsys, "verify", "--max-n", "8")
    assert code == 1
    assert "FAIL key-lemma-p<=4" in out


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["frobnicate"],
        ["psi", "--n", "10"],
        ["psi", "--n", "10", "--p", "5", "--bogus"],
        ["table", "--max-n", "8", "--format", "xml"],
        ["psi", "--n", "3", "--p", "1"],
    ],
)
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_help(capsys):
    code, out, _ = run(capsys, "--help")
    assert code == 0
    assert re.search(r"distance-lemma", out)


def test_output_is_deterministic(capsys):
    first = run(capsys, "table", "--max-n", "12", "--format", "json")
    second = run(capsys, "table", "--max-n", "12", "--format", "json")
    assert first == second
