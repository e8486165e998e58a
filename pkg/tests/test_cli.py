import json

import pytest

from jettower.cli import run


def test_verify_rel1_matches(capsys):
    assert run(["verify", "rel1"]) == 0
    assert "match: yes" in capsys.readouterr().out


def test_json_report_fields_and_determinism(tmp_path, capsys):
    out = tmp_path / "r.json"
    assert run(["morse", "--weights", "5,1", "--htwist", "24", "--gtwist", "24", "--format", "json", "--out", str(out)]) == 0
    first = capsys.readouterr().out
    assert out.read_text() == first
    data = json.loads(first)
    assert set(data) == {"command", "inputs", "expected", "computed", "match", "ordering_used", "convention", "elapsed_ms"}
    assert data["computed"]["threshold"] == 19
    assert data["ordering_used"] == "standard"
    assert data["elapsed_ms"] == 0
    run(["morse", "--weights", "5,1", "--htwist", "24", "--gtwist", "24", "--format", "json"])
    assert capsys.readouterr().out == first


def test_bound93_report(capsys):
    assert run(["bound93", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["computed"]["bound"] == 93
    assert data["computed"]["alpha(92, 28/29)"].startswith("-")


def test_mismatch_exits_one(capsys):
    assert run(["threshold", "--expansion", "exact"]) == 1
    assert "<-- differs" in capsys.readouterr().out


def test_unpublished_inputs_exit_zero(capsys):
    assert run(["morse", "--weights", "3,1", "--htwist", "10", "--gtwist", "2", "--d", "40"]) == 0
    assert "no published value" in capsys.readouterr().out


@pytest.mark.parametrize(
    "argv",
    [["bogus"], ["verify", "rel9"], ["morse", "--weights", "x"], ["dims", "--unknown"], ["tangency", "--d", "9"], []],
)
def test_usage_errors_exit_two(argv, capsys):
    assert run(argv) == 2
    assert "usage" in capsys.readouterr().err


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "rel2"],
        ["verify", "rel3"],
        ["verify", "chern-v1"],
        ["verify", "whitney", "--d", "7"],
        ["verify", "z2", "--d", "7"],
        ["alpha"],
        ["ranks"],
        ["vanishing"],
        ["pole-audit"],
        ["dims"],
        ["anchors"],
        ["nef"],
        ["tangency", "--d", "3"],
    ],
)
def test_subcommands_match(argv, capsys):
    assert run(argv) == 0, capsys.readouterr().out


def test_euler_char_reports_sign_difference(capsys):
    assert run(["euler-char", "--d", "6"]) == 1
    out = capsys.readouterr().out
    assert "13/2" in out and "-13/2" in out
