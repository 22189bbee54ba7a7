"""Command-line driver: payloads, exit codes, and deterministic output."""

import json

import pytest

from detring.cli import main, run


def capture(capsys, argv):
    code = run(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_mu_payload(capsys):
    code, out, _ = capture(capsys, ["mu", "--m", "3", "--n", "3", "--r", "2", "--t", "2", "--ideal", "p"])
    assert code == 0
    assert json.loads(out) == {"mu": 6}


def test_classify_payload(capsys):
    code, out, _ = capture(
        capsys, ["classify", "--m", "3", "--n", "3", "--r", "2", "--t", "1", "--ideal", "p"]
    )
    assert code == 0
    assert json.loads(out) == {"cm": True, "ulrich": True, "mu": 3, "e": 3}


def test_straighten_payload(capsys):
    code, out, _ = capture(
        capsys, ["straighten", "--m", "2", "--n", "2", "--r", "2", "--poly", "x[1,2]*x[2,1]"]
    )
    assert code == 0
    assert json.loads(out) == {
        "terms": [
            {"coeff": "1", "bitableau": "[1|1][2|2]"},
            {"coeff": "-1", "bitableau": "[1 2|1 2]"},
        ]
    }


def test_member_payload(capsys):
    det = "x[1,1]*x[2,2]-x[1,2]*x[2,1]"
    code, out, _ = capture(capsys, ["member", "--m", "2", "--n", "2", "--r", "1", "--poly", det])
    assert code == 0 and json.loads(out) == {"in_ideal": True}
    code, out, _ = capture(capsys, ["member", "--m", "2", "--n", "2", "--r", "2", "--poly", det])
    assert code == 0 and json.loads(out) == {"in_ideal": False}


def test_basis_payload(capsys):
    code, out, _ = capture(capsys, ["basis", "--m", "2", "--n", "2", "--r", "1", "--deg", "2"])
    assert code == 0
    payload = json.loads(out)
    assert payload["count"] == 9
    assert len(payload["bitableaux"]) == 9
    assert "[1|2][2|1]" not in payload["bitableaux"]


def test_hilbert_payload_all_methods(capsys):
    for method in ("bitableaux", "lattice", "rank"):
        code, out, _ = capture(
            capsys,
            ["hilbert", "--m", "2", "--n", "2", "--r", "1", "--deg", "2", "--method", method],
        )
        assert code == 0 and json.loads(out) == {"dim": 9}


def test_mult_payload(capsys):
    code, out, _ = capture(capsys, ["mult", "--m", "3", "--n", "3", "--r", "2"])
    assert code == 0 and json.loads(out) == {"e": 3}


def test_mcm_classes_payload(capsys):
    code, out, _ = capture(capsys, ["mcm-classes", "--m", "3", "--n", "3", "--r", "2"])
    assert code == 0
    assert json.loads(out) == {
        "classes": [{"ideal": "p", "t": 0}, {"ideal": "p", "t": 1}, {"ideal": "q", "t": 1}],
        "count": 3,
    }


def test_certify_payload(capsys):
    code, out, _ = capture(
        capsys, ["certify", "--m", "3", "--n", "3", "--r", "2", "--t", "1", "--ideal", "p"]
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["consistent"] is True
    assert payload["certificate"]["kind"] == "conic"
    assert payload["certificate"]["report"]["equal"] is True


def test_cone_check_payload(capsys):
    code, out, _ = capture(capsys, ["cone-check", "--m", "2", "--n", "2", "--r", "1", "--deg-bound", "4"])
    assert code == 0
    payload = json.loads(out)
    assert payload["equal"] is True and payload["power_test_ok"] is True
    rows = {row["degree"]: (row["semigroup"], row["lattice"]) for row in payload["degree_counts"]}
    assert rows[4] == (9, 9)


def test_tilde_check_payload(capsys):
    code, out, _ = capture(capsys, ["tilde-check", "--m", "2", "--n", "2", "--r", "1", "--deg-bound", "3"])
    assert code == 0
    payload = json.loads(out)
    assert payload["ok"] is True
    cells = {
        (row["y_degree"], row["z_degree"]): (row["lattice"], row["basis"])
        for row in payload["bidegree_counts"]
    }
    assert cells[(1, 0)] == (2, 2)


def test_ladder_check_payload(capsys):
    code, out, _ = capture(
        capsys,
        ["ladder-check", "--m", "2", "--n", "2", "--r", "2", "--delta", "[2|2]", "--deg-bound", "2"],
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["ok"] is True and payload["prime_ok"] is True
    assert set(payload["variable_set"]) == {"y[1,1]", "y[2,2]", "y[1,2]", "z[1,1]"}


def test_table_format(capsys):
    code, out, _ = capture(
        capsys, ["hilbert", "--m", "2", "--n", "2", "--r", "1", "--deg", "2", "--format", "table"]
    )
    assert code == 0
    assert out == "dim = 9\n"


def test_validation_failures_exit_one(capsys):
    bad = [
        ["mu", "--m", "3", "--n", "3", "--r", "3", "--t", "1", "--ideal", "p"],
        ["mu", "--m", "3", "--n", "3", "--r", "2", "--t", "1", "--ideal", "z"],
        ["straighten", "--m", "2", "--n", "2", "--r", "1", "--poly", "x[1,1] + ?"],
        ["hilbert", "--m", "2", "--n", "2", "--r", "1", "--deg", "2", "--method", "guess"],
        ["basis", "--m", "0", "--n", "2", "--r", "1", "--deg", "1"],
        ["ladder-check", "--m", "2", "--n", "3", "--r", "2", "--delta", "oops"],
    ]
    for argv in bad:
        code, out, err = capture(capsys, argv)
        assert code == 1, argv
        assert err.startswith("error:")


def test_unknown_flags_and_commands_exit_one(capsys):
    assert run(["mu", "--m", "3", "--n", "3", "--r", "2", "--t", "1", "--ideal", "p", "--frob", "1"]) == 1
    capsys.readouterr()
    assert run(["frobnicate"]) == 1
    capsys.readouterr()
    assert run([]) == 1
    capsys.readouterr()


def test_help_exits_zero(capsys):
    assert main(["--help"]) == 0
    out = capsys.readouterr().out
    assert "straighten" in out
    assert main(["mu", "--help"]) == 0
    capsys.readouterr()


def test_output_is_byte_identical_across_runs(capsys):
    commands = [
        ["basis", "--m", "2", "--n", "2", "--r", "1", "--deg", "3"],
        ["straighten", "--m", "3", "--n", "3", "--r", "2", "--poly", "x[1,3]*x[2,1]*x[3,2]"],
        ["certify", "--m", "3", "--n", "3", "--r", "2", "--t", "1", "--ideal", "p"],
        ["cone-check", "--m", "2", "--n", "3", "--r", "2", "--deg-bound", "4"],
        ["mcm-classes", "--m", "4", "--n", "4", "--r", "2"],
    ]
    for argv in commands:
        first = capture(capsys, argv)
        second = capture(capsys, argv)
        assert first == second
        assert first[0] == 0
