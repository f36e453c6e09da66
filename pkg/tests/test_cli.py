import json

import pytest

from modring.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_dim(capsys):
    code, out, _ = run(capsys, "dim", "--level", "7", "--weight", "4")
    assert code == 0 and out.strip() == "3"


def test_expand(capsys):
    code, out, _ = run(capsys, "expand", "--form", "E4", "--prec", "3")
    assert code == 0 and out.strip() == "1 + 240q + 2160q^2 + O(q^3)"


def test_expand_rational_coefficients(capsys):
    code, out, _ = run(capsys, "expand", "--form", "E_rho3", "--prec", "4", "--json")
    data = json.loads(out)
    assert data["items"][0]["detail"]["coeffs"] == ["0/1", "1/1", "-3/1", "0/1"]
    assert data["pass"] is True


def test_expand_default_precision(capsys):
    code, out, _ = run(capsys, "expand", "--form", "C3")
    assert out.strip().endswith("+ O(q^50)")


def test_expand_level_check(capsys):
    assert run(capsys, "expand", "--form", "beta9", "--level", "18", "--prec", "4")[0] == 0
    code, _, err = run(capsys, "expand", "--form", "beta9", "--level", "3")
    assert code == 2 and "does not divide" in err


def test_unknown_form(capsys):
    code, _, err = run(capsys, "expand", "--form", "E5")
    assert code == 2 and "E5" in err


def test_usage_errors(capsys):
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "dim", "--level", "7")[0] == 2
    assert run(capsys, "dim", "--level", "7", "--weight", "4", "--bogus")[0] == 2
    assert run(capsys, "dim", "--level", "11", "--weight", "4")[0] == 2
    assert run(capsys, "verify", "everything")[0] == 2
    assert run(capsys, "verify", "bases", "--max-weight", "5")[0] == 2
    assert run(capsys, "--threads", "0", "dim", "--level", "7", "--weight", "4")[0] == 2


def test_basis(capsys):
    code, out, _ = run(capsys, "basis", "--level", "3", "--weight", "6", "--prec", "6")
    lines = out.strip().splitlines()
    assert code == 0 and len(lines) == 4
    assert lines[0].startswith("C3^3 = 1 + 36q")
    assert lines[-1].startswith("echelon: dim=3")


def test_basis_precision_guard(capsys):
    assert run(capsys, "basis", "--level", "18", "--weight", "4", "--prec", "5")[0] == 2


def test_hilbert(capsys):
    code, out, _ = run(capsys, "hilbert", "--level", "12", "--order", "6")
    assert code == 0
    assert "rational: 1 0 5 0 9 0 13" in out
    assert "diff:     0 0 0 0 0 0 0" in out


def test_verify_relations_level_12(capsys):
    code, out, _ = run(capsys, "verify", "relations", "--level", "12")
    assert code == 0
    for name in ("O_6", "O_12b", "O_12c", "O_12d", "O_12e", "O_12f"):
        assert f" {name} " in out
    assert "6/6 checks passed" in out


def test_verify_json_schema(capsys):
    code, out, _ = run(capsys, "verify", "relations", "--level", "3", "--json")
    data = json.loads(out)
    assert set(data) == {"command", "parameters", "items", "pass"}
    assert data["command"] == "verify" and data["pass"] is True
    item = data["items"][0]
    assert {"name", "level", "weight", "pass", "detail", "cut", "checked_order"} <= set(item)
    assert (item["name"], item["cut"], item["checked_order"]) == ("O_3", 3, 13)


def test_json_flag_before_subcommand(capsys):
    code, out, _ = run(capsys, "--json", "dim", "--level", "18", "--weight", "24")
    assert json.loads(out)["items"][0]["detail"] == 73


def test_json_is_deterministic(capsys):
    args = ("verify", "identities", "--level", "12", "--json")
    _, a, _ = run(capsys, *args)
    _, b, _ = run(capsys, *args, "--threads", "4")
    da, db = json.loads(a), json.loads(b)
    assert da["items"] == db["items"]


def test_verify_presentation(capsys):
    code, out, _ = run(capsys, "verify", "presentation", "--level", "6", "--max-weight", "8")
    assert code == 0 and "5/5 checks passed" in out


def test_verify_integrality_and_hilbert(capsys):
    assert run(capsys, "verify", "integrality", "--level", "9", "--prec", "80")[0] == 0
    assert run(capsys, "verify", "hilbert", "--level", "25")[0] == 0
    assert run(capsys, "verify", "bases", "--level", "25", "--max-weight", "8")[0] == 0


def test_failure_exit_code(capsys, monkeypatch):
    from modring import suites
    from modring.report import Check
    monkeypatch.setitem(suites.SUITES, "hilbert",
                        lambda **kw: [Check("ok", 1, 2, True), Check("broken", 5, 4, False, "x")])
    code, out, _ = run(capsys, "verify", "hilbert")
    assert code == 1
    assert "first failure: FAIL  N=5 k=4" in out
