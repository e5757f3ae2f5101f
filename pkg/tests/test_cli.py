import json

import pytest

from ssb.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_invariants_json_schema(capsys):
    code, out, _ = run(capsys, "invariants", "gamma(2,3,1)", "--char", "0",
                       "--json")
    assert code == 0
    payload = json.loads(out)
    for key in ("spec", "char", "dimension", "cartan", "cartan_invariants",
                "cartan_det", "centre_dim", "hh"):
        assert key in payload
    assert payload["cartan_invariants"] == [1, 1, 2, 2]
    assert payload["cartan_det"] == 4
    assert "kulshammer" not in payload  # absent means not computed (char 0)


def test_invariants_positive_char_has_kulshammer(capsys):
    code, out, _ = run(capsys, "invariants", "gamma(2,2,3)", "--char", "2",
                       "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["kulshammer"]["kappa_dim"] == 44
    assert payload["kulshammer"]["radical_profile"][0] == 1


def test_classify_command(capsys):
    code, out, _ = run(capsys, "classify", "derived", "gamma(1,1,1)",
                       "lambda(1,1,2,2)", "--char", "2")
    assert code == 0
    assert "inequivalent" in out
    assert "hh1" in out and "8" in out and "5" in out


def test_classify_audit(capsys):
    code, out, _ = run(capsys, "classify", "derived", "gamma(2,4,1)",
                       "gamma(3,3,1)", "--audit", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["result"] == "inequivalent"
    assert payload["audit"]["audited"] is True


def test_hh_command(capsys):
    code, out, _ = run(capsys, "hh", "gamma(3,3,1)", "--max-degree", "4",
                       "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["hh"]["0"] == 6 and payload["hh"]["1"] == 2


def test_hh_unsupported_degree_is_computation_error(capsys):
    code, _, err = run(capsys, "hh", "lambda(1,1,2,2)", "--max-degree", "3")
    assert code == 1
    assert "degree" in err


def test_build_dot(capsys):
    code, out, _ = run(capsys, "build", "gamma(2,3,1)", "--dot")
    assert code == 0
    assert out.startswith("digraph")


def test_parse_error_exit_2(capsys, tmp_path):
    bad = tmp_path / "bad.ssb"
    bad.write_text("algebra { char = 4\n vertices = [u]\n arrows = []\n"
                   " relations = [] }")
    code, _, err = run(capsys, "build", str(bad))
    assert code == 2


def test_usage_error_exit_2(capsys):
    assert main(["classify", "nonsense", "a", "b"]) == 2


def test_env_len_bound(capsys, monkeypatch):
    monkeypatch.setenv("SSB_LEN_BOUND", "64")
    code, out, _ = run(capsys, "build", "gamma(2,2,1)", "--json")
    assert code == 0
    assert json.loads(out)["dimension"] == 18


def test_verify_suite_small(capsys):
    code, out, _ = run(capsys, "verify", "paper-suite", "--max", "2",
                       "--chars", "0,2")
    assert code == 0
    assert "PASS" in out and "FAIL" not in out
