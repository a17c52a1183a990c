import json

import pytest

from frobsplit.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_eval_examples(capsys):
    assert run(capsys, "eval", "--p", "3", "E F")[:2] == (0, "F E + [H;1]\n")
    assert run(capsys, "eval", "--p", "2", "--apply", "phi", "E")[1] == "E^(2) (1 + [H;1])\n"
    assert run(capsys, "eval", "--p", "3", "--apply", "fr", "E^(3)")[1] == "E\n"
    assert run(capsys, "eval", "--p", "3", "E", "F")[1] == "F E + [H;1]\n"


def test_eval_json(capsys):
    code, out, _ = run(capsys, "eval", "--p", "2", "--apply", "phi", "--format", "json", "E")
    data = json.loads(out)
    assert data["phi"] == "E^(2) (1 + [H;1])"
    assert data["phi_expanded"] == "E^(2) + [H;1] E^(2)"


def test_contract_examples(capsys):
    code, out, _ = run(capsys, "contract", "--p", "2", "nabla(2)")
    assert code == 0 and "factors: L(1), L(0)" in out.split("contraction:")[1]
    code, out, _ = run(capsys, "contract", "--p", "3", "triv", "--format", "json")
    assert json.loads(out)["contraction"]["factors"] == "L(0)"
    code, out, _ = run(capsys, "contract", "--p", "3", "tensor(St, twist(nabla(2)))", "--compare", "nabla(2)")
    assert code == 0 and "contraction isomorphic to nabla(2): yes" in out


def test_contract_compare_failure(capsys):
    code, _, _ = run(capsys, "contract", "--p", "2", "nabla(2)", "--compare", "L(1)")
    assert code == 1


def test_usage_errors(capsys):
    assert run(capsys, "contract", "--p", "3", "nabla(")[0] == 2
    assert run(capsys, "contract", "--p", "3", "frob(1)")[0] == 2
    assert run(capsys, "eval", "--p", "4", "E")[0] == 2
    assert run(capsys, "eval", "--p", "3", "E +")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--suite", "nope"])
    assert exc.value.code == 2


def test_resource_bound(capsys):
    code, _, err = run(capsys, "verify", "--p", "2", "--max-degree", "17")
    assert code == 3 and "8p" in err


def test_verify_suite_passes(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "contraction", "--p", "2")
    assert code == 0 and out.strip().endswith("checks passed")


def test_verify_single_module(capsys):
    code, out, _ = run(capsys, "verify", "--p", "3", "--check", "twist-contract", "--module", "lambda(3)")
    assert code == 0 and out.startswith("PASS")


def test_verify_report_is_deterministic(capsys, tmp_path):
    argv = ["verify", "--suite", "flag", "--p", "2", "--seed", "4", "--format", "json", "--no-timing"]
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv, "--out", str(tmp_path / "r.json"))
    assert first == second
    data = json.loads(first)
    assert data["pass"] and all("elapsed_ms" not in c for c in data["checks"])
    assert json.loads((tmp_path / "r.json").read_text()) == data


def test_verify_jobs_keeps_registry_order(capsys):
    argv = ["verify", "--suite", "hyperalg", "--p", "2", "--sampled", "--format", "json", "--no-timing"]
    _, serial, _ = run(capsys, *argv)
    _, pooled, _ = run(capsys, *argv, "--jobs", "2")
    assert serial == pooled


def test_split_command(capsys):
    code, out, _ = run(capsys, "split", "--p", "3", "--max-degree", "9", "--check", "sigma")
    data = json.loads(out)
    assert code == 0 and data["checks"] == [{"check": "sigma", "p": 3, "D": 9, "pass": True}]


def test_rank_two_verify(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "hyperalg", "--p", "2", "--rank", "2", "--sampled")
    assert code == 0, out
