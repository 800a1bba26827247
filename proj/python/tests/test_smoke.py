import json

import pytest

import hamcheck


def test_builtins():
    names = hamcheck.builtin_names()
    assert names[:5] == ["kdv1", "kdv2", "twowave", "sinhgordon", "threewave"]
    p = hamcheck.Problem.builtin("kdv1")
    assert p.dimension == 3
    assert p.expected["cor2"] is True


def test_compat_paths():
    r = hamcheck.check_compat(hamcheck.Problem.builtin("kdv2"), form="corrected")
    assert r.passed
    assert [c.id for c in r.conditions] == [f"thmcomp.{i}" for i in range(1, 6)]
    assert "thmcomp" in r.notes[0]

    r = hamcheck.check_compat(hamcheck.Problem.builtin("threewave"))
    assert r.passed
    assert r["cor2.1"].passed


def test_printed_twowave_fails():
    p = hamcheck.Problem.builtin("twowave")
    r = hamcheck.check_compat(p)
    assert not r.passed
    assert r["thmcomp.3"].residual[(1, 2)] == "-2*a*u1"
    o = hamcheck.oracle(p)
    assert not o.passed
    assert o["oracle.p_x"].residual[(1, 2)] == "-2*a*u1"
    assert hamcheck.oracle(hamcheck.Problem.builtin("twowave-corrected")).passed


def test_operator_checks():
    sets = hamcheck.check_operator(hamcheck.Problem.builtin("kdv1"))
    assert len(sets) == 2
    assert all(s.passed for s in sets)
    assert len(hamcheck.check_operator(hamcheck.Problem.builtin("kdv2"))) == 1
    with pytest.raises(ValueError):
        hamcheck.check_operator(hamcheck.Problem.builtin("kdv2"), form="sideways")


def test_expressions():
    e = hamcheck.Expr("(u1^2 - 1/u1^2)/2", 1)
    assert str(e) == "(u1^4 - 1)/(2*u1^2)"
    assert str(e.diff(1)) == "(u1^4 + 1)/u1^3"
    assert str(e.substitute({1: hamcheck.Expr("2", 1)})) == "15/8"
    x = hamcheck.Expr("u1", 2)
    y = hamcheck.Expr("u2", 2)
    assert (x * y - y * x).is_zero()
    assert hamcheck.Expr("a*u1", 1, ["a"]) == hamcheck.Expr("u1*a", 1, ["a"])
    with pytest.raises(hamcheck.ParseError):
        hamcheck.Expr("2u1", 1)
    with pytest.raises(ValueError):
        x / (y - y)


def test_problem_files(tmp_path):
    p = hamcheck.Problem.builtin("sinhgordon")
    assert hamcheck.Problem.from_json(p.to_json()) == p
    path = tmp_path / "sg.json"
    p.save(path)
    assert hamcheck.Problem.load(path) == p
    doc = json.loads(p.to_json())
    doc["V"][1][0] = "2u1"
    with pytest.raises(hamcheck.LoadError, match=r"V\[1\]\[0\]"):
        hamcheck.Problem.from_json(json.dumps(doc))
    doc = json.loads(p.to_json())
    doc["g"] = [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]
    with pytest.raises(hamcheck.DimensionMismatch):
        hamcheck.Problem.from_json(json.dumps(doc))
    with pytest.raises(hamcheck.Error):
        hamcheck.Problem.builtin("nope")


def test_cli_in_process():
    code, out, err = hamcheck.run_cli(["oracle", "twowave", "--json"])
    assert code == 1
    assert json.loads(out)["verdict"] == "fail"
    code, out, err = hamcheck.run_cli(["check-compat", "kdv1"])
    assert code == 0
    code, out, err = hamcheck.run_cli(["check-compat", "missing.json"])
    assert code == 2 and err.startswith("error:")
