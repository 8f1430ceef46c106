import json

import pytest

from threeterm import fixture, fixture_path, poly_from_json
from threeterm.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_indices_example(capsys):
    code, out, _ = run(capsys, "indices", "--field", fixture_path("Q3z8"), "--poly", fixture_path("three_index_deg9"))
    assert code == 0
    doc = json.loads(out)
    assert doc["tilde"] == [7, 3, 0] and doc["indices"] == [7, 3, 0]


def test_indices_table(capsys):
    code, out, _ = run(capsys, "indices", "--poly", fixture_path("deg6_char3"), "--table")
    assert code == 0
    assert out.splitlines()[1].split() == ["0", "4", "4"]


def test_classify_count(capsys):
    code, out, _ = run(capsys, "classify", "--field", fixture_path("Q3z8"), "--k", "2", "--i0", "8",
                       "--count-only")
    assert code == 0 and json.loads(out) == {"count": 16}
    code, out, _ = run(capsys, "classify", "--field", fixture_path("Q3z8"), "--k", "2", "--i0", "8",
                       "--count-only", "--galois-filter")
    assert json.loads(out) == {"count": 9}


def test_classify_lines_and_jobs(capsys):
    args = ["classify", "--field", fixture_path("Q3z8"), "--k", "2", "--i0", "8"]
    code, serial, _ = run(capsys, *args)
    assert code == 0
    docs = [json.loads(line) for line in serial.splitlines()]
    assert len(docs) == 16 and sum(d["galois"] for d in docs) == 9
    code, parallel, _ = run(capsys, *args, "--jobs", "2")
    assert code == 0 and parallel == serial


def test_equiv_same_file(capsys):
    p = fixture_path("two_index_deg9")
    code, out, _ = run(capsys, "equiv", "--ell", "1", "--f", p, "--g", p)
    assert code == 0 and json.loads(out)["equivalent"] is True


def test_rho_and_minpoly(capsys):
    code, out, _ = run(capsys, "rho", "--poly", fixture_path("two_index_deg9"), "--ell", "2")
    doc = json.loads(out)
    assert code == 0 and doc["rho"]["9"] == 3 and doc["phi_LK"] == "10/9" and doc["break"] == "1"
    code, out, _ = run(capsys, "minpoly", "--poly", fixture_path("three_index_deg9"), "--expr", "X")
    assert code == 0
    assert poly_from_json(json.loads(out)).equal_coefficients(fixture("three_index_deg9"))


def test_reduce_and_trace(capsys, tmp_path):
    trace = tmp_path / "trace.json"
    code, out, _ = run(capsys, "reduce", "--poly", fixture_path("two_index_deg9"), "--trace", str(trace))
    assert code == 0
    doc = json.loads(out)
    assert (doc["A0"], doc["b0"], doc["omega"], doc["gamma"]) == (1, 1, "2", "0")
    assert json.loads(trace.read_text())["steps"][0]["case"] == "Case2-at"


def test_galois_from_form_file(capsys, tmp_path):
    form = tmp_path / "form.json"
    form.write_text(json.dumps({"k": 2, "A0": 1, "b0": 1, "omega": "2", "alphas": {}, "gamma": "g"}))
    code, out, _ = run(capsys, "galois", "--form", str(form), "--field", fixture_path("Q3z8"))
    doc = json.loads(out)
    assert code == 0 and doc["galois"] and doc["group"] == "(Z/3Z)^2"
    assert doc["splitting_field"]["degree"] == 9


def test_field_check(capsys):
    code, out, _ = run(capsys, "field-check", "--field", fixture_path("Q3z8"))
    assert code == 0 and json.loads(out)["q"] == 9


def test_verify_command(capsys):
    code, out, _ = run(capsys, "verify-paper")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 6 and all(line.startswith("PASS") for line in lines)


def test_exit_codes(capsys, tmp_path):
    assert run(capsys, "bogus")[0] == 64
    assert run(capsys)[0] == 64
    assert run(capsys, "rho", "--poly", fixture_path("two_index_deg9"))[0] == 64
    code, out, err = run(capsys, "reduce", "--poly", fixture_path("three_index_deg9"))
    assert code == 2 and out == "" and "ThreeIndexInput" in err
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"field": {"model": "mixed", "p": 3, "precision": 8}, "degree": 3,
                               "terms": {"3": "1"}}))
    assert run(capsys, "indices", "--poly", str(bad))[0] == 2
    low = tmp_path / "low.json"
    low.write_text(json.dumps({"field": {"model": "equal", "p": 3, "precision": 5}, "degree": 9,
                               "terms": {"1": "t", "9": "t"}}))
    assert run(capsys, "reduce", "--poly", str(low))[0] == 3
    assert run(capsys, "classify", "--field", fixture_path("Q3z8"), "--k", "2", "--i0", "6")[0] == 2


def test_output_is_deterministic(capsys):
    args = ["galois", "--field", fixture_path("Q3z8"), "--k", "2", "--i0", "8"]
    first = run(capsys, *args)[1]
    assert first == run(capsys, *args)[1]
    assert len(first.splitlines()) == 16
