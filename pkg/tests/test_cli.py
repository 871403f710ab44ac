import json
from pathlib import Path

import pytest

from rinehart.cli import main
from rinehart.parser import parse_polynomial
from rinehart.polyring import WeightedRing

PROBLEMS = Path(__file__).resolve().parent.parent / "problems"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_cohomology_cubic(capsys):
    code, out, _ = run(capsys, "cohomology", str(PROBLEMS / "cubic_nabla.toml"), "--json")
    assert code == 0
    report = json.loads(out)
    assert report["tables"]["cohomology"]["totals"] == {"h0": 1, "h1": 1, "h2": 1}
    degree_zero = [r for r in report["tables"]["cohomology"]["degrees"] if r["w"] == 0]
    assert degree_zero[0]["dim_h1"] == 1
    assert report["representatives"]["h1_degree0"][0]["combination"] == "psi4"
    assert all(a["passed"] for a in report["assertions"])


def test_cohomology_window_flag(capsys):
    code, out, _ = run(capsys, "cohomology", str(PROBLEMS / "cubic_nabla.toml"),
                       "--json", "--window=-1..2")
    assert code == 0
    report = json.loads(out)
    assert report["tables"]["cohomology"]["window"] == [-1, 2]


def test_derivations(capsys):
    code, out, _ = run(capsys, "derivations", str(PROBLEMS / "x3y4z4.toml"), "--json")
    assert code == 0
    report = json.loads(out)
    assert report["tables"]["psi_row_degrees"] == [4, 3, 3, -2]
    assert all(a["passed"] for a in report["assertions"])


def test_invariants(capsys):
    code, out, _ = run(capsys, "invariants", str(PROBLEMS / "cubic_nabla.toml"), "--json")
    assert code == 0
    report = json.loads(out)
    assert report["tables"]["milnor"] == 8
    assert report["tables"]["tjurina"] == 8


def test_connection_check(capsys):
    code, out, _ = run(capsys, "connection", "check",
                       str(PROBLEMS / "cubic_nabla.toml"), "--json")
    assert code == 0
    assert json.loads(out)["assertions"][0]["passed"]


def test_connection_curvature_not_integrable_is_data(capsys):
    code, out, _ = run(capsys, "connection", "curvature",
                       str(PROBLEMS / "cubic_nablaprime.toml"), "--json")
    assert code == 0  # a successful computation, integrability is data
    report = json.loads(out)
    assert report["tables"]["integrable"] is False


def test_connection_class(capsys):
    code, out, _ = run(capsys, "connection", "class",
                       str(PROBLEMS / "cubic_nablaprime.toml"), "--json")
    assert code == 0
    report = json.loads(out)
    assert report["tables"]["vanishes"] is True
    witness = report["representatives"]["witness_potential"]
    assert witness == {"E": "0", "D1": "x*z", "D2": "-x*y", "D3": "x^2"}


def test_connection_find(capsys):
    code, out, _ = run(capsys, "connection", "find",
                       str(PROBLEMS / "cubic_nabla.toml"), "--json")
    assert code == 0
    report = json.loads(out)
    assert report["tables"]["found"] is True
    assert report["tables"]["matrices"]["E"] == [["2/9", "0"], ["0", "2/9"]]


def test_connection_equiv(capsys):
    code, out, _ = run(capsys, "connection", "equiv",
                       str(PROBLEMS / "cubic_nabla.toml"), "--json")
    assert code == 0
    assert json.loads(out)["tables"]["equivalent"] is False
    code, out, _ = run(capsys, "connection", "equiv",
                       str(PROBLEMS / "cubic_equiv.toml"), "--json")
    assert code == 0
    assert json.loads(out)["tables"]["equivalent"] is True


def test_connection_equiv_rejects_non_integrable(capsys):
    code, _, err = run(capsys, "connection", "equiv",
                       str(PROBLEMS / "cubic_nablaprime.toml"))
    assert code == 2
    assert "cocycle" in err


def test_curve_unique(capsys):
    code, out, _ = run(capsys, "curve", str(PROBLEMS / "gamma23.toml"), "--json")
    assert code == 0
    report = json.loads(out)
    assert report["tables"]["verdict"] == "unique"
    assert report["tables"]["c"] == "0"
    assert all(a["passed"] for a in report["assertions"])


def test_curve_none(capsys):
    code, out, _ = run(capsys, "curve", str(PROBLEMS / "gamma345_gap2.toml"), "--json")
    assert code == 0
    report = json.loads(out)
    assert report["tables"]["verdict"] == "none"
    assert "cohomology" not in report["tables"]


def test_curve_all_scalars(capsys):
    code, out, _ = run(capsys, "curve", str(PROBLEMS / "gamma23_full.toml"), "--json")
    assert code == 0
    report = json.loads(out)
    assert report["tables"]["verdict"] == "all_scalars"
    assert report["tables"]["cohomology"]["h1_total"] == 0


@pytest.mark.parametrize("fmt", ["text", "json"])
def test_reports_are_byte_identical_across_runs(capsys, fmt):
    argv = ["cohomology", str(PROBLEMS / "cone_d4.toml")]
    if fmt == "json":
        argv.append("--json")
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second and first


def test_polynomials_in_reports_reparse_to_normal_form(capsys):
    _, out, _ = run(capsys, "connection", "find",
                    str(PROBLEMS / "cubic_nabla.toml"), "--json")
    report = json.loads(out)
    ring = WeightedRing(report["ring"]["variables"],
                        report["ring"]["weights"], report["ring"]["f"])

    def walk(node):
        if isinstance(node, dict):
            for v in node.values():
                walk(v)
        elif isinstance(node, list):
            for v in node:
                walk(v)
        elif isinstance(node, str):
            try:
                p = parse_polynomial(node, ring.variable_names)
            except Exception:
                return
            assert ring.normal_form(p).rep == p or not p.is_zero() or node == "0"
            # stronger: printing the reparse reproduces the string
            assert ring.poly_str(ring.normal_form(p).rep) in (node, ring.poly_str(p))

    walk(report["tables"]["matrices"])
    walk(report["tables"]["module"])


def test_missing_file_is_input_error(capsys):
    code, _, err = run(capsys, "cohomology", "no_such_file.toml")
    assert code == 2 and "cannot read" in err


def test_ring_and_curve_conflict(tmp_path, capsys):
    bad = tmp_path / "bad.toml"
    bad.write_text("[ring]\nvariables=['x','y','z']\nweights=[1,1,1]\nf='x^2+y^2+z^2'\n"
                   "[curve]\ngenerators=[2,3]\n")
    code, _, err = run(capsys, "cohomology", str(bad))
    assert code == 2 and "exactly one" in err


def test_bad_polynomial_reports_position(tmp_path, capsys):
    bad = tmp_path / "bad.toml"
    bad.write_text('[ring]\nvariables=["x","y","z"]\nweights=[1,1,1]\nf="x^2 + 2y"\n')
    code, _, err = run(capsys, "cohomology", str(bad))
    assert code == 2 and "position" in err


def test_unknown_command_exits_two(capsys):
    with pytest.raises(SystemExit) as info:
        main(["frobnicate", "x.toml"])
    assert info.value.code == 2


def test_missing_module_section(capsys):
    code, _, err = run(capsys, "connection", "check",
                       str(PROBLEMS / "cone_d4.toml"))
    assert code == 2 and "[module]" in err


def test_assertion_failure_exits_one(tmp_path, capsys):
    # resonant scalar: c = 5 lies in Lambda = N_0, so the honest H^1 count
    # finds one nonzero degree and the vanishing assertion fails
    resonant = tmp_path / "resonant.toml"
    resonant.write_text('[curve]\ngenerators = [2, 3]\n'
                        'lambda_complement = []\nc = "5"\n')
    code, out, _ = run(capsys, "curve", str(resonant), "--json")
    assert code == 1
    report = json.loads(out)
    failing = [a for a in report["assertions"] if not a["passed"]]
    assert [a["name"] for a in failing] == ["h1_vanishes"]
    assert report["tables"]["cohomology"]["h1_total"] == 1
