import json
import re
from pathlib import Path

import jsonschema
import pytest

import ncpbw.cli as cli
from ncpbw import parse_input, render_input

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "fixtures"
SCHEMA = json.loads((ROOT / "docs" / "report_schema.json").read_text())

ALL_FIXTURES = ["weyl.alg", "sl2.alg", "quantum_plane.alg", "parabola.alg",
                "path_loop.alg", "cubic.alg"]


def run_cli(capsys, *args):
    code = cli.main([str(a) for a in args])
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def fixture(name):
    return FIXTURES / name


# -- input files ----------------------------------------------------------------

@pytest.mark.parametrize("name", ALL_FIXTURES)
def test_round_trip(name):
    job = parse_input(fixture(name).read_text())
    again = parse_input(render_input(job))
    assert again == job


def test_unknown_generator_is_named(tmp_path, capsys):
    bad = tmp_path / "bad.alg"
    bad.write_text('[algebra]\ntype = "free"\ngenerators = ["x", "y"]\n'
                   '[relations]\nr = "x*y - y*x - h"\n')
    code, _, err = run_cli(capsys, "gb", bad)
    assert code == 1
    assert "'h'" in err


def test_incomposable_path_literal(tmp_path, capsys):
    bad = tmp_path / "bad.alg"
    bad.write_text('[algebra]\ntype = "path"\nvertices = ["1", "2"]\n'
                   'arrows = [["a", "1", "2"], ["b", "2", "1"]]\n'
                   '[relations]\nr = "a*a"\n')
    code, _, err = run_cli(capsys, "gb", bad)
    assert code == 1
    assert "incomposable" in err


def test_t_is_reserved(tmp_path, capsys):
    bad = tmp_path / "bad.alg"
    bad.write_text('[algebra]\ntype = "free"\ngenerators = ["x"]\n'
                   '[relations]\nr = "x*t - 1"\n')
    code, _, err = run_cli(capsys, "gb", bad)
    assert code == 1
    assert "reserved" in err


def test_zero_relation_rejected(tmp_path, capsys):
    bad = tmp_path / "bad.alg"
    bad.write_text('[algebra]\ntype = "free"\ngenerators = ["x"]\n'
                   '[relations]\nr = "x - x"\n')
    code, _, err = run_cli(capsys, "gb", bad)
    assert code == 1 and "zero" in err


def test_invalid_toml(tmp_path, capsys):
    bad = tmp_path / "bad.alg"
    bad.write_text("[algebra\ntype =")
    code, _, err = run_cli(capsys, "gb", bad)
    assert code == 1 and "error" in err


def test_missing_file(capsys):
    code, _, err = run_cli(capsys, "gb", "no_such_file.alg")
    assert code == 1


def test_bad_precedence_override(capsys):
    code, _, err = run_cli(capsys, "gb", fixture("weyl.alg"),
                           "--order-precedence", "x,z")
    assert code == 1


# -- commands ---------------------------------------------------------------------

def test_pbw_weyl(capsys):
    code, out, _ = run_cli(capsys, "pbw", fixture("weyl.alg"),
                           "--degree-bound", "6", "--output", "json")
    assert code == 0
    rep = json.loads(out)
    assert rep["verdict"] == "holds"
    assert rep["assoc_graded"] == ["x*y - y*x"]
    assert rep["rees"] == ["x*y - y*x - t*t"]
    assert rep["hilbert"] == [1, 2, 3, 4, 5, 6, 7]


def test_hilbert_sl2(capsys):
    code, out, _ = run_cli(capsys, "hilbert", fixture("sl2.alg"),
                           "--degree-bound", "5", "--output", "json")
    assert code == 0
    assert json.loads(out)["hilbert"] == [1, 3, 6, 10, 15, 21]


def test_gb_parabola(capsys):
    code, out, _ = run_cli(capsys, "gb", fixture("parabola.alg"),
                           "--output", "json")
    assert code == 0
    rep = json.loads(out)
    assert rep["elements"] == ["x*x - y", "x*y - y*x"]
    assert rep["status"] == "complete"


def test_pbw_parabola_fails_with_exit_zero(capsys):
    code, out, _ = run_cli(capsys, "pbw", fixture("parabola.alg"),
                           "--degree-bound", "6", "--output", "json")
    assert code == 0  # a definite negative verdict is a successful run
    rep = json.loads(out)
    assert rep["verdict"] == "fails"
    assert rep["witnesses"] == [{"element": "x*y - y*x",
                                 "remainder": "x*y - y*x"}]


def test_nf_weyl(capsys):
    code, out, _ = run_cli(capsys, "nf", fixture("weyl.alg"),
                           "--element", "x*y*x", "--output", "json")
    assert code == 0
    rep = json.loads(out)
    assert rep["remainder"] == "y*x*x + x"


def test_gr_and_rees_path_fixture(capsys):
    code, out, _ = run_cli(capsys, "gr", fixture("path_loop.alg"),
                           "--output", "json")
    assert code == 0
    assert json.loads(out)["elements"] == ["a*b"]
    code, out, _ = run_cli(capsys, "rees", fixture("path_loop.alg"),
                           "--output", "json")
    assert code == 0
    assert json.loads(out)["elements"] == ["a*b - e1*t*t"]


def test_koszul_verdicts(capsys):
    code, out, _ = run_cli(capsys, "koszul", fixture("quantum_plane.alg"),
                           "--output", "json")
    assert code == 0 and json.loads(out)["verdict"] == "koszul-by-gb"
    code, out, _ = run_cli(capsys, "koszul", fixture("cubic.alg"),
                           "--output", "json")
    assert code == 0 and json.loads(out)["verdict"] == "inconclusive"


def test_truncation_exit_codes(tmp_path, capsys):
    staircase = tmp_path / "staircase.alg"
    staircase.write_text('[algebra]\ntype = "free"\ngenerators = ["x", "y"]\n'
                         '[relations]\nr = "x*x - x*y"\n')
    code, out, _ = run_cli(capsys, "gb", staircase, "--degree-bound", "4",
                           "--output", "json")
    assert code == 2
    assert json.loads(out)["status"] == "truncated"
    code, out, _ = run_cli(capsys, "koszul", staircase, "--degree-bound", "2",
                           "--output", "json")
    assert code == 2
    assert json.loads(out)["verdict"] == "not-applicable"
    code, out, _ = run_cli(capsys, "pbw", staircase, "--degree-bound", "4",
                           "--output", "json")
    assert code == 2
    assert json.loads(out)["verdict"] == "undecided"


def test_unit_ideal_behaviour(tmp_path, capsys):
    unit = tmp_path / "unit.alg"
    unit.write_text('[algebra]\ntype = "free"\ngenerators = ["x", "y"]\n'
                    '[relations]\nr1 = "x"\nr2 = "x - 1"\n')
    code, out, _ = run_cli(capsys, "gb", unit, "--output", "json")
    assert code == 0
    rep = json.loads(out)
    assert rep.get("unit_ideal") is True
    assert rep["elements"] == ["1"]
    code, _, err = run_cli(capsys, "pbw", unit)
    assert code == 1 and "unit ideal" in err


def test_precedence_override_changes_the_basis(capsys):
    code, out, _ = run_cli(capsys, "gb", fixture("weyl.alg"),
                           "--order-precedence", "y,x", "--output", "json")
    assert code == 0
    assert json.loads(out)["elements"] == ["y*x - x*y + 1"]


def test_budget_error_exit_one(capsys, tmp_path):
    staircase = tmp_path / "staircase.alg"
    staircase.write_text('[algebra]\ntype = "free"\ngenerators = ["x", "y"]\n'
                         '[relations]\nr = "x*x - x*y"\n')
    code, _, err = run_cli(capsys, "gb", staircase, "--degree-bound", "10",
                           "--max-pairs", "2")
    assert code == 1 and "budget" in err


# -- report contract ---------------------------------------------------------------

@pytest.mark.parametrize("name", ALL_FIXTURES)
@pytest.mark.parametrize("command", ["gb", "pbw", "gr", "rees", "hilbert", "koszul"])
def test_reports_validate_against_schema(capsys, name, command):
    code, out, _ = run_cli(capsys, command, fixture(name),
                           "--degree-bound", "6", "--output", "json")
    assert code in (0, 2)
    jsonschema.validate(json.loads(out), SCHEMA)


def test_nf_report_validates(capsys):
    _, out, _ = run_cli(capsys, "nf", fixture("weyl.alg"),
                        "--element", "x*x*y*y", "--output", "json")
    jsonschema.validate(json.loads(out), SCHEMA)


def test_text_and_json_verdicts_agree(capsys):
    code_t, text, _ = run_cli(capsys, "pbw", fixture("parabola.alg"))
    code_j, raw, _ = run_cli(capsys, "pbw", fixture("parabola.alg"),
                             "--output", "json")
    assert code_t == code_j
    verdict = json.loads(raw)["verdict"]
    assert f"verdict: {verdict}" in text


def _strip_timings(text: str) -> str:
    return re.sub(r',\s*"timings": \{[^}]*\}', "", text)


def test_json_reports_are_deterministic(capsys):
    runs = [run_cli(capsys, "pbw", fixture("sl2.alg"), "--output", "json")[1]
            for _ in range(2)]
    assert _strip_timings(runs[0]) == _strip_timings(runs[1])
