import json

import pytest

from holimcat.cli import main

from helpers import FIXTURES


def run(capsys, *args):
    code = main([str(a) for a in args])
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("args,code", [
    (["check", "reedy", "punctured_square.json"], 0),
    (["check", "reedy", "point_square.json"], 0),
    (["check", "reedy-equivariant", "punctured_square_c2.json"], 0),
    (["check", "cube-cartesian", "product_square.json"], 0),
    (["check", "cube-cartesian", "empty_square.json"], 1),
    (["check", "bn-conditions", "bn2_point.json"], 0),
    (["check", "lydakis", "cospan_intervals.json"], 0),
    (["check", "lemma-iso", "punctured_square.json"], 0),
    (["check", "lemma-iso", "punctured_square_c2.json"], 0),
    (["check", "cofinality", "lambda2.json"], 0),
    (["model", "holim", "punctured_square.json"], 0),
    (["model", "bk-pullback", "cospan_points.json"], 0),
    (["model", "bk-pullback", "cospan_intervals.json"], 0),
    (["model", "total-fiber", "product_square.json"], 0),
    (["model", "grothendieck", "punctured_square.json"], 0),
    (["validate", "triangle.json"], 0),
    (["validate", "broken_table.json"], 1),
    (["check", "reedy", "lambda2.json"], 2),
])
def test_exit_codes(capsys, args, code):
    got, out, err = run(capsys, *args[:-1], FIXTURES / args[-1])
    assert got == code, err


def test_budget_exit_code(capsys):
    code, _, err = run(capsys, "check", "reedy",
                       FIXTURES / "punctured_square.json", "--budget", "5")
    assert code == 3 and "budget" in err


def test_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "check", "reedy", tmp_path / "nope.json")
    assert code == 2 and err.startswith("error:")


def test_malformed_json_reports_offset(capsys, tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{"kind": "category", "objects": [}')
    code, _, err = run(capsys, "validate", p)
    assert code == 2
    assert "offset" in err


def test_json_output_and_out_file(capsys, tmp_path):
    out = tmp_path / "report.json"
    code, text, _ = run(capsys, "check", "reedy",
                        FIXTURES / "punctured_square.json", "--json",
                        "--out", out)
    assert code == 0
    assert out.read_text(encoding="utf-8") == text
    data = json.loads(text)
    assert data["weak_equivalence_test"] == "homology proxy"
    assert data["passed"] is True
    assert data["summary"]["checks"] == len(data["rows"])


def test_summary_mentions_proxy(capsys):
    code, text, _ = run(capsys, "check", "cube-cartesian",
                        FIXTURES / "product_square.json")
    assert "(homology proxy)" in text.splitlines()[0]


def test_cofinality_notes_list_failing_sets(capsys):
    code, text, _ = run(capsys, "check", "cofinality",
                        FIXTURES / "lambda2.json", "--json")
    data = json.loads(text)
    assert code == 0
    assert data["summary"]["initial_objects_verified"] is False
    assert any("S={+}" in n for n in data["notes"])


def test_repeat_runs_are_identical(capsys):
    args = ("model", "holim", FIXTURES / "punctured_square.json", "--json")
    first = run(capsys, *args)[1]
    second = run(capsys, *args)[1]
    assert first == second
    art = json.loads(first)["artifact"]
    assert len(art["objects"]) == 5


def test_layer_option(capsys):
    code, text, _ = run(capsys, "check", "lemma-iso",
                        FIXTURES / "punctured_square.json", "--layer", "0",
                        "--json")
    assert code == 0
    assert json.loads(text)["summary"]["U"] == ["{1,2}"]


def test_bad_arguments(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["check", "reedy", str(FIXTURES / "point_square.json"),
              "--budget", "0"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit):
        main(["check", "nonsense", "x.json"])
