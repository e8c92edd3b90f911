"""Command line surface: formats, exit codes, determinism."""

import json

import pytest

from maro import dump_instance, fixture
from maro.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_validate_fixture(capsys):
    code, out, _ = run(capsys, "validate", "--fixture", "FIG2L")
    assert code == 0
    doc = json.loads(out)
    assert doc["ok"] and doc["decisions"] == ["x1", "x2"]


def test_validate_bad_document_names_path(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({
        "name": "bad", "n": 2, "decisions": ["x1"], "scenarios": ["u1", "u2"],
        "recourse": {"x1": {"u1": [[1, 2]], "u2": []}},
    }))
    code, _, err = run(capsys, "validate", "--instance", str(bad))
    assert code == 2
    assert "empty recourse set at (x1,u2)" in err


def test_validate_requires_exactly_one_source(capsys):
    code, _, err = run(capsys, "validate")
    assert code == 2 and "exactly one" in err
    code, _, err = run(capsys, "validate", "--fixture", "FIG2L", "--instance", "x.json")
    assert code == 2


def test_missing_file_is_usage_error(capsys):
    code, _, err = run(capsys, "validate", "--instance", "/nonexistent.json")
    assert code == 2 and "cannot read" in err


def test_unknown_flag_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["validate", "--fixture", "FIG2L", "--bogus"])
    assert exc.value.code == 2


def test_solve_pb_matches_figure(tmp_path, capsys):
    f = tmp_path / "fig4.json"
    f.write_text(dump_instance(fixture("FIG4")))
    code, out, _ = run(capsys, "solve-pb", "--instance", str(f))
    assert code == 0
    doc = json.loads(out)
    assert doc["efficient"] == ["x1", "x2"]
    assert doc["fpb"]["x1"] == [1, 6]
    assert doc["fpb"]["x2"] == [8, 4]


def test_solve_ws(capsys):
    code, out, _ = run(capsys, "solve-ws", "--fixture", "FIG2L", "--lambda", "0.5,0.5")
    doc = json.loads(out)
    assert code == 0
    assert doc["efficient"] == ["x2"] and doc["guarantees"]["x2"] == 5


def test_solve_eps_with_placeholder(capsys):
    code, out, _ = run(capsys, "solve-eps", "--fixture", "FIG2L",
                       "--eps", "_,7", "--j", "1")
    doc = json.loads(out)
    assert code == 0
    assert doc["efficient"] == ["x2"] and doc["guarantees"]["x2"] == 7


def test_solve_eps_infinite_guarantee_serializes(capsys):
    code, out, _ = run(capsys, "solve-eps", "--fixture", "FIG2L",
                       "--eps", "_,4", "--j", "1")
    doc = json.loads(out)
    assert code == 0
    assert doc["infeasible"] is True
    assert doc["guarantees"]["x1"] == "+inf"


def test_solve_eps_misplaced_placeholder(capsys):
    code, _, err = run(capsys, "solve-eps", "--fixture", "FIG2L",
                       "--eps", "7,_", "--j", "1")
    assert code == 2 and "placeholder" in err


def test_efficiency_multi_scenario(capsys):
    code, out, _ = run(capsys, "efficiency", "--fixture", "FIG2R", "--x", "x1",
                       "--kind", "multi-scenario", "--strict", "--rel", "l")
    doc = json.loads(out)
    assert code == 0
    assert doc["efficient"] is False
    assert doc["witness"]["xprime"] == "x2"
    assert doc["witness"]["scenarios"] == {"u1": "x2", "u2": "x2"}


def test_efficiency_lambda_min_relation(capsys):
    code, out, _ = run(capsys, "efficiency", "--fixture", "FIG2L", "--x", "x2",
                       "--kind", "flimsy", "--weak", "--rel", "lmin:0.5,0.5")
    assert code == 0
    assert json.loads(out)["efficient"] is True


def test_efficiency_vector_relation_requires_mro(capsys):
    code, _, err = run(capsys, "efficiency", "--fixture", "FIG2L", "--x", "x1",
                       "--kind", "flimsy", "--rel", "leqq")
    assert code == 2 and "--mro" in err


def test_efficiency_mro_point_based(capsys):
    code, out, _ = run(capsys, "efficiency", "--fixture", "FIG2L", "--x", "x2",
                       "--kind", "point-based", "--plain", "--mro")
    assert code == 0
    assert json.loads(out)["efficient"] is True


def test_efficiency_mro_rejects_multipoint_recourse(capsys):
    code, _, err = run(capsys, "efficiency", "--fixture", "FIG4", "--x", "x1",
                       "--kind", "point-based", "--mro")
    assert code == 2 and "singleton recourse" in err


def test_image_ws_grid_json_and_csv(capsys):
    code, out, _ = run(capsys, "image", "ws", "--fixture", "FIG2L", "--grid-k", "2")
    assert code == 0
    doc = json.loads(out)
    assert {"lambda", "point"} <= set(doc["points"][0])
    code, out, _ = run(capsys, "image", "ws", "--fixture", "FIG2L", "--grid-k", "2",
                       "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "lambda_1,lambda_2,f1,f2"
    assert len(lines) > 1


def test_image_eps_single_and_list(tmp_path, capsys):
    code, out, _ = run(capsys, "image", "eps", "--fixture", "FIG2L",
                       "--eps", "_,6", "--j", "1")
    doc = json.loads(out)
    assert code == 0 and doc["point"] == [7, 6] and doc["feasible"]

    eps_file = tmp_path / "eps.json"
    eps_file.write_text(json.dumps([[0, 5], [0, 6], [0, 7], [0, 8]]))
    code, out, _ = run(capsys, "image", "eps", "--fixture", "FIG2L",
                       "--eps-list", str(eps_file), "--j", "1")
    doc = json.loads(out)
    assert code == 0
    assert doc["points"] == [[7, 6], [7, 7], [7, 8]]
    assert doc["infeasible"] == [["+inf", 5]]


def test_image_pb(capsys):
    code, out, _ = run(capsys, "image", "pb", "--fixture", "FIG4")
    doc = json.loads(out)
    assert code == 0 and doc["points"] == [[1, 6], [8, 4]]


def test_image_requires_parameters(capsys):
    code, _, err = run(capsys, "image", "ws", "--fixture", "FIG2L")
    assert code == 2 and "--lambda or --grid-k" in err
    code, _, err = run(capsys, "image", "eps", "--fixture", "FIG2L", "--j", "1")
    assert code == 2 and "--eps" in err


def test_plot_from_image_output(tmp_path, capsys):
    code, out, _ = run(capsys, "image", "pb", "--fixture", "FIG4")
    src = tmp_path / "points.json"
    src.write_text(out)
    dst = tmp_path / "front.svg"
    code, _, err = run(capsys, "plot", "--in", str(src), "--out", str(dst))
    assert code == 0
    svg = dst.read_text()
    assert svg.startswith("<svg") and "circle" in svg
    assert "wrote" in err


def test_plot_direct_and_stdout(capsys):
    code, out, _ = run(capsys, "plot", "--fixture", "FIG4", "--what", "pb", "--connect")
    assert code == 0 and out.startswith("<svg")


def test_plot_errors(capsys):
    code, _, err = run(capsys, "plot", "--fixture", "FIG2L", "--what", "ws")
    assert code == 2 and "--lambda" in err


def test_fixtures_listing_and_dump(capsys):
    code, out, _ = run(capsys, "fixtures")
    doc = json.loads(out)
    assert code == 0 and "FIG2L" in doc["fixtures"]
    assert doc["fixtures"]["FIG6L"]["separation"]["j"] == 1
    code, out, _ = run(capsys, "fixtures", "--dump", "FIG2R")
    assert code == 0
    assert json.loads(out)["recourse"]["x2"]["u1"] == [[2, 2]]


def test_verify_small_and_deterministic(capsys):
    code1, out1, _ = run(capsys, "verify", "--seed", "42", "--count", "40")
    code2, out2, _ = run(capsys, "verify", "--seed", "42", "--count", "40")
    assert code1 == code2 == 0
    assert out1 == out2
    doc = json.loads(out1)
    assert doc["pass"] is True
    assert doc["checks"]["thm_ws_implies_ms"]["violations"] == []


def test_verify_check_filter_and_bad_id(capsys):
    code, out, _ = run(capsys, "verify", "--seed", "1", "--count", "5",
                       "--check", "thm_eps_switch")
    assert code == 0
    assert list(json.loads(out)["checks"]) == ["thm_eps_switch"]
    code, _, err = run(capsys, "verify", "--seed", "1", "--count", "5",
                       "--check", "nope")
    assert code == 2 and "unknown check ids" in err


def test_compare_json_and_md(capsys):
    code, out, _ = run(capsys, "compare", "--fixture", "FIG2L",
                       "--lambda", "0.5,0.5", "--eps", "_,7", "--j", "1")
    doc = json.loads(out)
    assert code == 0
    assert doc["weighted_sum"]["plain"] == ["x2"]
    code, out, _ = run(capsys, "compare", "--fixture", "FIG2L",
                       "--lambda", "0.5,0.5", "--eps", "_,7", "--j", "1",
                       "--format", "md")
    assert code == 0
    assert out.startswith("# Concept comparison")
    assert "| efficient (plain) |" in out


def test_tolerance_flag(capsys):
    # with a huge tolerance the two FIG2L decisions tie under the weighted sum
    code, out, _ = run(capsys, "solve-ws", "--fixture", "FIG2L",
                       "--lambda", "0.5,0.5", "--strictness", "strict", "--tol", "2.0")
    doc = json.loads(out)
    assert code == 0
    assert doc["efficient"] == [] and doc["strict_empty_tie"] is True
    assert doc["plain_guarantee"] == 5
