"""End-to-end tests of the command-line interface."""

import json

import pytest

from pointideals.cli import EXIT_INPUT, EXIT_OK, EXIT_VERIFY, main

P1_THREE = {"space": "projective", "dim": 1, "points": [["1", "0"], ["1", "1"], ["0", "1"]]}
AFF_ONE = {"space": "affine", "dim": 2, "points": [["3", "5"]]}


@pytest.fixture
def write(tmp_path):
    def _write(name, doc):
        path = tmp_path / name
        path.write_text(json.dumps(doc) if isinstance(doc, dict) else doc)
        return str(path)

    return _write


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_gb_single_affine_point_text(write, capsys):
    path = write("p.json", AFF_ONE)
    code, out, _ = run(capsys, "gb", path, "--order", "lex", "--output", "text")
    assert code == EXIT_OK
    assert out == "X2 - 3\nX3 - 5\n"


def test_gb_json_reverifies_byte_for_byte(write, capsys, tmp_path):
    points = write("p.json", P1_THREE)
    code, out, _ = run(capsys, "gb", points)
    assert code == EXIT_OK
    basis = tmp_path / "basis.json"
    basis.write_text(out)
    code, out2, _ = run(capsys, "verify", points, str(basis))
    assert code == EXIT_OK
    assert json.loads(out2)["passed"] is True


def test_verify_detects_mutation(write, capsys, tmp_path):
    points = write("p.json", P1_THREE)
    code, out, _ = run(capsys, "gb", points)
    doc = json.loads(out)
    doc["basis"][0][1][1] = "17"  # corrupt one coefficient
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(doc))
    code, out2, _ = run(capsys, "verify", points, str(bad), "--output", "text")
    assert code == EXIT_VERIFY
    assert "passed: false" in out2
    assert "vanish" in out2 or "reducible" in out2


def test_gb_verify_flag(write, capsys):
    points = write("p.json", P1_THREE)
    code, _, _ = run(capsys, "gb", points, "--verify")
    assert code == EXIT_OK


def test_axes_matches(write, capsys):
    points = write("p.json", P1_THREE)
    code, out, _ = run(capsys, "axes", points)
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["per_direction"] == [2, 1]
    assert doc["total"] == 3
    assert doc["matches"] is True


def test_axes_rejects_affine(write, capsys):
    points = write("p.json", AFF_ONE)
    code, _, err = run(capsys, "axes", points)
    assert code == EXIT_INPUT
    assert "projective" in err


def test_staircase_lists_corners_and_standard(write, capsys):
    points = write("p.json", P1_THREE)
    code, out, _ = run(capsys, "staircase", points, "--degree-cap", "2")
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["corners"] == [[1, 2]]
    assert [0, 0] in doc["standard"] and [2, 0] in doc["standard"]


def test_staircase_render_flag(write, capsys):
    points = write("p.json", P1_THREE)
    code, out, _ = run(capsys, "staircase", points, "--render")
    assert code == EXIT_OK
    assert "axes total: 3" in json.loads(out)["render"]


def test_hilbert_values(write, capsys):
    points = write("p.json", P1_THREE)
    code, out, _ = run(capsys, "hilbert", points, "--degree-cap", "3")
    assert code == EXIT_OK
    assert json.loads(out)["values"] == [1, 2, 3, 3]


def test_compare_orders(write, capsys):
    points = write("p.json", P1_THREE)
    code, out, _ = run(capsys, "compare-orders", points)
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["deglex"]["total"] == doc["degrevlex"]["total"] == 3
    assert doc["matches"] is True


def test_render_command(write, capsys):
    points = write("p.json", AFF_ONE)
    code, out, _ = run(capsys, "render", points, "--output", "text")
    assert code == EXIT_OK
    assert "B" in out


def test_render_rejects_high_arity(write, capsys):
    doc = {"space": "projective", "dim": 3, "points": [["1", "0", "0", "0"]]}
    points = write("p.json", doc)
    code, _, err = run(capsys, "render", points)
    assert code == EXIT_INPUT
    assert "arity" in err


def test_degrevlex_only_for_compare_orders(write, capsys):
    points = write("p.json", P1_THREE)
    code, _, err = run(capsys, "gb", points, "--order", "degrevlex")
    assert code == EXIT_INPUT
    assert "compare-orders" in err


def test_projective_gb_requires_deglex(write, capsys):
    points = write("p.json", P1_THREE)
    code, _, _ = run(capsys, "gb", points, "--order", "lex")
    assert code == EXIT_INPUT


def test_malformed_input_exits_2(write, capsys):
    points = write("p.json", '{"space": "affine"')
    code, _, err = run(capsys, "gb", points)
    assert code == EXIT_INPUT
    assert "input error" in err


def test_missing_file_exits_2(capsys, tmp_path):
    code, _, err = run(capsys, "gb", str(tmp_path / "nope.json"))
    assert code == EXIT_INPUT


def test_zero_projective_vector_exits_2(write, capsys):
    doc = {"space": "projective", "dim": 1, "points": [["0", "0"]]}
    points = write("p.json", doc)
    code, _, _ = run(capsys, "gb", points)
    assert code == EXIT_INPUT


def test_output_is_deterministic_under_point_permutation(write, capsys):
    forward = write("a.json", P1_THREE)
    reordered = dict(P1_THREE, points=list(reversed(P1_THREE["points"])))
    backward = write("b.json", reordered)
    _, out1, _ = run(capsys, "gb", forward)
    _, out2, _ = run(capsys, "gb", backward)
    assert out1 == out2
