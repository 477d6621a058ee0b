import json

import pytest

from hypertoric.cli import EXIT_INPUT_ERROR, EXIT_OK, EXIT_VERIFY_FAILED, InputError, main, parse_model


def write(tmp_path, name, payload):
    path = tmp_path / name
    path.write_text(json.dumps(payload))
    return str(path)


@pytest.fixture
def tp12(tmp_path):
    return write(tmp_path, "tp12.json", {"A": [[1, 2]], "theta": [1], "kind": "hypertoric"})


@pytest.fixture
def bmu3(tmp_path):
    return write(tmp_path, "bmu3.json", {"A": [[0, 1, 2, 3]], "kind": "direct", "unstable": [[4]]})


@pytest.fixture
def nongeneric(tmp_path):
    return write(
        tmp_path, "nongeneric.json",
        {"A": [[1, 0, 1], [0, 1, 1]], "theta": [1, 0], "kind": "lawrence"},
    )


def test_parse_model_valid(tp12):
    model = parse_model(tp12)
    assert model.kind == "hypertoric" and model.d == 1 and model.n == 2


def test_parse_model_nongeneric_names_witness(nongeneric):
    with pytest.raises(InputError) as err:
        parse_model(nongeneric)
    assert "basis {1,3}, lambda_3 = 0" in str(err.value)


def test_parse_model_rank_deficient(tmp_path):
    path = write(tmp_path, "bad.json", {"A": [[0, 0]], "theta": [1]})
    with pytest.raises(InputError, match="rank deficient"):
        parse_model(path)


def test_parse_model_malformed_json(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    with pytest.raises(InputError, match="malformed JSON"):
        parse_model(str(path))


def test_inertia_subcommand(bmu3, capsys):
    assert main(["inertia", "--input", bmu3]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data == [
        {"v": ["0"], "order": 1, "fixed": [1, 2, 3, 4], "age": "0"},
        {"v": ["1/3"], "order": 3, "fixed": [1, 4], "age": "1"},
        {"v": ["2/3"], "order": 3, "fixed": [1, 4], "age": "1"},
    ]


def test_chowring_subcommand(bmu3, capsys):
    assert main(["chowring", "--input", bmu3, "--degree", "3"]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["relations"] == ["3*t1"]
    assert data["graded"]["1"] == "Z/3"


def test_orbifold_table_subcommand(bmu3, capsys):
    assert main(["orbifold-table", "--input", bmu3, "--degree", "4"]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    products = {(tuple(p["g1"]), tuple(p["g2"])): p for p in data["products"]}
    assert products[(("1/3",), ("2/3",))]["poly"] == "2*t1^2"
    assert products[(("1/3",), ("2/3",))]["target"] == ["0"]


def test_verify_subcommand_pass(tp12, capsys):
    assert main(["verify", "--input", tp12, "--degree", "5", "--format", "text"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "obstruction-pullback: pass; orbifold-iso: pass" in out


def test_verify_rejects_nongeneric_with_exit_2(nongeneric, capsys):
    assert main(["verify", "--input", nongeneric]) == EXIT_INPUT_ERROR
    err = capsys.readouterr().err
    assert "basis {1,3}" in err


def test_chart_check_subcommand(tp12, capsys):
    assert main(["chart-check", "--input", tp12, "--samples", "20", "--seed", "5"]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["ok"] and len(data["charts"]) == 2


def test_sre_check_fail_path(tmp_path, capsys):
    path = write(tmp_path, "sre.json", {"order": 2, "normal_weights": [[-1], [-1]]})
    assert main(["sre-check", "--input", path]) == EXIT_VERIFY_FAILED
    data = json.loads(capsys.readouterr().out)
    assert data["condition_iii"] is False
    assert data["violations"]


def test_sre_check_on_model(tp12, capsys):
    assert main(["sre-check", "--input", tp12]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["condition_iii"] is True


def test_analyze_subcommand(tp12, capsys):
    assert main(["analyze", "--input", tp12]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["coords"] == ["x1", "x2", "y1", "y2"]
    assert data["minimal_unstable"] == [["x1", "x2"]]


def test_output_is_deterministic(bmu3, capsys):
    main(["orbifold-table", "--input", bmu3, "--degree", "4", "--seed", "9"])
    first = capsys.readouterr().out
    main(["orbifold-table", "--input", bmu3, "--degree", "4", "--seed", "9"])
    second = capsys.readouterr().out
    assert first == second


def test_bad_flags_exit_2(tp12, capsys):
    assert main(["chowring", "--input", tp12, "--degree", "0"]) == EXIT_INPUT_ERROR
    assert main(["chart-check", "--input", tp12, "--samples", "0"]) == EXIT_INPUT_ERROR
