import json

import pytest

from grasscalc.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_lr(capsys):
    code, out = run(capsys, "lr", "--mu", "2,2", "--alpha", "1", "--beta", "1")
    assert code == 0 and out.strip() == "0"
    code, out = run(capsys, "lr", "--mu", "3", "--alpha", "1", "--beta", "2", "--format", "json")
    assert code == 0 and json.loads(out) == {"coefficient": 1}


def test_bott(capsys):
    code, out = run(capsys, "bott", "--n", "2", "--k", "1", "--r-label", "-2", "--q-label", "0")
    assert code == 0
    assert json.loads(out) == {"vanishes": False, "degree": 1, "weight": [-1, -1]}


def test_quiver_json_deterministic(capsys):
    code, out1 = run(capsys, "quiver", "--family", "kapranov", "--n", "4", "--r", "2", "--format", "json")
    assert code == 0
    data = json.loads(out1)
    assert len(data["vertices"]) == 6
    _, out2 = run(capsys, "quiver", "--family", "kapranov", "--n", "4", "--r", "2", "--format", "json")
    assert out1 == out2


def test_quiver_dot_and_seed_order(capsys):
    code, out = run(capsys, "quiver", "--family", "beilinson", "--n", "3", "--format", "dot")
    assert code == 0 and out.count("label=\"[") == 3
    code, out = run(
        capsys, "quiver", "--family", "sym", "--n", "3", "--r", "2",
        "--seed-order", "2,0,1", "--format", "json",
    )
    assert code == 0
    assert json.loads(out)["vertices"][0] == [1, 1]


def test_ext(capsys):
    code, out = run(
        capsys, "ext", "--family", "sym", "--n", "4", "--r", "2",
        "--alpha", "1,1", "--beta", "2", "--t-max", "2",
    )
    assert code == 0
    data = json.loads(out)
    assert data["layers"] == [
        {"rank": 4, "t": 2, "terms": [{"mult": 1, "weight": [1, 1, 0, 0]}]}
    ]


def test_plethysm(capsys):
    code, out = run(capsys, "plethysm", "--delta", "1,1,1", "--s", "2", "--rank", "6")
    assert code == 0
    data = json.loads(out)
    assert data["terms"] == [
        {"weight": [2, 2, 1, 1, 0, 0], "mult": 1},
        {"weight": [1, 1, 1, 1, 1, 1], "mult": 1},
    ]
    code, out = run(capsys, "plethysm", "--delta", "2", "--s", "2", "--hooks")
    assert json.loads(out)["terms"] == [{"weight": [3, 1], "mult": 1}]


def test_hilbert_matrix_and_inverse(capsys):
    code, out = run(capsys, "hilbert-matrix", "--family", "sym", "--n", "3", "--r", "2", "--format", "csv")
    assert code == 0
    first = out.splitlines()[0]
    assert first.split(",")[0] == '"(1+t^2+t^4)/(1-t^2)^5"'
    code, out = run(
        capsys, "hilbert-matrix", "--family", "sym", "--n", "3", "--r", "2",
        "--invert", "--format", "csv",
    )
    assert code == 0
    assert out.splitlines()[0].split(",")[0] == '"1+3t^2-3t^4-t^6"'


def test_resolution(capsys):
    code, out = run(
        capsys, "resolution", "--family", "sym", "--n", "3", "--r", "2",
        "--vertex", "0", "--steps", "6", "--format", "text",
    )
    assert code == 0
    assert "step 5: 1x[2, 2, 2](P0)" in out


def test_presentation(capsys):
    code, out = run(capsys, "presentation", "--m", "3", "--n", "3", "--r", "2", "--alpha", "1", "--i-max", "1")
    assert code == 0
    data = json.loads(out)
    assert data["0"] == [{"g_irrep": [1], "f_weight": [0, 0, 0], "mult": 1, "degree": 1}]
    assert data["1"] == [{"g_irrep": [1, 1, 1], "f_weight": [0, -1, -1], "mult": 1, "degree": 3}]


def test_mcm_check(capsys):
    code, out = run(
        capsys, "mcm-check", "--family", "skew", "--n", "4", "--r", "2", "--max-degree", "10",
    )
    assert code == 0
    data = json.loads(out)
    assert data["criterion"]["kind"] == "criterion_false"
    assert data["search"]["kind"] == "witness"


def test_usage_error_exit_2():
    with pytest.raises(SystemExit) as err:
        main(["quiver", "--family", "nope", "--n", "3"])
    assert err.value.code == 2


def test_computation_error_exit_1(capsys):
    code = main(["quiver", "--family", "rational_curve", "--n", "3", "--d", "2"])
    assert code == 1
    assert "error" in capsys.readouterr().err
