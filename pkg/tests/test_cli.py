import json

import pytest

from rednum.cli import main, read_sweep_csv

EXAMPLE_FAMILY = """\
field 32003
vars x1, x2
ideal I: x1^2, x2^3
ideal K: x2
module M: quotient K
"""

TWO_PRINCIPAL = """\
field 32003
vars x, y
ideal I1: x^2
ideal I2: y^3
module M: quotient 0
"""


@pytest.fixture
def example_file(tmp_path):
    path = tmp_path / "example.pf"
    path.write_text(EXAMPLE_FAMILY)
    return str(path)


@pytest.fixture
def two_principal_file(tmp_path):
    path = tmp_path / "twop.pf"
    path.write_text(TWO_PRINCIPAL)
    return str(path)


def test_rnum_prints_value_first(example_file, capsys):
    assert main(["rnum", example_file, "--target", "quotient", "--a", "3"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "5"
    assert "seed: 0" in out
    assert any(line.startswith("witness_seed: ") for line in out)


def test_rnum_power(example_file, capsys):
    assert main(["rnum", example_file, "--target", "power", "--a", "2"]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "4"


def test_gb_output(example_file, capsys):
    assert main(["gb", example_file, "--ideal", "I"]) == 0
    assert capsys.readouterr().out == "x1^2\nx2^3\n"


def test_hilbert_output(example_file, capsys):
    assert main(["hilbert", example_file]) == 0
    out = capsys.readouterr().out
    assert "numerator: 1 -1" in out
    assert "dimension: 1" in out
    assert "a_invariant: infinite" in out


def test_hilbert_of_ideal(example_file, capsys):
    assert main(["hilbert", example_file, "--of", "I"]) == 0
    out = capsys.readouterr().out
    assert "dimension: 0" in out
    assert "a_invariant: 3" in out  # R/(x1^2, x2^3) tops out at x1*x2^2


def test_betti_output(tmp_path, capsys):
    path = tmp_path / "p.pf"
    path.write_text("vars x, y\nideal K: x^2, x*y, y^3\nmodule M: quotient K\n")
    assert main(["betti", str(path), "--maxdeg", "6"]) == 0
    out = capsys.readouterr().out
    assert "# i j beta" in out
    assert "1 2 2" in out
    assert "2 4 1" in out
    assert "regularity: 2" in out
    assert "certified: yes" in out


def test_sweep_fit_pipeline(two_principal_file, tmp_path, capsys):
    csv_path = str(tmp_path / "sweep.csv")
    assert main([
        "sweep", two_principal_file, "--caps", "4,4", "--trials", "3",
        "--seed", "0", "--out", csv_path,
    ]) == 0
    out = capsys.readouterr().out
    assert "16 cells" in out
    assert "stationary: yes" in out

    meta, rows = read_sweep_csv(csv_path)
    assert meta["caps"] == [4, 4]
    assert meta["D"] == {"I1": [2], "I2": [3]}
    assert len(rows) == 16

    json_path = str(tmp_path / "model.json")
    assert main([
        "fit", "--in", csv_path, "--column", "r_quotient", "--slopes", "D0",
        "--require-one-all-d", "--out", json_path,
    ]) == 0
    model = json.loads(open(json_path).read())
    assert model["pieces"] == [{"intercept": -1, "slopes": [2, 3]}]
    assert model["threshold"] == [1, 1]
    assert model["residual"] == 0
    assert model["source_seed"] == 0


def test_sweep_output_is_byte_stable(two_principal_file, tmp_path):
    a, b = str(tmp_path / "a.csv"), str(tmp_path / "b.csv")
    for path in (a, b):
        assert main([
            "sweep", two_principal_file, "--caps", "2,2", "--trials", "2",
            "--seed", "5", "--out", path,
        ]) == 0
    assert open(a, "rb").read() == open(b, "rb").read()


def test_sweep_rejects_zero_caps(two_principal_file, tmp_path, capsys):
    code = main([
        "sweep", two_principal_file, "--caps", "0,0",
        "--out", str(tmp_path / "x.csv"),
    ])
    assert code == 1
    assert "caps must be >= 1" in capsys.readouterr().err


def test_fit_not_yet_asymptotic_exit_code(tmp_path, capsys):
    csv_path = tmp_path / "bad.csv"
    lines = [
        "# rednum-sweep v1",
        "# p=32003",
        "# vars=x,y",
        "# ideals=I1",
        "# D_I1=2",
        "# caps=4",
        "# trials=1",
        "# seed=0",
        "# with_reg=no",
        "a1,dim_power,dim_quotient,r_power,r_quotient,witness_seed,flags",
    ]
    for a in range(1, 5):
        lines.append(f"{a},2,1,{a * a},{a * a},0,")  # quadratic: no linear fit
    csv_path.write_text("\n".join(lines) + "\n")
    assert main(["fit", "--in", str(csv_path), "--column", "r_power"]) == 2
    assert "not-yet-asymptotic" in capsys.readouterr().err


def test_rho_command(two_principal_file, tmp_path, capsys):
    csv_path = str(tmp_path / "sweep.csv")
    main(["sweep", two_principal_file, "--caps", "3,3", "--trials", "2",
          "--seed", "0", "--out", csv_path])
    capsys.readouterr()
    assert main(["rho", "--in", csv_path, "--column", "r_power"]) == 0
    out = capsys.readouterr().out
    assert "axis 1: slope=2" in out
    assert "axis 2: slope=3" in out


def test_recursion_check_command(two_principal_file, capsys):
    assert main(["recursion-check", two_principal_file, "--caps", "3,3"]) == 0
    out = capsys.readouterr().out
    assert "cells_checked: 12" in out
    assert "mismatches: 0" in out


def test_problem_error_exit_code(tmp_path, capsys):
    path = tmp_path / "bad.pf"
    path.write_text("vars x\nideal I: x + x^2\nmodule M: quotient 0\n")
    assert main(["gb", str(path), "--ideal", "I"]) == 1
    assert "line 2" in capsys.readouterr().err


def test_usage_error_exit_code(capsys):
    assert main(["fit"]) == 1  # missing required --in
    capsys.readouterr()


def test_zero_module_rnum(tmp_path, capsys):
    path = tmp_path / "p.pf"
    path.write_text("vars x, y\nideal I: x\nideal K: x\nmodule M: quotient K\n")
    assert main(["rnum", str(path), "--target", "power", "--a", "1"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "zero-module"
