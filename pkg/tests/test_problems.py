import pytest

from rednum import ProblemError, parse_problem


def _write(tmp_path, text):
    path = tmp_path / "problem.pf"
    path.write_text(text)
    return str(path)


MINIMAL = """\
field 32003
vars x, y
ideal I1: x^2
module M: quotient 0
"""


def test_minimal_file(tmp_path):
    pf = parse_problem(_write(tmp_path, MINIMAL))
    assert pf.ring.modulus == 32003
    assert pf.ring.names == ("x", "y")
    assert pf.swept_names == ["I1"]
    assert pf.K.is_zero_ideal()


def test_field_defaults_to_32003(tmp_path):
    pf = parse_problem(_write(tmp_path, "vars x\nideal I: x^2\nmodule M: quotient 0\n"))
    assert pf.ring.modulus == 32003


def test_comments_and_blank_lines(tmp_path):
    text = "# header\n\nfield 65537  # inline\nvars x,y\nideal I: x^3\nmodule M: quotient 0\n"
    pf = parse_problem(_write(tmp_path, text))
    assert pf.ring.modulus == 65537


def test_example_family_file(tmp_path):
    text = """\
vars x1, x2
ideal I: x1^2, x2^3
ideal K: x2
module M: quotient K
"""
    pf = parse_problem(_write(tmp_path, text))
    assert pf.swept_names == ["I"]
    assert pf.ideals["I"].min_degrees() == (2, 3)
    assert not pf.K.is_zero_ideal()


def test_inhomogeneous_generator_reports_line(tmp_path):
    text = "vars x, y\nideal I: x^2 + y\nmodule M: quotient 0\n"
    with pytest.raises(ProblemError, match="line 2"):
        parse_problem(_write(tmp_path, text))


def test_non_prime_modulus(tmp_path):
    with pytest.raises(ProblemError, match="not prime"):
        parse_problem(_write(tmp_path, "field 32004\nvars x\nmodule M: quotient 0\n"))


def test_unknown_ideal_in_module(tmp_path):
    text = "vars x\nideal I: x^2\nmodule M: quotient J\n"
    with pytest.raises(ProblemError, match="unknown ideal"):
        parse_problem(_write(tmp_path, text))


def test_duplicate_ideal_name(tmp_path):
    text = "vars x\nideal I: x^2\nideal I: x^3\nmodule M: quotient 0\n"
    with pytest.raises(ProblemError, match="duplicate ideal"):
        parse_problem(_write(tmp_path, text))


def test_missing_module(tmp_path):
    with pytest.raises(ProblemError, match="missing module"):
        parse_problem(_write(tmp_path, "vars x\nideal I: x^2\n"))


def test_missing_vars(tmp_path):
    with pytest.raises(ProblemError, match="missing vars"):
        parse_problem(_write(tmp_path, "field 32003\nmodule M: quotient 0\n"))


def test_unknown_statement_reports_line(tmp_path):
    with pytest.raises(ProblemError, match="line 2"):
        parse_problem(_write(tmp_path, "vars x\nring y\nmodule M: quotient 0\n"))


def test_field_after_vars_rejected(tmp_path):
    with pytest.raises(ProblemError, match="before vars"):
        parse_problem(_write(tmp_path, "vars x\nfield 32003\nmodule M: quotient 0\n"))
