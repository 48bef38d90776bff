import random

import pytest

from oracles import random_homogeneous
from rednum import ParseError, PrimeField, Ring
from rednum.polyring import grevlex_key

P = 32003


def test_prime_field_rejects_composite():
    with pytest.raises(ValueError):
        PrimeField(32004)
    assert PrimeField(2).modulus == 2
    assert PrimeField(65537).modulus == 65537


def test_prime_field_inverse():
    f = PrimeField(P)
    for a in (1, 2, 17, P - 1):
        assert f.inv(a) * a % P == 1
    with pytest.raises(ZeroDivisionError):
        f.inv(0)


def test_parse_monomial(R2):
    f = R2.parse("x^2")
    assert f.terms == {(2, 0): 1}
    assert f.degree == 2


def test_parse_rejects_inhomogeneous(R2):
    with pytest.raises(ParseError):
        R2.parse("x^2 + y")


def test_parse_coefficient(R2):
    f = R2.parse("3*x*y")
    assert f.terms == {(1, 1): 3}


def test_parse_unknown_variable(R2):
    with pytest.raises(ParseError):
        R2.parse("x + z")


def test_parse_malformed(R2):
    for bad in ("x^", "x *", "* x", "x + ", "x ^ y", "", "x?y"):
        with pytest.raises(ParseError):
            R2.parse(bad)


def test_parse_merges_and_cancels(R2):
    assert R2.parse("x - x").is_zero()
    assert R2.parse("x + x").terms == {(1, 0): 2}
    assert R2.parse("32003*x").is_zero()


def test_add_additive_inverse(R2):
    x, y = R2.variable(0), R2.variable(1)
    f = (x + y) + x.scaled(P - 1)
    assert f == y


def test_add_identity(R2):
    f = R2.parse("x^2 + 5*x*y")
    assert f + R2.zero() == f
    assert R2.zero() + f == f


def test_add_direct(R2):
    f = R2.parse("x^2 + y^2") + R2.parse("x^2")
    assert f == R2.parse("2*x^2 + y^2")


def test_add_degree_mismatch(R2):
    with pytest.raises(ValueError):
        R2.parse("x") + R2.parse("x^2")


def test_mul_variables(R2):
    f = R2.variable(0) * R2.variable(1)
    assert f.terms == {(1, 1): 1}
    assert f.degree == 2


def test_mul_square(R2):
    s = R2.parse("x + y")
    assert s * s == R2.parse("x^2 + 2*x*y + y^2")


def test_mul_annihilator(R2):
    f = R2.parse("x^2 + y^2")
    assert (f * R2.zero()).is_zero()


def test_grevlex_refines_degree(R2):
    rng = random.Random(11)
    for _ in range(200):
        u = tuple(rng.randrange(5) for _ in range(2))
        v = tuple(rng.randrange(5) for _ in range(2))
        if sum(u) < sum(v):
            assert grevlex_key(u) < grevlex_key(v)


def test_grevlex_total_order():
    rng = random.Random(13)
    mons = [tuple(rng.randrange(4) for _ in range(3)) for _ in range(60)]
    for u in mons:
        for v in mons:
            if u != v:
                assert (grevlex_key(u) < grevlex_key(v)) != (grevlex_key(v) < grevlex_key(u))
    for u in mons:
        for v in mons:
            for w in mons:
                if grevlex_key(u) < grevlex_key(v) < grevlex_key(w):
                    assert grevlex_key(u) < grevlex_key(w)


def test_grevlex_classic_comparison(R3):
    # within degree 2 in 3 variables: x^2 > xy > y^2 > xz > yz > z^2
    expected = [(2, 0, 0), (1, 1, 0), (0, 2, 0), (1, 0, 1), (0, 1, 1), (0, 0, 2)]
    got = R3.monomials_of_degree(2)
    assert got == expected


def test_ring_axioms_random(R3):
    rng = random.Random(7)
    for _ in range(40):
        d = rng.randrange(0, 4)
        f = random_homogeneous(R3, d, rng)
        g = random_homogeneous(R3, d, rng)
        h = random_homogeneous(R3, rng.randrange(0, 4), rng)
        assert f + g == g + f
        assert f * h == h * f
        assert (f + g) * h == f * h + g * h
        assert (f * g) * h == f * (g * h)


def test_parse_print_roundtrip(R3):
    rng = random.Random(23)
    for _ in range(60):
        f = random_homogeneous(R3, rng.randrange(0, 5), rng)
        assert R3.parse(str(f)) == f


def test_print_canonical(R2):
    assert str(R2.zero()) == "0"
    assert str(R2.one()) == "1"
    assert str(R2.parse("y^2 + x^2 + 7*x*y")) == "x^2 + 7*x*y + y^2"


def test_linear_form(R3):
    f = R3.linear_form([1, 2, 3])
    assert f.degree == 1
    assert f.terms == {(1, 0, 0): 1, (0, 1, 0): 2, (0, 0, 1): 3}
    with pytest.raises(ValueError):
        R3.linear_form([0, 0, 0])
