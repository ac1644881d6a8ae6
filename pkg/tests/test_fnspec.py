import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from harmshear.fnspec import FunctionSpecError, HarmonicText, ShearText, build_map, eval_number, parse_function, parse_rational
from harmshear.shearing import CatalogId


def test_catalog_forms():
    assert parse_function("harmonic_koebe") == CatalogId("harmonic_koebe", {})
    cid = parse_function("f_a_lambda(a=1+sqrt(2), lambda=i)")
    assert cid.name == "f_a_lambda"
    assert cid.params["a"] == pytest.approx(1 + math.sqrt(2))
    assert cid.params["lambda"] == 1j
    assert parse_function("f1(n=3)").params["n"] == 3


def test_numbers():
    assert eval_number("pi/2") == pytest.approx(math.pi / 2)
    assert eval_number("exp(i*pi)") == pytest.approx(-1)
    assert eval_number("0.5i") == 0.5j
    assert eval_number("2**-1") == 0.5
    assert isinstance(eval_number("1+0j"), float)


@given(st.floats(-1e3, 1e3, allow_nan=False))
def test_number_roundtrip(x):
    assert eval_number(repr(x)) == x


def test_shear_form():
    s = parse_function("shear phi=[0,1]/[1,-2,1] omega=[0,1] theta=pi")
    assert isinstance(s, ShearText) and s.theta == pytest.approx(math.pi)
    assert s.phi(0.5) == pytest.approx(2.0)
    f = build_map("shear phi=koebe omega=[0,1]", 10)
    assert f.a(2) == pytest.approx(2.5) and f.b(2) == pytest.approx(0.5)


def test_harmonic_form():
    h = parse_function("harmonic h=[0,1,1] g=[0,0,1]")
    assert isinstance(h, HarmonicText)
    f = build_map("harmonic h=[0,1,1] g=[0,0,1]", 8)
    assert f(0.5) == pytest.approx(0.75 + 0.25)


def test_rational_parse():
    r = parse_rational("[1]/[1,-1]")
    assert r(0.5) == pytest.approx(2)
    assert np.allclose(r.num, [1])


@pytest.mark.parametrize("text,pos", [
    ("f1(n=)", 5),
    ("f1(n=3", 2),
    ("f1(3)", 3),
    ("f1(n=1.5)", 2),
    ("shear phi=[0,1] omega=[0,1] beta=2", 28),
    ("shear phi=[0,1]", 15),
    ("shear phi=[0,1]/[0] omega=[0]", 16),
    ("shear phi=0,1 omega=[0]", 10),
    ("9lives", 0),
])
def test_errors_carry_position(text, pos):
    with pytest.raises(FunctionSpecError) as exc:
        parse_function(text)
    assert exc.value.position == pos
    assert exc.value.reason


def test_duplicate_parameter():
    with pytest.raises(FunctionSpecError):
        parse_function("f1(n=2, n=3)")


def test_no_code_execution():
    with pytest.raises(FunctionSpecError):
        eval_number("__import__('os')")
