import json
import re
from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from chebknot.chebgen import cheb_sequence
from chebknot.alexander import torus_n2
from chebknot.laurent import LaurentPoly
from chebknot.ratpoly import Polynomial
from chebknot.render import (
    csv_cells,
    from_json_obj,
    laurent_latex,
    laurent_text,
    poly_from_csv_cells,
    poly_latex,
    poly_text,
    to_json_obj,
)
from golden import P

big = st.fractions(max_denominator=10**30).filter(lambda f: abs(f.numerator) < 10**40)
polys = st.lists(big, max_size=8).map(Polynomial)
laurents = st.builds(LaurentPoly, st.integers(-20, 20), st.lists(big, max_size=8))

FLOAT_LITERAL = re.compile(r"\d\.\d|\de[-+]?\d")


def test_poly_text():
    assert poly_text(P({5: 16, 3: -20, 1: 5})) == "16*x^5 - 20*x^3 + 5*x"
    assert poly_text(P({5: Fraction(16, 81), 3: Fraction(-20, 9), 1: 5})) == "16/81*x^5 - 20/9*x^3 + 5*x"
    assert poly_text(P({2: 1})) == "x^2"
    assert poly_text(P({3: -1, 0: Fraction(-1, 2)})) == "-x^3 - 1/2"
    assert poly_text(Polynomial()) == "0"


def test_laurent_text():
    assert laurent_text(torus_n2(5)) == "q^2 - q + 1 - q^-1 + q^-2"
    assert laurent_text(torus_n2(4)) == "q^{3/2} - q^{1/2} + q^{-1/2} - q^{-3/2}"
    assert laurent_text(LaurentPoly()) == "0"


def test_latex_mirrors_table_style():
    p = P({5: Fraction(16, 81), 3: Fraction(-20, 9), 1: 5})
    assert poly_latex(p) == r"{16\over 81}x^{5}-{20\over 9}x^{3}+5x"
    assert laurent_latex(torus_n2(3)) == "q-1+q^{-1}"
    assert laurent_latex(torus_n2(2)) == r"q^{1\over 2}-q^{-{1\over 2}}"


def test_json_shape():
    doc = to_json_obj(P({1: Fraction(2, 3)}))
    assert doc == {"var": "x", "coeffs": [["0", "1"], ["2", "3"]]}
    doc = to_json_obj(torus_n2(2))
    assert doc == {"var": "u", "min_exp": -1, "coeffs": [["-1", "1"], ["0", "1"], ["1", "1"]]}


@given(polys)
def test_json_round_trip_poly(p):
    assert from_json_obj(json.loads(json.dumps(to_json_obj(p)))) == p


@given(laurents)
def test_json_round_trip_laurent(lp):
    assert from_json_obj(json.loads(json.dumps(to_json_obj(lp)))) == lp


@given(polys)
def test_csv_round_trip(p):
    assert poly_from_csv_cells(csv_cells(p)) == p


@given(polys, laurents)
def test_text_has_no_float_literals(p, lp):
    assert not FLOAT_LITERAL.search(poly_text(p))
    assert not FLOAT_LITERAL.search(laurent_text(lp))


def test_text_no_floats_over_tables():
    for k in range(1, 6):
        for h in range(1, 6):
            for p in cheb_sequence(k, h, 20):
                assert not FLOAT_LITERAL.search(poly_text(p))
