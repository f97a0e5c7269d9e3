from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from chebknot.chebgen import (
    ChebParams,
    cheb_closed_form,
    cheb_recurrence,
    cheb_sequence,
    connection_first_second,
    equidistance_delta,
    equidistant_coefficients,
    eval_double_double,
    linear_combination_form,
    second_kind_basis,
    seed_pair,
    trig_crosscheck,
)
from chebknot.errors import IndexOutOfRange
from chebknot.ratpoly import Polynomial
from golden import TABLES, P

ks = st.integers(1, 10)
hs = st.integers(1, 10)
ns = st.integers(0, 30)


@pytest.mark.parametrize("kh", sorted(TABLES))
def test_golden_tables(kh):
    k, h = kh
    assert list(cheb_sequence(k, h, 5)) == [P(t) for t in TABLES[kh]]


@pytest.mark.parametrize(
    "k, h, n, expected",
    [
        (1, 1, 5, {5: 16, 3: -20, 1: 5}),
        (2, 2, 4, {4: 1, 2: -3, 0: 1}),
        (1, 3, 4, {4: Fraction(8, 27), 2: Fraction(-8, 3), 0: 3}),
        (3, 1, 5, {5: 48, 3: -44, 1: 7}),
        (3, 2, 5, {5: 1, 3: -3, 1: 1}),
        (4, 1, 5, {5: 64, 3: -56, 1: 8}),
        (1, 1, 0, {0: 1}),
    ],
)
def test_cheb_recurrence_examples(k, h, n, expected):
    assert cheb_recurrence(ChebParams(k, h, n)) == P(expected)


def test_params_validated():
    for bad in [(0, 1, 1), (1, 0, 1), (1, 1, -1)]:
        with pytest.raises(ValueError):
            ChebParams(*bad)


def test_second_kind_basis_examples():
    assert second_kind_basis(2, 5) == P({5: 1, 3: -4, 1: 3})
    assert second_kind_basis(3, 2) == P({2: Fraction(4, 9), 0: -1})
    for h in (1, 2, 7):
        assert second_kind_basis(h, -1) == Polynomial()
        assert second_kind_basis(h, -2) == P({0: -1})
    with pytest.raises(IndexOutOfRange):
        second_kind_basis(1, -3)


def test_seed_pair_examples():
    s = seed_pair(1, 1)
    assert (s.A, s.B) == (1, 1)
    s = seed_pair(3, 2)
    assert (s.A, s.B) == (0, 1)
    s = seed_pair(1, 3)
    assert (s.A, s.B) == (3, 1)


def test_equidistant_coefficients_examples():
    for h in (1, 2, 5):
        ab = equidistant_coefficients(1, h)
        assert (ab.alpha, ab.beta) == (Fraction(h, 2), Fraction(-h, 2))
        ab = equidistant_coefficients(2, h)
        assert (ab.alpha, ab.beta) == (1, 0)
    ab = equidistant_coefficients(3, 1)
    assert (ab.alpha, ab.beta) == (Fraction(3, 2), Fraction(1, 2))


@given(ks, hs)
def test_equidistant_sum(k, h):
    ab = equidistant_coefficients(k, h)
    assert ab.alpha + ab.beta == k - 1
    # affine in k between the k = 1, 2 anchors
    a1, a2 = equidistant_coefficients(1, h), equidistant_coefficients(2, h)
    assert ab.alpha == a1.alpha + (a2.alpha - a1.alpha) * (k - 1)
    assert ab.beta == a1.beta + (a2.beta - a1.beta) * (k - 1)


def test_closed_form_examples():
    assert cheb_closed_form(ChebParams(1, 2, 2)) == P({2: 1, 0: -2})
    assert cheb_closed_form(ChebParams(3, 2, 2)) == P({2: 1})
    for h in (1, 3):
        for n in range(6):
            assert cheb_closed_form(ChebParams(2, h, n)) == second_kind_basis(h, n)


def test_linear_combination_examples():
    assert linear_combination_form(ChebParams(4, 2, 5)) == P({5: 1, 3: -2, 1: -1})
    for h in (1, 4):
        for n in range(6):
            assert linear_combination_form(ChebParams(1, h, n)) == cheb_sequence(1, h, n)[n]
            assert linear_combination_form(ChebParams(2, h, n)) == cheb_sequence(2, h, n)[n]


@given(ks, hs, ns)
def test_three_constructions_agree(k, h, n):
    p = ChebParams(k, h, n)
    assert cheb_recurrence(p) == cheb_closed_form(p) == linear_combination_form(p)


def test_connection_examples():
    assert connection_first_second(1, 0).passed
    assert connection_first_second(2, 3).passed
    assert connection_first_second(3, 5).passed
    # both sides of (h=3, n=5) recomputed from the table entries
    t5 = P({5: Fraction(16, 81), 3: Fraction(-20, 9), 1: 5})
    v5 = P({5: Fraction(32, 243), 3: Fraction(-32, 27), 1: 2})
    v3 = P({3: Fraction(8, 27), 1: Fraction(-4, 3)})
    assert t5 * 2 == (v5 - v3) * 3


def test_equidistance_examples():
    assert equidistance_delta(1, 1, 1) == P({1: 1}) == equidistance_delta(2, 1, 1)
    d = P({5: 16, 3: -12, 1: 1})
    assert equidistance_delta(1, 1, 5) == d == equidistance_delta(2, 1, 5)
    for h in (1, 2, 3, 6):
        for k in range(1, 6):
            assert equidistance_delta(k, h, 0) == P({0: 1 - h})


@given(st.integers(1, 9), hs, ns)
def test_equidistance_independent_of_k(k, h, n):
    assert equidistance_delta(k, h, n) == equidistance_delta(1, h, n)


@pytest.mark.parametrize("h", [1, 2, 3, 7])
@pytest.mark.parametrize("n", [0, 1, 4, 9, 20])
def test_coefficients_affine_in_k(h, n):
    c1 = cheb_sequence(1, h, n)[n]
    c2 = cheb_sequence(2, h, n)[n]
    for k in range(3, 11):
        ck = cheb_sequence(k, h, n)[n]
        width = max(len(c1), len(c2), len(ck))
        for i in range(width):
            a, b = c1.coefficient(i), c2.coefficient(i)
            assert ck.coefficient(i) == a + (b - a) * (k - 1)


@given(ks, hs, st.integers(1, 40))
def test_degree_parity_leading(k, h, n):
    p = cheb_recurrence(ChebParams(k, h, n))
    s = seed_pair(k, h)
    assert p.is_even_or_odd()
    assert all(c == 0 for i, c in enumerate(p.coeffs) if (i - n) % 2)
    if s.B != 0:
        assert p.degree == n
        assert p.leading_coefficient() == s.B * Fraction(2, h) ** (n - 1)


def test_double_double_beats_float_horner():
    p = cheb_sequence(1, 1, 30)[30]
    theta = np.linspace(0.1, np.pi - 0.1, 200)
    exact = np.cos(30 * theta)
    assert np.max(np.abs(eval_double_double(p, np.cos(theta)) - exact)) < 1e-12


@pytest.mark.parametrize("k, h, n", [(1, 1, 5), (3, 3, 7)])
def test_trig_crosscheck_examples(k, h, n):
    assert trig_crosscheck(ChebParams(k, h, n), 1000) < 1e-9


def test_trig_crosscheck_linear_case():
    assert trig_crosscheck(ChebParams(2, 2, 1), 17) < 1e-15
