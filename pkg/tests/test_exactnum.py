from fractions import Fraction
from math import comb, factorial as int_factorial

import pytest
from hypothesis import given, strategies as st

from hypinv.exactnum import (
    I,
    ONE,
    ZERO,
    GaussianRational,
    Rational,
    as_gaussian,
    binomial,
    factorial,
    format_rational,
    parse_rational,
    pochhammer,
)
from hypinv.oracles import naive_rising

small_int = st.integers(min_value=-20, max_value=20)
small_den = st.integers(min_value=1, max_value=12)
fractions = st.builds(Fraction, small_int, small_den)
gaussians = st.builds(lambda re, im: GaussianRational(re, im), fractions, fractions)
nonzero_gaussians = gaussians.filter(lambda g: not g.is_zero())


def G(re, im=0):
    return GaussianRational(Fraction(re), Fraction(im))


# -- rationals ----------------------------------------------------------------


@pytest.mark.parametrize(
    "text, expected",
    [("3/6", Fraction(1, 2)), ("-4", Fraction(-4)), ("0/5", Fraction(0)), (" 7/21 ", Fraction(1, 3))],
)
def test_parse_rational_canonical(text, expected):
    r = parse_rational(text)
    assert (r.numerator, r.denominator) == (expected.numerator, expected.denominator)


@pytest.mark.parametrize("text", ["1/0", "1.5", "", "a/b", "1/-2", "--1"])
def test_parse_rational_rejects(text):
    with pytest.raises(ValueError):
        parse_rational(text)


def test_format_rational_roundtrip():
    for text in ["0", "-3", "5/7", "-22/9"]:
        assert format_rational(parse_rational(text)) == text


@given(fractions)
def test_canonical_form(q):
    g = GaussianRational(q)
    assert g.re.denominator > 0
    assert g.re.denominator == q.denominator and g.re.numerator == q.numerator


def test_floats_and_bools_rejected():
    with pytest.raises(TypeError):
        GaussianRational(0.5)
    with pytest.raises(TypeError):
        GaussianRational(True)


def test_json_roundtrip():
    g = GaussianRational("3/4", "-1/2")
    assert g.to_json() == ["3/4", "-1/2"]
    assert GaussianRational.from_json(g.to_json()) == g
    assert GaussianRational.from_json("5/3") == G(Fraction(5, 3))
    assert as_gaussian(["1", "2"]) == G(1, 2)


# -- field axioms -------------------------------------------------------------


def test_i_squared():
    assert I * I == -ONE


def test_equality_with_plain_rationals():
    assert GaussianRational(3) == 3
    assert GaussianRational("1/2") == Rational(1, 2)
    assert hash(GaussianRational(3)) == hash(3)
    assert GaussianRational(1, 1) != 1


def test_division_by_zero_raises():
    with pytest.raises(ZeroDivisionError):
        G(1, 1) / ZERO
    with pytest.raises(ZeroDivisionError):
        ZERO ** -1


@given(gaussians, gaussians)
def test_additive_roundtrip(a, b):
    assert (a + b) - b == a


@given(gaussians, nonzero_gaussians)
def test_multiplicative_roundtrip(a, b):
    assert (a * b) / b == a


@given(gaussians, gaussians, gaussians)
def test_distributive(a, b, c):
    assert a * (b + c) == a * b + a * c


@given(nonzero_gaussians, st.integers(min_value=-4, max_value=4))
def test_integer_powers(a, k):
    expected = ONE
    for _ in range(abs(k)):
        expected = expected * a
    if k < 0:
        expected = ONE / expected
    assert a**k == expected


@given(gaussians)
def test_conjugate_product_is_real(a):
    assert (a * a.conjugate()).is_real()


# -- pochhammer, factorial, binomial ------------------------------------------


@pytest.mark.parametrize(
    "gamma, k, expected",
    [("5/2", 0, 1), (2, 3, 24), (-3, 5, 0)],
)
def test_pochhammer_examples(gamma, k, expected):
    assert pochhammer(as_gaussian(gamma), k) == expected


def test_pochhammer_negative_k_rejected():
    with pytest.raises(ValueError):
        pochhammer(ONE, -1)


def test_pochhammer_long_products():
    # past the memoized range the loop path takes over
    assert pochhammer(ONE, 300) == int_factorial(300)


@given(gaussians, st.integers(0, 12), st.integers(0, 12))
def test_pochhammer_splits(gamma, j, k):
    assert pochhammer(gamma, j + k) == pochhammer(gamma, j) * pochhammer(gamma + j, k)


@given(gaussians, st.integers(0, 15))
def test_pochhammer_matches_naive_product(gamma, k):
    assert pochhammer(gamma, k) == naive_rising(gamma, k)


@pytest.mark.parametrize("n, k, expected", [(5, 0, 1), (5, 2, 10), (7, 7, 1)])
def test_binomial_examples(n, k, expected):
    assert binomial(n, k) == expected


@given(st.integers(0, 30), st.integers(0, 30))
def test_binomial_against_math_comb(n, k):
    if k > n:
        with pytest.raises(ValueError):
            binomial(n, k)
    else:
        assert binomial(n, k) == comb(n, k)


@given(st.integers(0, 25), st.integers(0, 25))
def test_binomial_pochhammer_relation(n, k):
    if k > n:
        return
    assert (-1) ** k * binomial(n, k) == pochhammer(GaussianRational(-n), k) / factorial(k)


def test_factorial():
    assert [factorial(n) for n in range(6)] == [1, 1, 2, 6, 24, 120]
