import math
from fractions import Fraction

import pytest
import sympy
from sympy.polys import orthopolys
from hypothesis import assume, given, settings, strategies as st

from hypinv.campaign import TAGS, run_campaign
from hypinv.errors import DegreeExceedsN, DenominatorPole, InvalidParameter
from hypinv.exactnum import I, GaussianRational, as_gaussian, factorial, pochhammer
from hypinv.oracles import naive_hypergeometric, naive_rising
from hypinv.orthopoly import IDENTITIES, FamilySpec, enumerate_538, eval_poly, verify_identity

G = GaussianRational
X = sympy.Symbol("x")
generic = st.builds(Fraction, st.integers(-20, 20), st.integers(2, 12)).filter(lambda q: q.denominator != 1)
points = st.builds(Fraction, st.integers(-20, 20), st.integers(1, 12))


def frac(value):
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


def sym(q):
    return sympy.Rational(q.numerator, q.denominator)


# -- brute-force family definitions -------------------------------------------
# Each prefactor is a naive product and the series is summed term by term.


def brute(family, p, n, x):
    x = as_gaussian(x)
    if family == "wilson":
        a, b, c, d = (as_gaussian(p[k]) for k in "abcd")
        pre = naive_rising(a + b, n) * naive_rising(a + c, n) * naive_rising(a + d, n)
        return pre * naive_hypergeometric([-n, n + a + b + c + d - 1, a + I * x, a - I * x], [a + b, a + c, a + d], 1)
    if family == "racah":
        al, be, ga, de = (as_gaussian(p[k]) for k in ("alpha", "beta", "gamma", "delta"))
        return naive_hypergeometric([-n, n + al + be + 1, -x, x + ga + de + 1], [al + 1, be + de + 1, ga + 1], 1)
    if family == "continuous-hahn":
        a, b, c, d = (as_gaussian(p[k]) for k in "abcd")
        pre = I**n * naive_rising(a + c, n) * naive_rising(a + d, n) / math.factorial(n)
        return pre * naive_hypergeometric([-n, n + a + b + c + d - 1, a + I * x], [a + c, a + d], 1)
    if family == "hahn":
        al, be, big_n = (as_gaussian(p[k]) for k in ("alpha", "beta", "N"))
        return naive_hypergeometric([-n, n + al + be + 1, -x], [al + 1, -big_n], 1)
    raise KeyError(family)


def sympy_classical(family, p, n, x):
    # sympy's polynomial constructors, bypassing its symbolic special cases
    if family == "jacobi":
        poly = orthopolys.jacobi_poly(n, sym(p["alpha"]), sym(p["beta"]), X, polys=True)
    elif family == "gegenbauer":
        poly = orthopolys.gegenbauer_poly(n, sym(p["lam"]), X, polys=True)
    elif family == "chebyshev-t":
        poly = orthopolys.chebyshevt_poly(n, X, polys=True)
    elif family == "chebyshev-u":
        poly = orthopolys.chebyshevu_poly(n, X, polys=True)
    else:
        poly = orthopolys.legendre_poly(n, X, polys=True)
    return frac(poly.eval(sym(x)))


def agree(spec, p, n, x):
    """Both evaluators give the same value, or both hit the same pole."""
    try:
        value = eval_poly(spec, n, x)
    except DenominatorPole:
        with pytest.raises(DenominatorPole):
            brute(spec.family, p, n, x)
        return
    assert value == brute(spec.family, p, n, x), (spec.family, n)


# -- examples -----------------------------------------------------------------


def test_eval_examples():
    assert eval_poly(FamilySpec("legendre"), 1, "1/3") == Fraction(1, 3)
    assert eval_poly(FamilySpec("chebyshev-t"), 2, "1/2") == Fraction(-1, 2)
    assert eval_poly(FamilySpec("jacobi", {"alpha": 0, "beta": 0}), 1, "2/5") == Fraction(2, 5)


@pytest.mark.parametrize(
    "family, params",
    [
        ("wilson", {"a": "1/2", "b": "1/3", "c": "2/5", "d": "3/7"}),
        ("racah", {"alpha": -4, "beta": "1/2", "gamma": "1/3", "delta": "2/5", "N": 3}),
        ("continuous-hahn", {"a": "1/2", "b": "1/3", "c": "2/5", "d": "3/7"}),
        ("hahn", {"alpha": "1/2", "beta": "1/3", "N": 4}),
        ("jacobi", {"alpha": "1/2", "beta": "1/3"}),
        ("gegenbauer", {"lam": "3/2"}),
        ("chebyshev-t", {}),
        ("chebyshev-u", {}),
        ("legendre", {}),
    ],
)
def test_degree_zero_is_one(family, params):
    assert eval_poly(FamilySpec(family, params), 0, "2/7") == 1


def test_family_validation():
    with pytest.raises(InvalidParameter):
        FamilySpec("gegenbauer", {"lam": 0})
    with pytest.raises(InvalidParameter):
        FamilySpec("hahn", {"alpha": 1, "beta": 1, "N": "3/2"})
    with pytest.raises(InvalidParameter):
        # two of the three Racah conditions hold at once
        FamilySpec("racah", {"alpha": -3, "beta": "1/2", "gamma": -3, "delta": "1/3", "N": 2})
    with pytest.raises(InvalidParameter):
        FamilySpec("racah", {"alpha": "1/2", "beta": "1/2", "gamma": "1/2", "delta": "1/3", "N": 2})
    with pytest.raises(InvalidParameter):
        FamilySpec("jacobi", {"alpha": 1})
    with pytest.raises(DegreeExceedsN):
        eval_poly(FamilySpec("hahn", {"alpha": "1/2", "beta": "1/3", "N": 2}), 3, 1)


def test_family_json_roundtrip():
    spec = FamilySpec("continuous-hahn", {"a": G(1, 2), "b": "1/3", "c": 0, "d": -1})
    assert FamilySpec.from_json(spec.to_json()) == spec


# -- oracle agreement ---------------------------------------------------------


@settings(max_examples=25, deadline=None)
@given(generic, generic, generic, generic, points)
def test_wilson_and_continuous_hahn_brute_force(a, b, c, d, x):
    p = {"a": a, "b": b, "c": c, "d": d}
    for family in ("wilson", "continuous-hahn"):
        spec = FamilySpec(family, p)
        for n in range(9):
            agree(spec, p, n, x)


@settings(max_examples=25, deadline=None)
@given(generic, generic, generic, st.integers(0, 8), st.integers(0, 8), st.sampled_from(["alpha", "gamma", "bd"]))
def test_racah_and_hahn_brute_force(p1, p2, p3, big_n, x, which):
    racah = {"alpha": p1, "beta": p2, "gamma": p3, "delta": Fraction(1, 7), "N": big_n}
    if which == "alpha":
        racah["alpha"] = -big_n - 1
    elif which == "gamma":
        racah["gamma"] = -big_n - 1
    else:
        racah["delta"] = -big_n - 1 - p2
    # a draw where a second Racah condition also holds is not a valid family member
    held = [racah["alpha"] + 1, racah["beta"] + racah["delta"] + 1, racah["gamma"] + 1].count(-big_n)
    assume(held == 1)
    hahn = {"alpha": p1, "beta": p2, "N": big_n}
    for family, p in (("racah", racah), ("hahn", hahn)):
        spec = FamilySpec(family, p)
        for n in range(big_n + 1):
            agree(spec, p, n, x)


@settings(max_examples=30, deadline=None)
@given(generic, generic, points)
def test_classical_families_match_sympy(p1, p2, x):
    # sympy's recurrences divide by zero when alpha + beta or 2 lam is an integer
    assume((p1 + p2).denominator != 1 and (2 * p1).denominator != 1)
    cases = [
        ("jacobi", {"alpha": p1, "beta": p2}),
        ("gegenbauer", {"lam": p1}),
        ("chebyshev-t", {}),
        ("chebyshev-u", {}),
        ("legendre", {}),
    ]
    for family, p in cases:
        spec = FamilySpec(family, p)
        for n in range(9):
            assert eval_poly(spec, n, x) == sympy_classical(family, p, n, x), (family, n)


def test_degree_property():
    params = {
        "wilson": {"a": "1/2", "b": "1/3", "c": "2/5", "d": "3/7"},
        "racah": {"alpha": -7, "beta": "1/2", "gamma": "1/3", "delta": "2/5", "N": 6},
        "continuous-hahn": {"a": "1/2", "b": "1/3", "c": "2/5", "d": "3/7"},
        "hahn": {"alpha": "1/2", "beta": "1/3", "N": 6},
        "jacobi": {"alpha": "1/2", "beta": "1/3"},
        "gegenbauer": {"lam": "3/2"},
        "chebyshev-t": {},
        "chebyshev-u": {},
        "legendre": {},
    }
    for family, p in params.items():
        spec = FamilySpec(family, p)
        g = {k: as_gaussian(v) for k, v in p.items()}
        for n in range(7):
            xs = list(range(n + 2))
            if family == "wilson":
                # a polynomial in x^2
                nodes = [sympy.Integer(t * t) for t in xs]
            elif family == "racah":
                nodes = [sympy.Integer(t) * (t + sym(Fraction(str(g["gamma"] + g["delta"] + 1)))) for t in xs]
            else:
                nodes = [sympy.Integer(t) for t in xs]
            values = []
            for t in xs:
                v = eval_poly(spec, n, t)
                values.append(sympy.Rational(str(v.re)) + sympy.I * sympy.Rational(str(v.im)))
            poly = sympy.Poly(sympy.interpolate(list(zip(nodes, values)), X), X)
            assert poly.degree() == n, (family, n)


def test_special_case_collapses():
    for n in range(9):
        for x in (Fraction(1, 3), Fraction(-5, 7), Fraction(2)):
            legendre = eval_poly(FamilySpec("legendre"), n, x)
            assert eval_poly(FamilySpec("gegenbauer", {"lam": "1/2"}), n, x) == legendre
            assert eval_poly(FamilySpec("jacobi", {"alpha": 0, "beta": 0}), n, x) == legendre
            half = FamilySpec("jacobi", {"alpha": "1/2", "beta": "1/2"})
            u = (n + 1) * eval_poly(half, n, x) / eval_poly(half, n, 1)
            assert eval_poly(FamilySpec("chebyshev-u"), n, x) == u


@settings(max_examples=30, deadline=None)
@given(generic, generic, points, st.integers(0, 8))
def test_jacobi_reflection(al, be, x, n):
    lhs = eval_poly(FamilySpec("jacobi", {"alpha": al, "beta": be}), n, x)
    rhs = (-1) ** n * eval_poly(FamilySpec("jacobi", {"alpha": be, "beta": al}), n, -x)
    assert lhs == rhs


def test_wilson_is_real_for_real_parameters():
    spec = FamilySpec("wilson", {"a": "1/2", "b": "1/3", "c": "2/5", "d": "3/7"})
    assert all(eval_poly(spec, n, "3/4").is_real() for n in range(7))


# -- identity verifiers -------------------------------------------------------


def test_identity_table_has_all_tags():
    assert len(IDENTITIES) == 18
    assert set(IDENTITIES) <= set(TAGS)


def test_identity_examples():
    # a + b + c + d = 7/3
    report = verify_identity("I510", {"a": "1/2", "b": "1/3", "c": "2/3", "d": "5/6"}, "1/2", 0)
    assert report.passed
    assert verify_identity("I5710", {}, "1/4", 1).passed
    assert verify_identity("I5910", {}, "1/3", 1).passed
    assert verify_identity("I537", {"a": "1/2", "b": 1, "c": "3/4", "d": "5/4"}, "1/3", 4).passed


def test_chebyshev_t_identity_value_at_n1():
    x = Fraction(1, 4)
    t = [eval_poly(FamilySpec("chebyshev-t"), n, x) for n in range(2)]
    assert t[0] - t[1] / 2 == Fraction(7, 8)


def test_legendre_identity_value_at_n1():
    x = Fraction(1, 3)
    p = [eval_poly(FamilySpec("legendre"), n, x) for n in range(2)]
    # weights (3/2)_k (-1)_k / ((1/2)_k (3)_k) at n = 1
    assert p[0] - p[1] == Fraction(2, 3)


def test_enumerate_538_examples():
    assert enumerate_538("1/3", "2/5", "3/7", "4/9", "1/2", 0).passed
    assert enumerate_538("1/2", "1/2", "1/2", "1/2", 0, 3).passed
    assert enumerate_538("1/3", "-2/5", "5/7", "7/4", "2/7", 4).passed


def test_racah_n_max_capped():
    with pytest.raises(DegreeExceedsN):
        verify_identity("I520", {"alpha": -4, "beta": "1/2", "gamma": "1/3", "delta": "2/5", "N": 3}, 1, 4)


def test_printed_chebyshev_u_weight_fails():
    # (2+n)_k in the weight's denominator does not give the closed form
    x = Fraction(1, 3)
    spec = FamilySpec("chebyshev-u")
    n = 1
    lhs = sum(
        (pochhammer(2, k) * pochhammer(-n, k) / (factorial(k) * pochhammer(2 + n, k)) * eval_poly(spec, k, x)
         for k in range(n + 1)),
        G(0),
    )
    rhs = pochhammer(3, n) / pochhammer(G("3/2"), n) * ((1 - x) / 2) ** n
    assert lhs == Fraction(5, 9) and rhs == Fraction(2, 3)
    assert verify_identity("I5810", {}, x, 6).passed


@pytest.mark.parametrize("tag", sorted(IDENTITIES))
def test_identity_campaigns(tag):
    assert run_campaign(tag, 10, 6, seed=11).passed
