"""Classical hypergeometric orthogonal polynomials and relations among them.

Each family is evaluated exactly from its terminating hypergeometric
definition:

==================  ==========================================================
wilson              (a+b)_n (a+c)_n (a+d)_n 4F3(-n, n+s-1, a+ix, a-ix; a+b, a+c, a+d; 1)
racah               4F3(-n, n+alpha+beta+1, -x, x+gamma+delta+1; alpha+1, beta+delta+1, gamma+1; 1)
continuous-hahn     i^n (a+c)_n (a+d)_n / n! 3F2(-n, n+s-1, a+ix; a+c, a+d; 1)
hahn                3F2(-n, n+alpha+beta+1, -x; alpha+1, -N; 1)
jacobi              (alpha+1)_n / n! 2F1(-n, n+alpha+beta+1; alpha+1; (1-x)/2)
gegenbauer          (2 lam)_n / n! 2F1(-n, n+2 lam; lam+1/2; (1-x)/2)
chebyshev-t         2F1(-n, n; 1/2; (1-x)/2)
chebyshev-u         (n+1) 2F1(-n, n+2; 3/2; (1-x)/2)
legendre            2F1(-n, n+1; 1; (1-x)/2)
==================  ==========================================================

with ``s = a+b+c+d``.  Wilson takes ``x`` (not ``x^2``) and Racah takes ``x``
(not ``lambda(x) = x(x+gamma+delta+1)``).

The identity verifiers recompute both sides independently: the left side
sums weighted polynomial values, the right side is a product of rising
factorials.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import factorial
from typing import Callable, Mapping

from .errors import DegreeExceedsN, DenominatorPole, InvalidParameter
from .exactnum import I, ZERO, GaussianRational, as_gaussian, pochhammer
from .hyper import eval_terminating, hyp
from .report import VerificationReport, compare_sides

__all__ = [
    "FAMILIES",
    "IDENTITIES",
    "FamilySpec",
    "eval_poly",
    "verify_identity",
    "enumerate_538",
]

FAMILIES = {
    "wilson": ("a", "b", "c", "d"),
    "racah": ("alpha", "beta", "gamma", "delta", "N"),
    "continuous-hahn": ("a", "b", "c", "d"),
    "hahn": ("alpha", "beta", "N"),
    "jacobi": ("alpha", "beta"),
    "gegenbauer": ("lam",),
    "chebyshev-t": (),
    "chebyshev-u": (),
    "legendre": (),
}

HALF = GaussianRational("1/2")


def _nonneg_int(value: GaussianRational, name: str) -> int:
    if not (value.is_integer() and value.re >= 0):
        raise InvalidParameter(f"{name} = {value} must be a nonnegative integer")
    return int(value)


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: Mapping[str, GaussianRational] = field(default_factory=dict)

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InvalidParameter(f"unknown polynomial family {self.family!r}")
        names = FAMILIES[self.family]
        missing = [p for p in names if p not in self.params]
        extra = [p for p in self.params if p not in names]
        if missing or extra:
            raise InvalidParameter(
                f"{self.family} takes parameters {names}; missing {missing}, unexpected {extra}"
            )
        params = {name: as_gaussian(self.params[name]) for name in names}
        object.__setattr__(self, "params", params)

        if self.family == "racah":
            big_n = _nonneg_int(params["N"], "N")
            g = params
            held = [
                g["alpha"] + 1 == -big_n,
                g["beta"] + g["delta"] + 1 == -big_n,
                g["gamma"] + 1 == -big_n,
            ]
            if sum(held) != 1:
                raise InvalidParameter(
                    "Racah needs exactly one of alpha+1, beta+delta+1, gamma+1 equal to -N"
                )
        elif self.family == "hahn":
            _nonneg_int(params["N"], "N")
        elif self.family == "gegenbauer" and params["lam"].is_zero():
            raise InvalidParameter("Gegenbauer parameter must be nonzero")

    def __getitem__(self, name):
        return self.params[name]

    @property
    def degree_cap(self):
        if self.family in ("racah", "hahn"):
            return int(self.params["N"])
        return None

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "params": {
                k: str(v.re) if v.is_real() else v.to_json() for k, v in self.params.items()
            },
        }

    @classmethod
    def from_json(cls, data: dict) -> FamilySpec:
        params = {k: GaussianRational.from_json(v) for k, v in data.get("params", {}).items()}
        return cls(data["family"], params)


def _half_minus_half_x(x):
    return (1 - x) / 2


def eval_poly(spec: FamilySpec, n: int, x) -> GaussianRational:
    """Value of the degree-``n`` member of ``spec``'s family at ``x``."""
    if n < 0:
        raise InvalidParameter("degree must be nonnegative")
    cap = spec.degree_cap
    if cap is not None and n > cap:
        raise DegreeExceedsN(f"degree {n} exceeds N = {cap} for {spec.family}")
    x = as_gaussian(x)
    p = spec.params
    fam = spec.family

    if fam == "wilson":
        a, b, c, d = p["a"], p["b"], p["c"], p["d"]
        s = a + b + c + d
        series = hyp([-n, n + s - 1, a + I * x, a - I * x], [a + b, a + c, a + d])
        return pochhammer(a + b, n) * pochhammer(a + c, n) * pochhammer(a + d, n) * eval_terminating(series)
    if fam == "racah":
        al, be, ga, de = p["alpha"], p["beta"], p["gamma"], p["delta"]
        series = hyp([-n, n + al + be + 1, -x, x + ga + de + 1], [al + 1, be + de + 1, ga + 1])
        return eval_terminating(series)
    if fam == "continuous-hahn":
        a, b, c, d = p["a"], p["b"], p["c"], p["d"]
        s = a + b + c + d
        series = hyp([-n, n + s - 1, a + I * x], [a + c, a + d])
        prefactor = I**n * pochhammer(a + c, n) * pochhammer(a + d, n) / factorial(n)
        return prefactor * eval_terminating(series)
    if fam == "hahn":
        al, be, big_n = p["alpha"], p["beta"], p["N"]
        return eval_terminating(hyp([-n, n + al + be + 1, -x], [al + 1, -big_n]))
    if fam == "jacobi":
        al, be = p["alpha"], p["beta"]
        series = hyp([-n, n + al + be + 1], [al + 1], _half_minus_half_x(x))
        return pochhammer(al + 1, n) / factorial(n) * eval_terminating(series)
    if fam == "gegenbauer":
        lam = p["lam"]
        series = hyp([-n, n + 2 * lam], [lam + HALF], _half_minus_half_x(x))
        return pochhammer(2 * lam, n) / factorial(n) * eval_terminating(series)
    if fam == "chebyshev-t":
        return eval_terminating(hyp([-n, n], [HALF], _half_minus_half_x(x)))
    if fam == "chebyshev-u":
        return (n + 1) * eval_terminating(hyp([-n, n + 2], [3 * HALF], _half_minus_half_x(x)))
    # legendre
    return eval_terminating(hyp([-n, n + 1], [1], _half_minus_half_x(x)))


# -- helpers -------------------------------------------------------------------

p_ = pochhammer


def _div(num: GaussianRational, den: GaussianRational, what: str) -> GaussianRational:
    if den.is_zero():
        raise DenominatorPole(f"{what} vanishes", factor=what)
    return num / den


def _not_int_at_most(value: GaussianRational, bound: int, message: str):
    if value.is_integer() and value.re <= bound:
        raise InvalidParameter(message)


def _inverse_weight(a: GaussianRational, n: int, k: int) -> GaussianRational:
    """``(a)_k ((a+2)/2)_k (-n)_k / (k! (a/2)_k (1+a+n)_k)``, the weight in the
    closed-form inverse of L_a for a not in {0, -1, -2, ...}."""
    top = p_(a, k) * p_((a + 2) / 2, k) * p_(-n, k)
    bottom = factorial(k) * p_(a / 2, k) * p_(1 + a + n, k)
    return _div(top, bottom, f"inverse weight at (n={n}, k={k})")


def _limit_weight(n: int, k: int) -> GaussianRational:
    """``(-n)_k / (1+n)_k``, the weight of the a = 0 inverse."""
    return p_(-n, k) / p_(1 + n, k)


# -- identity verifiers ----------------------------------------------------------


@dataclass(frozen=True)
class Identity:
    tag: str
    family: str
    sides: Callable  # (params, x, n) -> list of (label, lhs, rhs)
    derive: Callable = staticmethod(lambda params: params)
    restrict: Callable = staticmethod(lambda params: None)
    description: str = ""


def _wilson_sum(params, x, n):
    a, b, c, d = (params[k] for k in "abcd")
    s = a + b + c + d
    spec = FamilySpec("wilson", params)
    lhs = ZERO
    for k in range(n + 1):
        w = _inverse_weight(s - 1, n, k)
        w = _div(w, p_(a + b, k) * p_(a + c, k) * p_(a + d, k), "(a+b)_k (a+c)_k (a+d)_k")
        lhs += w * eval_poly(spec, k, x)
    rhs = _div(
        p_(s, n) * p_(a + I * x, n) * p_(a - I * x, n),
        p_(a + b, n) * p_(a + c, n) * p_(a + d, n),
        "(a+b)_n (a+c)_n (a+d)_n",
    )
    out = [("sum", lhs, rhs)]
    if all(v.is_real() for v in params.values()) and x.is_real():
        w_n = eval_poly(spec, n, x)
        out.append(("W_n real", w_n.im, ZERO))
    return out


def _wilson_restrict(params):
    s = sum((params[k] for k in "abcd"), ZERO)
    _not_int_at_most(s, 1, f"a+b+c+d = {s} must not lie in {{1, 0, -1, ...}}")


def _wilson_s1_derive(params):
    out = dict(params)
    out["d"] = 1 - params["a"] - params["b"] - params["c"]
    return out


def _wilson_s1_sum(params, x, n):
    a, b, c, d = (params[k] for k in "abcd")
    spec = FamilySpec("wilson", params)
    lhs = ZERO
    for k in range(n + 1):
        den = p_(1 + n, k) * p_(a + b, k) * p_(a + c, k) * p_(a + d, k)
        lhs += _div(p_(-n, k), den, "(a+b)_k (a+c)_k (a+d)_k") * eval_poly(spec, k, x)
    norm = p_(a + b, n) * p_(a + c, n) * p_(a + d, n)
    rhs = _div(factorial(n) * p_(a + I * x, n) * p_(a - I * x, n) + norm, 2 * norm, "(a+b)_n (a+c)_n (a+d)_n")
    out = [("sum", lhs, rhs)]
    if all(v.is_real() for v in params.values()) and x.is_real():
        out.append(("W_n real", eval_poly(spec, n, x).im, ZERO))
    return out


def _racah_norm(params, n):
    al, be, ga, de = params["alpha"], params["beta"], params["gamma"], params["delta"]
    return p_(al + 1, n) * p_(be + de + 1, n) * p_(ga + 1, n)


def _racah_sum(params, x, n):
    al, be, ga, de = params["alpha"], params["beta"], params["gamma"], params["delta"]
    spec = FamilySpec("racah", params)
    lhs = sum((_inverse_weight(al + be + 1, n, k) * eval_poly(spec, k, x) for k in range(n + 1)), ZERO)
    rhs = _div(
        p_(al + be + 2, n) * p_(-x, n) * p_(x + ga + de + 1, n),
        _racah_norm(params, n),
        "(alpha+1)_n (beta+delta+1)_n (gamma+1)_n",
    )
    return [("sum", lhs, rhs)]


def _ab_restrict(params):
    s = params["alpha"] + params["beta"]
    _not_int_at_most(s, -1, f"alpha+beta = {s} must not be a negative integer")


def _beta_from_alpha(params):
    out = dict(params)
    out["beta"] = -params["alpha"] - 1
    return out


def _racah_limit_sum(params, x, n):
    ga, de = params["gamma"], params["delta"]
    spec = FamilySpec("racah", params)
    lhs = sum((_limit_weight(n, k) * eval_poly(spec, k, x) for k in range(n + 1)), ZERO)
    norm = _racah_norm(params, n)
    rhs = _div(factorial(n) * p_(-x, n) * p_(x + ga + de + 1, n) + norm, 2 * norm, "Racah normalizer")
    return [("sum", lhs, rhs)]


def _ch_sum(params, x, n):
    a, b, c, d = (params[k] for k in "abcd")
    s = a + b + c + d
    spec = FamilySpec("continuous-hahn", params)
    lhs = ZERO
    for k in range(n + 1):
        # The k! of the inverse weight cancels against the 1/k! in p_k.
        w = _inverse_weight(s - 1, n, k) * factorial(k)
        w = _div(w, p_(a + c, k) * p_(a + d, k), "(a+c)_k (a+d)_k")
        lhs += (-I) ** k * w * eval_poly(spec, k, x)
    rhs = _div(p_(s, n) * p_(a + I * x, n), p_(a + c, n) * p_(a + d, n), "(a+c)_n (a+d)_n")
    return [("sum", lhs, rhs)]


def _ch_s1_sum(params, x, n):
    a, c, d = params["a"], params["c"], params["d"]
    spec = FamilySpec("continuous-hahn", params)
    lhs = ZERO
    for k in range(n + 1):
        w = _div(p_(-n, k) * factorial(k), p_(1 + n, k) * p_(a + c, k) * p_(a + d, k), "(a+c)_k (a+d)_k")
        lhs += (-I) ** k * w * eval_poly(spec, k, x)
    norm = p_(a + c, n) * p_(a + d, n)
    rhs = _div(factorial(n) * p_(a + I * x, n) + norm, 2 * norm, "(a+c)_n (a+d)_n")
    return [("sum", lhs, rhs)]


def _ch_reflection(params, x, n):
    a, b, c, d = (params[k] for k in "abcd")
    s = a + b + c + d
    lhs = eval_poly(FamilySpec("continuous-hahn", params), n, x)
    middle = (
        (-1) ** n
        * I**n
        * p_(a + d, n)
        * p_(b + d, n)
        / factorial(n)
        * eval_terminating(hyp([-n, n + s - 1, d - I * x], [b + d, a + d]))
    )
    swapped = FamilySpec("continuous-hahn", {"a": d, "b": c, "c": b, "d": a})
    rhs = (-1) ** n * eval_poly(swapped, n, -x)
    return [("3F2 form", lhs, middle), ("p_n(-x;d,c,b,a)", lhs, rhs)]


def _538_forms(params):
    a, b, c, d = (params[k] for k in "abcd")
    forms = []
    for x1, x2 in itertools.permutations((a, b)):
        for x3, x4 in itertools.permutations((c, d)):
            forms.append((0, (x1, x2, x3, x4)))
    for x1, x2 in itertools.permutations((c, d)):
        for x3, x4 in itertools.permutations((a, b)):
            forms.append((1, (x1, x2, x3, x4)))
    return forms


def _ch_eight(params, x, n):
    base = eval_poly(FamilySpec("continuous-hahn", params), n, x)
    out = []
    for flip, perm in _538_forms(params):
        other = FamilySpec("continuous-hahn", dict(zip("abcd", perm)))
        rhs = (-1) ** (flip * n) * eval_poly(other, n, (-1) ** flip * x)
        label = f"k={flip} ({', '.join(map(str, perm))})"
        out.append((label, base, rhs))
    return out


def _hahn_sum(params, x, n):
    al, be, big_n = params["alpha"], params["beta"], params["N"]
    spec = FamilySpec("hahn", params)
    lhs = sum((_inverse_weight(al + be + 1, n, k) * eval_poly(spec, k, x) for k in range(n + 1)), ZERO)
    rhs = _div(p_(al + be + 2, n) * p_(-x, n), p_(al + 1, n) * p_(-big_n, n), "(alpha+1)_n (-N)_n")
    return [("sum", lhs, rhs)]


def _hahn_limit_sum(params, x, n):
    al, big_n = params["alpha"], params["N"]
    spec = FamilySpec("hahn", params)
    lhs = sum((_limit_weight(n, k) * eval_poly(spec, k, x) for k in range(n + 1)), ZERO)
    norm = p_(al + 1, n) * p_(-big_n, n)
    rhs = _div(factorial(n) * p_(-x, n) + norm, 2 * norm, "(alpha+1)_n (-N)_n")
    return [("sum", lhs, rhs)]


def _hahn_reflection(params, x, n):
    al, be, big_n = params["alpha"], params["beta"], params["N"]
    lhs = eval_poly(FamilySpec("hahn", params), n, x)
    scale = _div((-1) ** n * p_(be + 1, n), p_(al + 1, n), "(alpha+1)_n")
    middle = scale * eval_terminating(hyp([-n, n + al + be + 1, -big_n + x], [be + 1, -big_n]))
    swapped = FamilySpec("hahn", {"alpha": be, "beta": al, "N": big_n})
    rhs = scale * eval_poly(swapped, n, big_n - x)
    return [("3F2 form", lhs, middle), ("Q_n(N-x;beta,alpha,N)", lhs, rhs)]


def _hahn_reflection_restrict(params):
    for name in ("alpha", "beta"):
        v = params[name] + 1
        _not_int_at_most(v, 0, f"{name}+1 = {v} must not be a nonpositive integer")


def _jacobi_sum(params, x, n):
    al, be = params["alpha"], params["beta"]
    spec = FamilySpec("jacobi", params)
    lhs = ZERO
    for k in range(n + 1):
        w = _div(_inverse_weight(al + be + 1, n, k) * factorial(k), p_(al + 1, k), "(alpha+1)_k")
        lhs += w * eval_poly(spec, k, x)
    rhs = _div(p_(al + be + 2, n), p_(al + 1, n), "(alpha+1)_n") * _half_minus_half_x(x) ** n
    return [("sum", lhs, rhs)]


def _jacobi_limit_sum(params, x, n):
    al = params["alpha"]
    spec = FamilySpec("jacobi", params)
    lhs = ZERO
    for k in range(n + 1):
        w = _div(p_(-n, k) * factorial(k), p_(1 + n, k) * p_(al + 1, k), "(alpha+1)_k")
        lhs += w * eval_poly(spec, k, x)
    norm = p_(al + 1, n)
    rhs = _div(factorial(n) * _half_minus_half_x(x) ** n + norm, 2 * norm, "(alpha+1)_n")
    return [("sum", lhs, rhs)]


def _jacobi_reflection(params, x, n):
    al, be = params["alpha"], params["beta"]
    lhs = eval_poly(FamilySpec("jacobi", params), n, x)
    middle = (
        (-1) ** n
        * p_(be + 1, n)
        / factorial(n)
        * eval_terminating(hyp([-n, n + al + be + 1], [be + 1], (1 + x) / 2))
    )
    rhs = (-1) ** n * eval_poly(FamilySpec("jacobi", {"alpha": be, "beta": al}), n, -x)
    return [("2F1 form", lhs, middle), ("P_n^(beta,alpha)(-x)", lhs, rhs)]


def _gegenbauer_sum(params, x, n):
    lam = params["lam"]
    spec = FamilySpec("gegenbauer", params)
    lhs = ZERO
    for k in range(n + 1):
        w = _div(p_(1 + lam, k) * p_(-n, k), p_(lam, k) * p_(1 + 2 * lam + n, k), "(lam)_k (1+2lam+n)_k")
        lhs += w * eval_poly(spec, k, x)
    rhs = _div(p_(1 + 2 * lam, n), p_(lam + HALF, n), "(lam+1/2)_n") * _half_minus_half_x(x) ** n
    return [("sum", lhs, rhs)]


def _gegenbauer_restrict(params):
    lam = params["lam"]
    _not_int_at_most(2 * lam, 0, f"2*lam = {2 * lam} must not be a nonpositive integer")


def _chebyshev_t_sum(params, x, n):
    spec = FamilySpec("chebyshev-t")
    lhs = sum((_limit_weight(n, k) * eval_poly(spec, k, x) for k in range(n + 1)), ZERO)
    rhs = (factorial(n) * _half_minus_half_x(x) ** n + p_(HALF, n)) / (2 * p_(HALF, n))
    return [("sum", lhs, rhs)]


def _chebyshev_u_sum(params, x, n):
    spec = FamilySpec("chebyshev-u")
    lhs = ZERO
    for k in range(n + 1):
        # The inverse weight at a = 2 has (3+n)_k in the denominator.
        w = p_(2, k) * p_(-n, k) / (factorial(k) * p_(3 + n, k))
        lhs += w * eval_poly(spec, k, x)
    rhs = p_(3, n) / p_(3 * HALF, n) * _half_minus_half_x(x) ** n
    return [("sum", lhs, rhs)]


def _legendre_sum(params, x, n):
    spec = FamilySpec("legendre")
    lhs = ZERO
    for k in range(n + 1):
        w = p_(3 * HALF, k) * p_(-n, k) / (p_(HALF, k) * p_(2 + n, k))
        lhs += w * eval_poly(spec, k, x)
    rhs = (n + 1) * _half_minus_half_x(x) ** n
    return [("sum", lhs, rhs)]


IDENTITIES: dict[str, Identity] = {
    i.tag: i
    for i in (
        Identity("I510", "wilson", _wilson_sum, restrict=_wilson_restrict),
        Identity("I515", "wilson", _wilson_s1_sum, derive=_wilson_s1_derive),
        Identity("I520", "racah", _racah_sum, restrict=_ab_restrict),
        Identity("I525", "racah", _racah_limit_sum, derive=_beta_from_alpha),
        Identity("I530", "continuous-hahn", _ch_sum, restrict=_wilson_restrict),
        Identity("I535", "continuous-hahn", _ch_s1_sum, derive=_wilson_s1_derive),
        Identity("I537", "continuous-hahn", _ch_reflection),
        Identity("I538", "continuous-hahn", _ch_eight),
        Identity("I540", "hahn", _hahn_sum, restrict=_ab_restrict),
        Identity("I545", "hahn", _hahn_limit_sum, derive=_beta_from_alpha),
        Identity("I547", "hahn", _hahn_reflection, restrict=_hahn_reflection_restrict),
        Identity("I550", "jacobi", _jacobi_sum, restrict=_ab_restrict),
        Identity("I555", "jacobi", _jacobi_limit_sum, derive=_beta_from_alpha),
        Identity("JacobiReflection", "jacobi", _jacobi_reflection),
        Identity("I5610", "gegenbauer", _gegenbauer_sum, restrict=_gegenbauer_restrict),
        Identity("I5710", "chebyshev-t", _chebyshev_t_sum),
        Identity("I5810", "chebyshev-u", _chebyshev_u_sum),
        Identity("I5910", "legendre", _legendre_sum),
    )
}


def verify_identity(identity: str, params, x, n_max: int) -> VerificationReport:
    """Check one polynomial identity exactly for every degree ``0..n_max``.

    ``params`` may be a :class:`FamilySpec` or a plain mapping.  For the
    constrained identities (I515, I525, I535, I545, I555) the constrained
    parameter is derived here and any supplied value for it is ignored.
    """
    try:
        ident = IDENTITIES[identity]
    except KeyError:
        raise InvalidParameter(f"unknown identity {identity!r}") from None
    if isinstance(params, FamilySpec):
        params = params.params
    params = {k: as_gaussian(v) for k, v in params.items()}
    params = ident.derive(params)
    spec = FamilySpec(ident.family, params)
    ident.restrict(spec.params)
    cap = spec.degree_cap
    if cap is not None and n_max > cap:
        raise DegreeExceedsN(f"n_max = {n_max} exceeds N = {cap}")
    x = as_gaussian(x)
    report = compare_sides(identity, spec.params, n_max, lambda n: ident.sides(spec.params, x, n))
    report.parameter_draw["x"] = str(x.re) if x.is_real() else x.to_json()
    return report


def enumerate_538(a, b, c, d, x, n_max: int) -> VerificationReport:
    """All eight sign/permutation symmetries of the continuous Hahn polynomials."""
    params = {"a": as_gaussian(a), "b": as_gaussian(b), "c": as_gaussian(c), "d": as_gaussian(d)}
    return verify_identity("I538", params, x, n_max)
