"""Closed forms for sums of terminating 4F3(1) and 5F4(1) series.

Each identity has the shape

    sum_{k=0}^{n} w(n, k) * F_k = R(n)

where ``F_k`` is a terminating series with ``-k`` among its numerator
parameters.  :func:`verify_sum` compares both sides exactly;
:func:`rederive` rebuilds the closed form inside the engine by evaluating the
classical single-series transformation and running its values through the
matching inverse transform.
"""

from __future__ import annotations

from math import factorial

from .errors import DenominatorPole, InvalidParameter
from .exactnum import ONE, ZERO, GaussianRational, as_gaussian, pochhammer
from .hyper import eval_terminating, hyp
from .report import VerificationReport, compare_sides, counterexample, scalar_json, stopwatch
from .seqtransform import TransformSpec, apply, kernel_for

__all__ = [
    "SUM_IDENTITIES",
    "verify_sum",
    "summand",
    "rhs",
    "rederive",
    "resolve_s630_factor",
]

p_ = pochhammer
HALF = GaussianRational("1/2")

SUM_IDENTITIES = {
    "S610": ("a", "b", "c", "d", "e"),
    "S620": ("a", "b", "c", "d"),
    "S630": ("a", "b", "c", "d"),
    "S640": ("a", "b", "c", "d"),
}


def _div(num, den, what, **where):
    if den.is_zero():
        raise DenominatorPole(f"{what} vanishes at {where}", factor=what, **where)
    return num / den


def _inner(series, n, k):
    # Poles are judged against the -k parameter, not against an earlier
    # truncation: a denominator in {-k+1, ..., 0} makes the inner series a
    # 0/0 limit even when another numerator parameter cuts it off sooner.
    for b in series.denominator_params:
        if b.is_nonpositive_integer() and -int(b) < k:
            raise DenominatorPole(
                f"inner series pole at n={n}, k={k}: denominator parameter {b}", n=n, k=k, factor=b
            )
    try:
        return eval_terminating(series)
    except DenominatorPole as exc:
        raise DenominatorPole(
            f"inner series pole at n={n}, k={k}: {exc}", n=n, k=k, factor=exc.where.get("parameter")
        ) from exc


def _inner_series(identity, params, k):
    a, b, c, d = params["a"], params["b"], params["c"], params["d"]
    if identity == "S610":
        e = params["e"]
        return hyp([1 + a - b - c, d, e, -k], [1 + a - b, 1 + a - c, d + e - a - k])
    if identity == "S620":
        return hyp([-k, 2 * b, d - c, 1 + 2 * b - d], [1 + 2 * b - a - k, d, 1 + 2 * b + c - d])
    if identity == "S630":
        return hyp(
            [1 + (a - b) / 2, (1 + a - b) / 2, c, d, -k],
            [1 + a / 2, 1 + a - b, (1 + a) / 2, c + d - a - k],
        )
    return hyp(
        [(a - b) / 2, (1 + a - b) / 2, c, d, -k],
        [a / 2, 1 + a - b, (1 + a) / 2, c + d - a - k],
    )


def _weight(identity, params, n, k):
    a, c, d = params["a"], params["c"], params["d"]
    if identity == "S610":
        e = params["e"]
        top = p_(-n, k) * p_(n + a, k) * p_(1 + a - d - e, k)
        bottom = factorial(k) * p_(1 + a - d, k) * p_(1 + a - e, k)
        return _div(top, bottom, "k! (1+a-d)_k (1+a-e)_k", n=n, k=k)
    if identity == "S620":
        b = params["b"]
        top = p_(-n, k) * p_(1 + a / 2, k) * p_(a - 2 * b, k)
        bottom = factorial(k) * p_(1 + a + n, k) * p_(a / 2, k)
        return _div(top, bottom, "k! (1+a+n)_k (a/2)_k", n=n, k=k)
    top = p_(-n, k) * p_(n + a, k) * p_(1 + a - c - d, k)
    bottom = factorial(k) * p_(1 + a - c, k) * p_(1 + a - d, k)
    return _div(top, bottom, "k! (1+a-c)_k (1+a-d)_k", n=n, k=k)


def summand(identity: str, params, n: int, k: int) -> GaussianRational:
    """Term ``k`` of the left-hand sum at outer index ``n``."""
    params = _normalize(identity, params)
    return _weight(identity, params, n, k) * _inner(_inner_series(identity, params, k), n, k)


def rhs(identity: str, params, n: int, s630_reading: str = "subscripted") -> GaussianRational:
    """Closed-form right-hand side.

    For S630 the factor printed as ``(a/2)`` is read as ``(a/2)_n`` by
    default; ``s630_reading="bare"`` uses the plain factor ``a/2``.
    """
    params = _normalize(identity, params)
    a, b, c, d = params["a"], params["b"], params["c"], params["d"]
    if identity == "S610":
        e = params["e"]
        top = p_(b, n) * p_(c, n) * p_(d, n) * p_(e, n)
        bottom = p_(1 + a - b, n) * p_(1 + a - c, n) * p_(1 + a - d, n) * p_(1 + a - e, n)
    elif identity == "S620":
        top = p_(1 + a, n) * p_(b, n) * p_(b + HALF, n) * p_(c, n)
        bottom = p_(a / 2, n) * p_((1 + a) / 2, n) * p_(d, n) * p_(1 + 2 * b + c - d, n)
    elif identity == "S630":
        if s630_reading == "subscripted":
            half_a = p_(a / 2, n)
        elif s630_reading == "bare":
            half_a = a / 2
        else:
            raise ValueError(f"unknown S630 reading {s630_reading!r}")
        top = p_(b, n) * half_a * p_(c, n) * p_(d, n)
        bottom = p_(a, n) * p_(1 + a / 2, n) * p_(1 + a - c, n) * p_(1 + a - d, n)
    else:
        top = p_(b, n) * p_(c, n) * p_(d, n)
        bottom = p_(a, n) * p_(1 + a - c, n) * p_(1 + a - d, n)
    return _div(top, bottom, "right-hand denominator", n=n)


def _normalize(identity, params):
    try:
        names = SUM_IDENTITIES[identity]
    except KeyError:
        raise InvalidParameter(f"unknown summation identity {identity!r}") from None
    missing = [p for p in names if p not in params]
    if missing:
        raise InvalidParameter(f"{identity} is missing parameters {missing}")
    params = {name: as_gaussian(params[name]) for name in names}
    a = params["a"]
    if a.is_integer() and a.re <= 0:
        raise InvalidParameter(f"a = {a} must not lie in {{0, -1, -2, ...}}")
    return params


def verify_sum(identity: str, params, n_max: int, s630_reading=None) -> VerificationReport:
    """Check ``sum_k w(n,k) F_k == R(n)`` exactly for n = 0..n_max.

    For S630, pass ``s630_reading`` to reuse an earlier resolution; otherwise
    the reading is resolved from this draw first.
    """
    params = _normalize(identity, params)
    notes = []
    reading = "subscripted"
    if identity == "S630":
        reading = s630_reading or resolve_s630_factor(params, max(n_max, 2))
        notes.append(f"S630 right-hand factor read as {'(a/2)_n' if reading == 'subscripted' else 'a/2'} (oracle-confirmed)")

    inner_cache: dict[int, GaussianRational] = {}

    def inner(n, k):
        if k not in inner_cache:
            inner_cache[k] = _inner(_inner_series(identity, params, k), n, k)
        return inner_cache[k]

    def sides(n):
        lhs = ZERO
        for k in range(n + 1):
            lhs += _weight(identity, params, n, k) * inner(n, k)
        return [("sum", lhs, rhs(identity, params, n, reading))]

    return compare_sides(identity, params, n_max, sides, notes=notes)


def resolve_s630_factor(params, n_max: int = 3) -> str:
    """Decide how the S630 factor printed as ``(a/2)`` must be read.

    Evaluates the left-hand double sum directly and keeps whichever reading,
    ``(a/2)_n`` or bare ``a/2``, matches it for every n up to ``n_max``.
    """
    params = _normalize("S630", params)
    lhs = []
    for n in range(n_max + 1):
        lhs.append(sum((summand("S630", params, n, k) for k in range(n + 1)), ZERO))
    matching = [
        reading
        for reading in ("subscripted", "bare")
        if all(lhs[n] == rhs("S630", params, n, reading) for n in range(n_max + 1))
    ]
    if len(matching) != 1:
        raise InvalidParameter(f"draw does not separate the S630 readings: {matching}")
    return matching[0]


# -- re-derivation ---------------------------------------------------------------------


def _source_series(identity, params, k):
    """Left side of the classical transformation the sum is built from."""
    a, b, c, d = params["a"], params["b"], params["c"], params["d"]
    if identity == "S610":
        e = params["e"]
        return hyp(
            [a, 1 + a / 2, b, c, d, e, -k],
            [a / 2, 1 + a - b, 1 + a - c, 1 + a - d, 1 + a - e, 1 + a + k],
        )
    if identity == "S620":
        return hyp([-k, k + a, b, b + HALF, c], [a / 2, (1 + a) / 2, d, 1 + 2 * b + c - d])
    if identity == "S630":
        return hyp([b, c, d, -k], [1 + a - c, 1 + a - d, 1 + a + k])
    return hyp([b, 1 + a / 2, c, d, -k], [a / 2, 1 + a - c, 1 + a - d, 1 + a + k])


def _source_via_inner(identity, params, k):
    """Right side of the same transformation, built from the inner series."""
    a, b, c, d = params["a"], params["b"], params["c"], params["d"]
    inner = _inner(_inner_series(identity, params, k), k, k)
    if identity == "S610":
        e = params["e"]
        scale = _div(p_(1 + a, k) * p_(1 + a - d - e, k), p_(1 + a - d, k) * p_(1 + a - e, k), "scale", k=k)
    elif identity == "S620":
        scale = _div(p_(a - 2 * b, k), p_(a, k), "(a)_k", k=k)
    else:
        scale = _div(p_(1 + a, k) * p_(1 + a - c - d, k), p_(1 + a - c, k) * p_(1 + a - d, k), "scale", k=k)
    return scale * inner


def _recovered_target(identity, params, n):
    """The sequence the inverse transform should hand back."""
    a, b, c, d = params["a"], params["b"], params["c"], params["d"]
    if identity == "S610":
        return rhs("S610", params, n)
    if identity == "S620":
        top = p_(b, n) * p_(b + HALF, n) * p_(c, n)
        bottom = factorial(n) * p_(a / 2, n) * p_((1 + a) / 2, n) * p_(d, n) * p_(1 + 2 * b + c - d, n)
        return _div(top, bottom, "target denominator", n=n)
    return ONE


def _column_scale(identity, params, n):
    """``c_n`` with the source series equal to ``T(c_k x_k)``."""
    a, b, c, d = params["a"], params["b"], params["c"], params["d"]
    if identity == "S610":
        return p_(a, n) * p_(1 + a / 2, n) / (factorial(n) * p_(a / 2, n))
    if identity == "S620":
        return ONE
    if identity == "S630":
        return p_(b, n) * p_(c, n) * p_(d, n) / (factorial(n) * p_(1 + a - c, n) * p_(1 + a - d, n))
    return (
        p_(b, n) * p_(1 + a / 2, n) * p_(c, n) * p_(d, n)
        / (factorial(n) * p_(a / 2, n) * p_(1 + a - c, n) * p_(1 + a - d, n))
    )


def rederive(identity: str, params, n_max: int) -> VerificationReport:
    """Rebuild the identity from its source transformation.

    1. Evaluate the source series ``S_k`` directly and compare it with the
       transformation's right side built from the inner series.
    2. Feed ``S_0..S_nmax`` through the inverse transform (``L-inv`` for
       S620, ``Ltilde-inv`` otherwise), undo the column scaling, and compare
       with the sequence the source series was generated from.
    """
    params = _normalize(identity, params)
    with stopwatch() as clock:
        failure = None
        source = []
        for k in range(n_max + 1):
            direct = eval_terminating(_source_series(identity, params, k))
            via_inner = _source_via_inner(identity, params, k)
            if direct != via_inner:
                failure = counterexample(k, direct, via_inner, "source transformation")
                break
            source.append(direct)
        if failure is None:
            kind = "L-inv" if identity == "S620" else "Ltilde-inv"
            recovered = apply(kernel_for(TransformSpec(kind, params["a"])), source)
            for n, value in enumerate(recovered):
                got = _div(value, _column_scale(identity, params, n), "column scale", n=n)
                want = _recovered_target(identity, params, n)
                if got != want:
                    failure = counterexample(n, got, want, "inverse transform")
                    break
    return VerificationReport(
        identity=f"{identity}-rederive",
        parameter_draw={k: scalar_json(v) for k, v in params.items()},
        n_max=n_max,
        status="fail" if failure else "pass",
        counterexample=failure,
        elapsed_ms=clock.ms,
    )
