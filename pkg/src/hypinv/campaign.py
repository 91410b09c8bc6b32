"""Seeded randomized campaigns over every identity the package can check.

A campaign runs ``trials`` independent draws of one identity.  Parameters are
rationals with numerators in [-20, 20] and denominators in [1, 12]; a draw
that lands on an excluded value or a pole is redrawn, up to
``MAX_RETRIES`` times per trial.  The same ``(tag, trials, n_max, seed)``
always produces the same report apart from ``elapsed_ms``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Optional

from .errors import DenominatorPole, InvalidParameter
from .exactnum import GaussianRational, pochhammer
from .hyper import chu_vandermonde_rhs, dixon_rhs, eval_terminating, hyp
from .oracles import naive_hypergeometric
from .orthopoly import IDENTITIES, verify_identity
from .report import VerificationReport, counterexample, scalar_json, stopwatch
from .seqtransform import (
    TransformSpec,
    apply,
    binomial_transform,
    eq445_sides,
    eq448_sides,
    eq450_sides,
    eq460_sides,
    eq470_sides,
    invert,
    kernel_for,
    sun_chen_sides,
    theorem41_sides,
)
from .sums import SUM_IDENTITIES, rederive, resolve_s630_factor, verify_sum

__all__ = ["TAGS", "run_campaign", "random_rational", "random_generic", "MAX_RETRIES"]

MAX_RETRIES = 50


# -- random draws ------------------------------------------------------------------


def random_rational(rng: random.Random) -> GaussianRational:
    return GaussianRational(rng.randint(-20, 20)) / rng.randint(1, 12)


def random_generic(rng: random.Random) -> GaussianRational:
    """A random non-integer rational, so no parameter accidentally truncates
    a series or lands on an excluded integer."""
    while True:
        value = random_rational(rng)
        if not value.is_integer():
            return value


def random_gaussian(rng: random.Random) -> GaussianRational:
    return random_rational(rng) + random_rational(rng) * GaussianRational(0, 1)


def random_parameter(rng: random.Random, complex_rate: float = 0.2) -> GaussianRational:
    """Generic rational, or with probability ``complex_rate`` a Gaussian
    rational with nonzero imaginary part."""
    if rng.random() < complex_rate:
        return random_generic(rng) + random_generic(rng) * GaussianRational(0, 1)
    return random_generic(rng)


def random_sequence(rng: random.Random, length: int) -> tuple[GaussianRational, ...]:
    return tuple(random_gaussian(rng) for _ in range(length))


def _draw_json(draw: dict) -> dict:
    out = {}
    for name, value in draw.items():
        if isinstance(value, tuple):
            out[name] = [v.to_json() for v in value]
        elif isinstance(value, GaussianRational):
            out[name] = scalar_json(value)
        else:
            out[name] = value
    return out


# -- trial definitions ---------------------------------------------------------------
#
# A trial is (draw, check): draw(rng, trial_index, n_max) -> dict of
# parameters; check(draw, n_max) -> None on success or a counterexample dict.


@dataclass(frozen=True)
class Trial:
    draw: Callable
    check: Callable
    prepare: Optional[Callable] = None  # (rng, n_max) -> context passed to check


def _first_mismatch(pairs_for_n, n_max, label=""):
    for n in range(n_max + 1):
        for name, lhs, rhs in pairs_for_n(n):
            if lhs != rhs:
                return counterexample(n, lhs, rhs, name or label)
    return None


# roundtrips


_ROUNDTRIP_FORCED = {"L": ["0"], "Ltilde": ["0", "-1"], "Lab": ["0"]}


def _roundtrip_trial(kind: str, mutate: Optional[str] = None) -> Trial:
    def draw(rng, index, n_max):
        out = {}
        if kind in ("L", "Ltilde", "Lab"):
            forced = _ROUNDTRIP_FORCED[kind]
            out["a"] = GaussianRational(forced[index]) if index < len(forced) else random_parameter(rng, 0.25)
        if kind == "Lab":
            out["b"] = random_parameter(rng, 0.25)
        out["x"] = random_sequence(rng, n_max + 1)
        return out

    def check(draw, n_max):
        spec = TransformSpec(kind, draw.get("a"), draw.get("b"))
        return roundtrip_mismatch(spec, draw["x"], mutate)

    return Trial(draw, check)


def roundtrip_mismatch(spec: TransformSpec, x, mutate: Optional[str] = None):
    """None if inverse-after-forward returns ``x``; else the first bad entry.

    ``mutate`` names a kernel family whose (2, 1) entry gets its sign
    flipped, which must make the roundtrip fail.
    """
    forward = kernel_for(spec)
    inverse_spec = invert(spec)
    backward = kernel_for(inverse_spec)
    if mutate == spec.kind:
        forward = forward.with_flipped_sign(2, 1)
    if mutate == inverse_spec.kind:
        backward = backward.with_flipped_sign(2, 1)
    back = apply(backward, apply(forward, x))
    for n, (got, want) in enumerate(zip(back, x)):
        if got != want:
            return counterexample(n, got, want, f"roundtrip {spec.kind}")
    return None


# classical sums


def _dixon_trial() -> Trial:
    def draw(rng, index, n_max):
        return {"a": random_parameter(rng), "b": random_parameter(rng)}

    def check(draw, n_max):
        a, b = draw["a"], draw["b"]

        def sides(n):
            series = hyp([a, b, -n], [1 + a - b, 1 + a + n])
            return [("dixon", eval_terminating(series), dixon_rhs(a, b, n))]

        return _first_mismatch(sides, n_max)

    return Trial(draw, check)


def _chu_trial() -> Trial:
    def draw(rng, index, n_max):
        return {"a": random_parameter(rng), "b": random_parameter(rng)}

    def check(draw, n_max):
        a, b = draw["a"], draw["b"]
        ratio = [pochhammer(a, k) / pochhammer(b, k) for k in range(n_max + 1)]
        transformed = binomial_transform(ratio)

        def sides(n):
            closed = chu_vandermonde_rhs(a, b, n)
            return [
                ("chu-vandermonde", eval_terminating(hyp([-n, a], [b])), closed),
                ("binomial transform", transformed[n], closed),
            ]

        return _first_mismatch(sides, n_max)

    return Trial(draw, check)


# binomial-transform relations


def _theorem41_draw(rng, index, n_max):
    return {
        "a": random_parameter(rng),
        "b": random_parameter(rng),
        "x": random_sequence(rng, n_max + 1),
    }


def _sides_trial(sides_fn, draw=_theorem41_draw, with_b=True) -> Trial:
    def check(draw, n_max):
        args = (draw["a"], draw["b"]) if with_b else (draw["a"],)

        def sides(n):
            lhs, rhs = sides_fn(*args, draw["x"], n)
            return [(sides_fn.__name__, lhs, rhs)]

        return _first_mismatch(sides, n_max)

    return Trial(draw, check)


def _theorem41_trial() -> Trial:
    def check(draw, n_max):
        a, b, x = draw["a"], draw["b"], draw["x"]

        def sides(n):
            l1, r1 = theorem41_sides(a, b, x, n)
            l2, r2 = eq445_sides(a, b, x, n)
            return [("operator form", l1, r1), ("sum form", l2, r2), ("forms agree", l1, l2)]

        return _first_mismatch(sides, n_max)

    return Trial(_theorem41_draw, check)


def _odd_a_draw(rng, index, n_max):
    # b = (1+a)/2 relations: a either generic or a positive odd integer.
    if rng.random() < 0.3:
        a = GaussianRational(2 * rng.randint(0, 4) + 1)
    else:
        a = random_parameter(rng)
    return {"a": a, "x": random_sequence(rng, n_max + 1)}


def _eq470_trial() -> Trial:
    def draw(rng, index, n_max):
        return {"r": index % 3, "x": random_sequence(rng, n_max + 1)}

    def check(draw, n_max):
        r, x = draw["r"], draw["x"]

        def sides(n):
            lhs, rhs = eq470_sides(r, x, n)
            a = GaussianRational(2 * r + 1)
            l460, r460 = eq460_sides(a, x, n)
            # (n+2r+1)_k / (r+1)_k = C(n+k+2r, k+r) r! / (n+r+1)_r, so the
            # integer form is the b=(1+a)/2 form times (n+r+1)_r / r!.
            scale = pochhammer(n + r + 1, r) / pochhammer(1, r)
            return [("eq470", lhs, rhs), ("eq460 link", lhs, scale * l460)]

        return _first_mismatch(sides, n_max)

    return Trial(draw, check)


def _sun_chen_trial() -> Trial:
    def draw(rng, index, n_max):
        return {"x": random_sequence(rng, n_max + 1)}

    def check(draw, n_max):
        x = draw["x"]

        def sides(n):
            lhs, rhs = sun_chen_sides(x, n)
            # The same statement is the r = 0 integer form applied to (-1)^k x_k.
            signed = tuple((-1) ** k * v for k, v in enumerate(x))
            l470, r470 = eq470_sides(0, signed, n)
            return [("sun-chen", lhs, rhs), ("r=0 link", lhs, l470)]

        return _first_mismatch(sides, n_max)

    return Trial(draw, check)


def _eq448_trial() -> Trial:
    def check(draw, n_max):
        a, b, x = draw["a"], draw["b"], draw["x"]
        flipped = tuple((-1) ** k * v for k, v in enumerate(x))

        def sides(n):
            l448, r448 = eq448_sides(a, b, x, n)
            l445, r445 = eq445_sides(a, b, flipped, n)
            return [("eq448", l448, r448), ("eq445 with (-1)^k x_k", l448, l445)]

        return _first_mismatch(sides, n_max)

    return Trial(_theorem41_draw, check)


# orthogonal polynomials


def _family_draw(tag: str):
    family = IDENTITIES[tag].family

    def draw(rng, index, n_max):
        g = random_generic
        x = g(rng)
        if family in ("wilson", "continuous-hahn"):
            params = {k: random_parameter(rng, 0.2) for k in "abcd"}
        elif family == "racah":
            big_n = rng.randint(1, 9)
            al, be, ga, de = g(rng), g(rng), g(rng), g(rng)
            which = rng.randrange(3)
            if tag == "I525":
                be = -1 - al
            if which == 0:
                al = GaussianRational(-big_n - 1)
                if tag == "I525":
                    be = -1 - al
            elif which == 1:
                de = -big_n - 1 - be
            else:
                ga = GaussianRational(-big_n - 1)
            params = {"alpha": al, "beta": be, "gamma": ga, "delta": de, "N": GaussianRational(big_n)}
        elif family == "hahn":
            params = {"alpha": g(rng), "beta": g(rng), "N": GaussianRational(rng.randint(1, 9))}
        elif family == "jacobi":
            params = {"alpha": g(rng), "beta": g(rng)}
        elif family == "gegenbauer":
            params = {"lam": g(rng)}
        else:
            params = {}
        return {**params, "x": x}

    return draw


def _family_trial(tag: str) -> Trial:
    def check(draw, n_max):
        params = {k: v for k, v in draw.items() if k != "x"}
        if "N" in params:
            n_max = min(n_max, int(params["N"]))
        report = verify_identity(tag, params, draw["x"], n_max)
        return report.counterexample

    return Trial(_family_draw(tag), check)


# summation formulas


def _sum_draw(tag):
    names = SUM_IDENTITIES[tag]

    def draw(rng, index, n_max):
        return {name: random_parameter(rng, 0.1) for name in names}

    return draw


def _sum_trial(tag: str) -> Trial:
    def prepare(rng, n_max):
        if tag != "S630":
            return None
        # Settle how the S630 right-hand factor reads before any trial runs.
        draw = _sum_draw(tag)
        for _ in range(MAX_RETRIES):
            try:
                return resolve_s630_factor(draw(rng, 0, n_max), 3)
            except (InvalidParameter, DenominatorPole):
                continue
        raise InvalidParameter("could not resolve the S630 reading")

    def check(draw, n_max, context=None):
        report = verify_sum(tag, draw, n_max, s630_reading=context)
        if report.counterexample is not None:
            return report.counterexample
        return rederive(tag, draw, n_max).counterexample

    return Trial(_sum_draw(tag), check, prepare)


# hypergeometric oracle equivalence


def random_terminating_spec(rng: random.Random, max_pq: int = 5, max_n: int = 10):
    p = rng.randint(1, max_pq)
    q = rng.randint(0, max_pq)
    n = rng.randint(0, max_n)
    num = [GaussianRational(-n)] + [random_parameter(rng, 0.3) for _ in range(p - 1)]
    rng.shuffle(num)
    den = [random_parameter(rng, 0.3) for _ in range(q)]
    return hyp(num, den, random_gaussian(rng))


def _oracle_trial() -> Trial:
    def draw(rng, index, n_max):
        spec = random_terminating_spec(rng, 5, min(n_max, 10))
        return {"num": tuple(spec.numerator_params), "den": tuple(spec.denominator_params), "z": spec.argument}

    def check(draw, n_max):
        fast = eval_terminating(hyp(draw["num"], draw["den"], draw["z"]))
        slow = naive_hypergeometric(draw["num"], draw["den"], draw["z"])
        return None if fast == slow else counterexample(0, fast, slow, "eval vs naive")

    return Trial(draw, check)


TAGS: dict[str, Callable[[], Trial]] = {
    "roundtrip-L": lambda: _roundtrip_trial("L"),
    "roundtrip-Ltilde": lambda: _roundtrip_trial("Ltilde"),
    "roundtrip-Lab": lambda: _roundtrip_trial("Lab"),
    "roundtrip-binomial": lambda: _roundtrip_trial("binomial-unsigned"),
    "dixon": _dixon_trial,
    "chu-vandermonde": _chu_trial,
    "theorem41": _theorem41_trial,
    "eq448": _eq448_trial,
    "eq450": lambda: _sides_trial(eq450_sides, _odd_a_draw, with_b=False),
    "eq460": lambda: _sides_trial(eq460_sides, _odd_a_draw, with_b=False),
    "eq470": _eq470_trial,
    "sun-chen": _sun_chen_trial,
    "oracle-hyper": _oracle_trial,
    **{tag: (lambda tag=tag: _family_trial(tag)) for tag in IDENTITIES},
    **{tag: (lambda tag=tag: _sum_trial(tag)) for tag in SUM_IDENTITIES},
}


def run_campaign(
    tag: str,
    trials: int,
    n_max: int,
    seed: int,
    *,
    mutate: Optional[str] = None,
) -> VerificationReport:
    """Run ``trials`` seeded draws of ``tag``; stop at the first failure.

    Raises KeyError for an unknown tag.  A trial that cannot find a valid
    draw within MAX_RETRIES attempts ends the campaign with status
    ``invalid-parameter``.
    """
    if tag not in TAGS:
        raise KeyError(tag)
    if mutate is not None and not tag.startswith("roundtrip-"):
        raise ValueError("kernel mutation only applies to roundtrip campaigns")
    if mutate is not None:
        trial = _roundtrip_trial(tag.removeprefix("roundtrip-"), mutate)
    else:
        trial = TAGS[tag]()
    rng = random.Random(seed)
    status = "pass"
    failure = None
    first_draw = None
    notes = []
    with stopwatch() as clock:
        context = None
        if trial.prepare is not None:
            try:
                context = trial.prepare(rng, n_max)
            except InvalidParameter as exc:
                status = "invalid-parameter"
                notes.append(str(exc))
            if context is not None:
                notes.append(f"S630 right-hand factor read as {context} (oracle-confirmed)")
        for index in range(trials if status == "pass" else 0):
            for _ in range(MAX_RETRIES):
                draw = trial.draw(rng, index, n_max)
                try:
                    if trial.prepare is not None:
                        result = trial.check(draw, n_max, context)
                    else:
                        result = trial.check(draw, n_max)
                except (InvalidParameter, DenominatorPole):
                    continue
                break
            else:
                status = "invalid-parameter"
                notes.append(f"trial {index}: no valid draw in {MAX_RETRIES} attempts")
                first_draw = first_draw or draw
                break
            if first_draw is None:
                first_draw = draw
            if result is not None:
                status = "fail"
                failure = dict(result, trial=index)
                first_draw = draw
                break
    return VerificationReport(
        identity=tag,
        parameter_draw=_draw_json(first_draw or {}),
        n_max=n_max,
        trials=trials,
        status=status,
        counterexample=failure,
        elapsed_ms=clock.ms,
        seed=seed,
        notes=notes,
    )
