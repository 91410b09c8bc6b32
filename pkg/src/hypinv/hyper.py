"""Terminating hypergeometric series over Q(i).

A series ``pFq(a_1..a_p; b_1..b_q; z)`` terminates when some numerator
parameter is a nonpositive integer; the one of least absolute value, ``-n``,
fixes the last nonzero term.  Only such series are evaluated here.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import DenominatorPole, NonTerminating
from .exactnum import ONE, ZERO, GaussianRational, as_gaussian, pochhammer

__all__ = [
    "HypSeriesSpec",
    "SeriesClass",
    "hyp",
    "classify",
    "truncation_index",
    "eval_terminating",
    "dixon_rhs",
    "chu_vandermonde_rhs",
]


@dataclass(frozen=True)
class HypSeriesSpec:
    numerator_params: tuple[GaussianRational, ...]
    denominator_params: tuple[GaussianRational, ...]
    argument: GaussianRational = ONE

    def __post_init__(self):
        object.__setattr__(
            self, "numerator_params", tuple(as_gaussian(a) for a in self.numerator_params)
        )
        object.__setattr__(
            self, "denominator_params", tuple(as_gaussian(b) for b in self.denominator_params)
        )
        object.__setattr__(self, "argument", as_gaussian(self.argument))

    @property
    def p(self) -> int:
        return len(self.numerator_params)

    @property
    def q(self) -> int:
        return len(self.denominator_params)

    def to_json(self) -> dict:
        return {
            "num": [a.to_json() for a in self.numerator_params],
            "den": [b.to_json() for b in self.denominator_params],
            "z": self.argument.to_json(),
        }

    @classmethod
    def from_json(cls, data: dict) -> HypSeriesSpec:
        return cls(
            tuple(GaussianRational.from_json(a) for a in data["num"]),
            tuple(GaussianRational.from_json(b) for b in data["den"]),
            GaussianRational.from_json(data.get("z", "1")),
        )


def hyp(num, den, z=1) -> HypSeriesSpec:
    """Shorthand constructor: ``hyp([-2, 1], [3], 1)``."""
    return HypSeriesSpec(tuple(num), tuple(den), z)


@dataclass(frozen=True)
class SeriesClass:
    terminating: bool
    truncation_index: Optional[int]
    well_poised: bool
    very_well_poised: bool
    saalschutzian: bool
    unit_argument: bool


def truncation_index(spec: HypSeriesSpec) -> Optional[int]:
    """``n`` such that ``-n`` is the nonpositive-integer numerator parameter
    of least absolute value, or ``None`` if the series does not terminate."""
    candidates = [-int(a) for a in spec.numerator_params if a.is_nonpositive_integer()]
    return min(candidates) if candidates else None


def _is_well_poised(spec: HypSeriesSpec) -> bool:
    if spec.p != spec.q + 1:
        return False
    a, b = spec.numerator_params, spec.denominator_params
    target = 1 + a[0]
    return all(bj + aj == target for bj, aj in zip(b, a[1:]))


def classify(spec: HypSeriesSpec) -> SeriesClass:
    n = truncation_index(spec)
    terminating = n is not None
    unit = spec.argument == 1
    well_poised = _is_well_poised(spec)
    very_well_poised = (
        well_poised and spec.p >= 2 and spec.numerator_params[1] == 1 + spec.numerator_params[0] / 2
    )
    excess = sum(spec.denominator_params, ZERO) - sum(spec.numerator_params, ZERO)
    return SeriesClass(
        terminating=terminating,
        truncation_index=n,
        well_poised=well_poised,
        very_well_poised=very_well_poised,
        saalschutzian=terminating and unit and excess == 1,
        unit_argument=unit,
    )


def eval_terminating(spec: HypSeriesSpec) -> GaussianRational:
    """Exact sum of a terminating series.

    Terms are generated by their ratio,
    ``t_{k+1} = t_k * prod(a_i + k) * z / ((k + 1) * prod(b_j + k))``.

    Raises NonTerminating if no numerator parameter is a nonpositive integer,
    and DenominatorPole if some ``b_j + k`` vanishes for ``k < n``.
    """
    n = truncation_index(spec)
    if n is None:
        raise NonTerminating(f"no nonpositive-integer numerator parameter in {spec}")
    num, den, z = spec.numerator_params, spec.denominator_params, spec.argument
    for b in den:
        if b.is_nonpositive_integer() and -int(b) < n:
            raise DenominatorPole(
                f"denominator parameter {b} lies in {{-{n - 1}, ..., 0}}",
                parameter=b,
                truncation_index=n,
            )
    term = ONE
    total = ONE
    for k in range(n):
        top = z
        for a in num:
            top = top * (a + k)
        bottom = GaussianRational(k + 1)
        for b in den:
            bottom = bottom * (b + k)
        term = term * top / bottom
        total = total + term
    return total


def _checked_quotient(numerator, denominator, what):
    if denominator.is_zero():
        raise DenominatorPole(f"{what} vanishes", factor=what)
    return numerator / denominator


def dixon_rhs(a, b, n: int) -> GaussianRational:
    """Closed form of the terminating well-poised 3F2(a, b, -n; 1+a-b, 1+a+n; 1)."""
    a, b = as_gaussian(a), as_gaussian(b)
    top = pochhammer(1 + a, n) * pochhammer(1 + a / 2 - b, n)
    bottom = pochhammer(1 + a / 2, n) * pochhammer(1 + a - b, n)
    return _checked_quotient(top, bottom, "(1+a/2)_n (1+a-b)_n")


def chu_vandermonde_rhs(a, b, n: int) -> GaussianRational:
    """Closed form ``(b-a)_n / (b)_n`` of 2F1(-n, a; b; 1)."""
    a, b = as_gaussian(a), as_gaussian(b)
    return _checked_quotient(pochhammer(b - a, n), pochhammer(b, n), "(b)_n")
