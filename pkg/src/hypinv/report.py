"""Verification reports shared by the identity verifiers and the CLI."""

from __future__ import annotations

import json
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Optional

from .exactnum import GaussianRational

STATUSES = ("pass", "fail", "invalid-parameter")


def scalar_json(value):
    """Rational string for real values, ``[re, im]`` otherwise."""
    if isinstance(value, GaussianRational):
        return str(value.re) if value.is_real() else value.to_json()
    if isinstance(value, int):
        return str(value)
    return str(value)


@dataclass
class VerificationReport:
    identity: str
    parameter_draw: dict = field(default_factory=dict)
    n_max: int = 0
    trials: int = 1
    status: str = "pass"
    counterexample: Optional[dict] = None
    elapsed_ms: int = 0
    seed: Optional[int] = None
    notes: list = field(default_factory=list)

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")
        if self.status == "fail":
            if self.counterexample is None:
                raise ValueError("a failing report needs a counterexample")

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def __bool__(self):
        return self.passed

    def to_json(self) -> dict:
        return {
            "identity": self.identity,
            "parameter_draw": self.parameter_draw,
            "n_range": [0, self.n_max],
            "trials": self.trials,
            "status": self.status,
            "counterexample": self.counterexample,
            "elapsed_ms": self.elapsed_ms,
            "seed": self.seed,
            "notes": list(self.notes),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=False)

    @classmethod
    def from_json(cls, data: dict) -> VerificationReport:
        return cls(
            identity=data["identity"],
            parameter_draw=data.get("parameter_draw", {}),
            n_max=data["n_range"][1],
            trials=data.get("trials", 1),
            status=data["status"],
            counterexample=data.get("counterexample"),
            elapsed_ms=data.get("elapsed_ms", 0),
            seed=data.get("seed"),
            notes=data.get("notes", []),
        )


def counterexample(n, lhs, rhs, check: str = "") -> dict:
    out = {"n": n, "lhs": scalar_json(lhs), "rhs": scalar_json(rhs)}
    if check:
        out["check"] = check
    return out


def compare_sides(identity, params, n_max, sides_for_n, notes=()) -> VerificationReport:
    """Run ``sides_for_n(n)`` for n = 0..n_max; each call yields
    ``(label, lhs, rhs)`` triples.  Stops at the first mismatch."""
    with stopwatch() as clock:
        failure = None
        for n in range(n_max + 1):
            for label, lhs, rhs in sides_for_n(n):
                if lhs != rhs:
                    failure = counterexample(n, lhs, rhs, label)
                    break
            if failure is not None:
                break
    return VerificationReport(
        identity=identity,
        parameter_draw={name: scalar_json(v) for name, v in params.items()},
        n_max=n_max,
        status="fail" if failure else "pass",
        counterexample=failure,
        elapsed_ms=clock.ms,
        notes=list(notes),
    )


class _Clock:
    ms = 0


@contextmanager
def stopwatch():
    clock = _Clock()
    start = time.perf_counter()
    try:
        yield clock
    finally:
        clock.ms = int((time.perf_counter() - start) * 1000)
