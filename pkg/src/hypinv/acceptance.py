"""The acceptance suite: seven exact-verification criteria with time budgets.

Used by ``tests/test_acceptance.py`` and by the ``selftest`` CLI command.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Optional

from .campaign import run_campaign
from .errors import DenominatorPole, InvalidParameter
from .sums import SUM_IDENTITIES, resolve_s630_factor
from .orthopoly import IDENTITIES

SEED = 20240601

KERNEL_FAMILIES = ("L", "L-inv", "Ltilde", "Ltilde-inv", "Lab", "Lab-inv")


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    seconds: float
    budget: Optional[float]
    detail: str = ""
    failing_tag: Optional[str] = None
    reports: list = field(default_factory=list)

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        budget = f" (budget {self.budget:.0f} s)" if self.budget else ""
        text = f"[{mark}] criterion {self.number}: {self.name} - {self.seconds:.2f} s{budget}"
        return text + (f" - {self.detail}" if self.detail else "")


def _campaigns(number, name, budget, jobs, mutate=None) -> CriterionResult:
    start = time.perf_counter()
    reports = []
    failing = None
    for tag, trials, n_max in jobs:
        kwargs = {"mutate": mutate} if mutate is not None and tag.startswith("roundtrip-") else {}
        report = run_campaign(tag, trials, n_max, SEED, **kwargs)
        reports.append(report)
        if not report.passed:
            failing = report
            break
    seconds = time.perf_counter() - start
    if failing is not None:
        detail = f"{failing.identity} {failing.status}: {failing.counterexample or failing.notes}"
        return CriterionResult(number, name, False, seconds, budget, detail, failing.identity, reports)
    over = seconds > budget
    detail = f"over time budget ({seconds:.1f} s > {budget} s)" if over else f"{len(reports)} campaigns"
    return CriterionResult(number, name, not over, seconds, budget, detail, None, reports)


def criterion_1(mutate: Optional[str] = None) -> CriterionResult:
    """Apply-then-invert is the identity for L, Ltilde and Lab (200 draws,
    length-16 sequences, forced a = 0 and a = -1 where admissible)."""
    jobs = [("roundtrip-L", 200, 15), ("roundtrip-Ltilde", 200, 15), ("roundtrip-Lab", 200, 15)]
    return _campaigns(1, "inverse roundtrips", 30, jobs, mutate)


def criterion_2() -> CriterionResult:
    jobs = [("dixon", 200, 10), ("chu-vandermonde", 200, 12)]
    return _campaigns(2, "Dixon and Chu-Vandermonde", 10, jobs)


def criterion_3() -> CriterionResult:
    jobs = [
        ("theorem41", 200, 10),
        ("eq450", 200, 10),
        ("eq460", 200, 10),
        ("eq470", 200, 10),  # r cycles through 0, 1, 2
        ("sun-chen", 200, 10),
    ]
    return _campaigns(3, "binomial-transform connection", 20, jobs)


def criterion_4() -> CriterionResult:
    jobs = [(tag, 50, 6) for tag in IDENTITIES]
    return _campaigns(4, "orthogonal polynomial identities", 60, jobs)


def criterion_5() -> CriterionResult:
    start = time.perf_counter()
    # Resolve the S630 reading on a fixed draw before any campaign runs.
    probe = {"a": "7/3", "b": "1/3", "c": "2/5", "d": "3/7"}
    try:
        reading = resolve_s630_factor(probe, 4)
    except (InvalidParameter, DenominatorPole) as exc:
        return CriterionResult(5, "summation formulas", False, 0.0, 60, f"S630 resolution failed: {exc}")
    if reading != "subscripted":
        return CriterionResult(
            5, "summation formulas", False, 0.0, 60, f"S630 oracle selected reading {reading!r}"
        )
    result = _campaigns(5, "summation formulas", 60, [(tag, 50, 5) for tag in SUM_IDENTITIES])
    result.seconds = time.perf_counter() - start
    if result.passed:
        result.detail += "; S630 factor confirmed as (a/2)_n"
    return result


def criterion_6() -> CriterionResult:
    return _campaigns(6, "eval_terminating vs brute force", 10, [("oracle-hyper", 500, 10)])


def criterion_7() -> CriterionResult:
    """Every single-family sign flip at (2, 1) must make criterion 1 fail."""
    start = time.perf_counter()
    survivors = []
    for family in KERNEL_FAMILIES:
        if criterion_1(mutate=family).passed:
            survivors.append(family)
    seconds = time.perf_counter() - start
    detail = f"undetected mutations: {survivors}" if survivors else f"all {len(KERNEL_FAMILIES)} mutations detected"
    return CriterionResult(7, "mutation sensitivity", not survivors, seconds, None, detail)


CRITERIA: list[Callable[[], CriterionResult]] = [
    criterion_1,
    criterion_2,
    criterion_3,
    criterion_4,
    criterion_5,
    criterion_6,
    criterion_7,
]


def run_acceptance(mutate: Optional[str] = None, echo: Callable[[str], None] = print) -> list[CriterionResult]:
    """Run all criteria, echoing one line each.

    ``mutate`` injects a (2, 1) sign flip into one kernel family for
    criterion 1 only; used to demonstrate that the suite can fail.
    """
    results = []
    for criterion in CRITERIA:
        result = criterion_1(mutate) if criterion is criterion_1 else criterion()
        echo(result.line())
        results.append(result)
    return results
