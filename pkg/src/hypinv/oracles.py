"""Brute-force reference computations.

Nothing here shares code with the optimized paths it is used to check:
rising factorials are re-expanded from scratch, series are summed term by
term from their definition, and triangular inverses come from plain forward
substitution.
"""

from __future__ import annotations

import math

from .errors import DenominatorPole, NonTerminating
from .exactnum import ONE, ZERO, GaussianRational, as_gaussian


def naive_rising(gamma, k: int) -> GaussianRational:
    gamma = as_gaussian(gamma)
    out = ONE
    for j in range(k):
        out = out * (gamma + j)
    return out


def naive_hypergeometric(num, den, z) -> GaussianRational:
    """Sum ``prod (a_i)_k / (k! prod (b_j)_k) z^k`` for ``k = 0..n``."""
    num = [as_gaussian(a) for a in num]
    den = [as_gaussian(b) for b in den]
    z = as_gaussian(z)
    stops = [-int(a) for a in num if a.is_integer() and a.re <= 0]
    if not stops:
        raise NonTerminating("no nonpositive-integer numerator parameter")
    n = min(stops)
    total = ZERO
    for k in range(n + 1):
        top = ONE
        for a in num:
            top = top * naive_rising(a, k)
        bottom = GaussianRational(math.factorial(k))
        for b in den:
            bottom = bottom * naive_rising(b, k)
        if bottom.is_zero():
            raise DenominatorPole(f"denominator vanishes at k={k}", k=k)
        total = total + top * z**k / bottom
    return total


def forward_substitution_inverse(coeff, size: int) -> list[list[GaussianRational]]:
    """Inverse of the lower-triangular matrix ``A[n][k] = coeff(n, k)``.

    Solves ``sum_m A[n][m] B[m][k] = [n == k]`` row by row.
    """
    a = [[as_gaussian(coeff(n, k)) for k in range(n + 1)] for n in range(size)]
    b: list[list[GaussianRational]] = []
    for n in range(size):
        if a[n][n].is_zero():
            raise ZeroDivisionError(f"zero diagonal entry at n={n}")
        row = []
        for k in range(n + 1):
            acc = ONE if k == n else ZERO
            for m in range(k, n):
                acc = acc - a[n][m] * b[m][k]
            row.append(acc / a[n][n])
        b.append(row)
    return b


def dense_apply(matrix, x) -> list[GaussianRational]:
    return [
        sum((matrix[n][k] * x[k] for k in range(n + 1)), ZERO) for n in range(len(x))
    ]
