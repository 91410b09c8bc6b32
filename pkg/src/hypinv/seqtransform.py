"""Lower-triangular sequence transforms and their exact inverses.

A transform maps a sequence prefix ``x_0..x_N`` to ``y_n = sum_{k<=n} a(n,k) x_k``.
Kernels are lazy coefficient functions with a per-instance cache, so a kernel
can be shared by many applications without materializing a matrix.

Families (``TransformSpec.kind``)::

    binomial-signed        (-1)^k C(n,k)
    binomial-unsigned      C(n,k)
    binomial-unsigned-inv  (-1)^(n-k) C(n,k)
    L          a           (-n)_k (n+a)_k
    Ltilde     a           (-n)_k / (1+a+n)_k
    Lab        a, b        (-n)_k (n+a)_k / (k! (b)_k)

each with an ``-inv`` partner given in closed form, including the limit
formulas at a = 0 (and a = -1 for ``Ltilde-inv``).
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from math import factorial
from typing import Callable, Iterable, Optional

from .errors import InvalidParameter
from .exactnum import ONE, ZERO, GaussianRational, as_gaussian, binomial, pochhammer

__all__ = [
    "Sequence",
    "as_sequence",
    "TriangularKernel",
    "TransformSpec",
    "KINDS",
    "kernel_for",
    "invert",
    "apply",
    "apply_row",
    "binomial_transform",
    "ltilde_inv_minus1_alt_coeff",
    "theorem41_sides",
    "eq448_sides",
    "eq445_sides",
    "eq450_sides",
    "eq460_sides",
    "eq470_sides",
    "sun_chen_sides",
]

Sequence = tuple[GaussianRational, ...]


def as_sequence(values: Iterable) -> Sequence:
    seq = tuple(as_gaussian(v) for v in values)
    if not seq:
        raise ValueError("a sequence prefix must contain at least x_0")
    return seq


class TriangularKernel:
    """Coefficients ``a(n, k)``, ``0 <= k <= n``, of a triangular transform."""

    def __init__(self, coeff: Callable[[int, int], GaussianRational], description: str = ""):
        self._coeff = coeff
        self.description = description
        self._cache: dict[tuple[int, int], GaussianRational] = {}
        self._lock = threading.Lock()

    def __repr__(self):
        return f"TriangularKernel({self.description!r})"

    def coeff(self, n: int, k: int) -> GaussianRational:
        if not 0 <= k <= n:
            raise IndexError(f"kernel index (n={n}, k={k}) outside 0 <= k <= n")
        key = (n, k)
        value = self._cache.get(key)
        if value is None:
            value = as_gaussian(self._coeff(n, k))
            with self._lock:
                self._cache[key] = value
        return value

    __call__ = coeff

    def row(self, n: int) -> list[GaussianRational]:
        return [self.coeff(n, k) for k in range(n + 1)]

    def matrix(self, size: int) -> list[list[GaussianRational]]:
        return [self.row(n) for n in range(size)]

    def is_invertible(self, size: int) -> bool:
        return all(not self.coeff(n, n).is_zero() for n in range(size))

    def compose(self, inner: TriangularKernel) -> TriangularKernel:
        """Kernel of ``self o inner``: ``sum_m self(n,m) inner(m,k)``."""

        def coeff(n, k):
            return sum((self.coeff(n, m) * inner.coeff(m, k) for m in range(k, n + 1)), ZERO)

        return TriangularKernel(coeff, f"({self.description}) o ({inner.description})")

    def scaled_columns(self, c: Callable[[int], GaussianRational]) -> TriangularKernel:
        """Kernel ``a(n,k) * c(k)``."""
        return TriangularKernel(
            lambda n, k: self.coeff(n, k) * c(k), f"{self.description} * c_k"
        )

    def scaled_rows(self, c: Callable[[int], GaussianRational]) -> TriangularKernel:
        """Kernel ``c(n) * a(n,k)``."""
        return TriangularKernel(
            lambda n, k: c(n) * self.coeff(n, k), f"c_n * {self.description}"
        )

    def with_flipped_sign(self, n: int, k: int) -> TriangularKernel:
        """Copy of this kernel with the sign of entry ``(n, k)`` reversed."""
        target = (n, k)

        def coeff(i, j):
            value = self.coeff(i, j)
            return -value if (i, j) == target else value

        return TriangularKernel(coeff, f"{self.description} [sign flipped at {target}]")


def identity_kernel() -> TriangularKernel:
    return TriangularKernel(lambda n, k: ONE if n == k else ZERO, "identity")


def apply(kernel: TriangularKernel, x) -> Sequence:
    x = as_sequence(x)
    return tuple(apply_row(kernel, x, n) for n in range(len(x)))


def apply_row(kernel: TriangularKernel, x, n: int) -> GaussianRational:
    """Entry ``n`` of the transformed sequence."""
    if n >= len(x):
        raise IndexError(f"n={n} outside the prefix of length {len(x)}")
    total = ZERO
    for k in range(n + 1):
        total = total + kernel.coeff(n, k) * x[k]
    return total


# -- parameter validation -----------------------------------------------------


def _is_int_at_most(value: GaussianRational, bound: int) -> bool:
    return value.is_integer() and value.re <= bound


def _require(condition: bool, message: str):
    if not condition:
        raise InvalidParameter(message)


KINDS = (
    "identity",
    "binomial-signed",
    "binomial-unsigned",
    "binomial-unsigned-inv",
    "L",
    "L-inv",
    "Ltilde",
    "Ltilde-inv",
    "Lab",
    "Lab-inv",
)

_INVERSE_KIND = {
    "identity": "identity",
    "binomial-signed": "binomial-signed",
    "binomial-unsigned": "binomial-unsigned-inv",
    "binomial-unsigned-inv": "binomial-unsigned",
    "L": "L-inv",
    "L-inv": "L",
    "Ltilde": "Ltilde-inv",
    "Ltilde-inv": "Ltilde",
    "Lab": "Lab-inv",
    "Lab-inv": "Lab",
}

_NEEDS_A = {"L", "L-inv", "Ltilde", "Ltilde-inv", "Lab", "Lab-inv"}
_NEEDS_B = {"Lab", "Lab-inv"}


@dataclass(frozen=True)
class TransformSpec:
    """A transform family plus its parameters; validated on construction."""

    kind: str
    a: Optional[GaussianRational] = None
    b: Optional[GaussianRational] = field(default=None)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InvalidParameter(f"unknown transform kind {self.kind!r}")
        if self.kind in _NEEDS_A:
            _require(self.a is not None, f"{self.kind} needs parameter a")
            object.__setattr__(self, "a", as_gaussian(self.a))
        elif self.a is not None:
            raise InvalidParameter(f"{self.kind} takes no parameter a")
        if self.kind in _NEEDS_B:
            _require(self.b is not None, f"{self.kind} needs parameter b")
            object.__setattr__(self, "b", as_gaussian(self.b))
        elif self.b is not None:
            raise InvalidParameter(f"{self.kind} takes no parameter b")

        a, b = self.a, self.b
        if self.kind in ("L", "L-inv", "Lab", "Lab-inv"):
            _require(not _is_int_at_most(a, -1), f"a = {a} must not be a negative integer")
        if self.kind in ("Ltilde", "Ltilde-inv"):
            _require(not _is_int_at_most(a, -2), f"a = {a} must not be in {{-2, -3, ...}}")
        if self.kind in _NEEDS_B:
            _require(not _is_int_at_most(b, 0), f"b = {b} must not be a nonpositive integer")

    def to_json(self) -> dict:
        out = {"kind": self.kind}
        if self.a is not None:
            out["a"] = _param_json(self.a)
        if self.b is not None:
            out["b"] = _param_json(self.b)
        return out

    @classmethod
    def from_json(cls, data: dict) -> TransformSpec:
        a = data.get("a")
        b = data.get("b")
        return cls(
            data["kind"],
            GaussianRational.from_json(a) if a is not None else None,
            GaussianRational.from_json(b) if b is not None else None,
        )


def _param_json(value: GaussianRational):
    return str(value.re) if value.is_real() else value.to_json()


# -- kernels ------------------------------------------------------------------


def _binomial_signed(n, k):
    return GaussianRational((-1) ** k * binomial(n, k))


def _binomial_unsigned(n, k):
    return GaussianRational(binomial(n, k))


def _binomial_unsigned_inv(n, k):
    return GaussianRational((-1) ** (n - k) * binomial(n, k))


def _l_coeff(a):
    return lambda n, k: pochhammer(-n, k) * pochhammer(n + a, k)


def _dixon_weight(a, n, k):
    # (a)_k (1+a/2)_k (-n)_k / (k! (a/2)_k (1+a+n)_k), shared by the
    # L, Lab and (via scaling) Ltilde inverses for a not in {0, -1, ...}.
    top = pochhammer(a, k) * pochhammer(1 + a / 2, k) * pochhammer(-n, k)
    bottom = factorial(k) * pochhammer(a / 2, k) * pochhammer(1 + a + n, k)
    return top / bottom


def _l0_bracket(n, k):
    # Coefficients of  -x_0 + 2 sum_k (-n)_k / (1+n)_k x_k  with the -x_0
    # folded into k = 0 (giving 1 there).
    if k == 0:
        return ONE
    return 2 * pochhammer(-n, k) / pochhammer(1 + n, k)


def _linv_coeff(a):
    if a.is_zero():
        return lambda n, k: _l0_bracket(n, k) / factorial(n) ** 2
    return lambda n, k: _dixon_weight(a, n, k) / (factorial(n) * pochhammer(1 + a, n))


def _ltilde_coeff(a):
    return lambda n, k: pochhammer(-n, k) / pochhammer(1 + a + n, k)


def _ltilde_inv_coeff(a):
    if a.is_zero():

        def coeff(n, k):
            if n == 0:
                return ONE
            return 2 * pochhammer(-n, k) * pochhammer(n, k) / (factorial(k) ** 2)

        return coeff
    if a == -1:

        def coeff(n, k):
            if n == 0:
                return ONE
            sign = -1 if k % 2 else 1
            return (2 * n - 1) * sign * pochhammer(k, n - 1) / (factorial(n - k) * factorial(k))

        return coeff

    def coeff(n, k):
        prefactor = pochhammer(a, n) * pochhammer(1 + a / 2, n) / (factorial(n) * pochhammer(a / 2, n))
        return prefactor * pochhammer(-n, k) * pochhammer(n + a, k) / (factorial(k) * pochhammer(1 + a, k))

    return coeff


def ltilde_inv_minus1_alt_coeff(n: int, k: int) -> GaussianRational:
    """Coefficients of the alternative (index-shifted) form of the inverse of
    ``Ltilde`` at a = -1: ``x_0``, ``x_0 - x_1``, and for n > 1
    ``(1-2n) sum_{j<n} (1-n)_j (n)_j / (j! (2)_j) x_{j+1}``."""
    if n == 0:
        return ONE
    if n == 1:
        return ONE if k == 0 else -ONE
    if k == 0:
        return ZERO
    j = k - 1
    return (1 - 2 * n) * pochhammer(1 - n, j) * pochhammer(n, j) / (factorial(j) * pochhammer(2, j))


def _lab_coeff(a, b):
    return lambda n, k: pochhammer(-n, k) * pochhammer(n + a, k) / (factorial(k) * pochhammer(b, k))


def _lab_inv_coeff(a, b):
    if a.is_zero():
        return lambda n, k: pochhammer(b, n) / factorial(n) * _l0_bracket(n, k)
    return lambda n, k: pochhammer(b, n) / pochhammer(1 + a, n) * _dixon_weight(a, n, k)


def kernel_for(spec: TransformSpec) -> TriangularKernel:
    a, b = spec.a, spec.b
    kind = spec.kind
    if kind == "identity":
        return identity_kernel()
    if kind == "binomial-signed":
        coeff = _binomial_signed
    elif kind == "binomial-unsigned":
        coeff = _binomial_unsigned
    elif kind == "binomial-unsigned-inv":
        coeff = _binomial_unsigned_inv
    elif kind == "L":
        coeff = _l_coeff(a)
    elif kind == "L-inv":
        coeff = _linv_coeff(a)
    elif kind == "Ltilde":
        coeff = _ltilde_coeff(a)
    elif kind == "Ltilde-inv":
        coeff = _ltilde_inv_coeff(a)
    elif kind == "Lab":
        coeff = _lab_coeff(a, b)
    else:
        coeff = _lab_inv_coeff(a, b)
    label = kind + "".join(f" {name}={v}" for name, v in (("a", a), ("b", b)) if v is not None)
    return TriangularKernel(coeff, label)


def invert(spec: TransformSpec) -> TransformSpec:
    return TransformSpec(_INVERSE_KIND[spec.kind], spec.a, spec.b)


def binomial_transform(x, signed: bool = True) -> Sequence:
    kind = "binomial-signed" if signed else "binomial-unsigned"
    return apply(kernel_for(TransformSpec(kind)), x)


# -- binomial-transform relations ----------------------------------------------


def _check_theorem41_params(a, b):
    _require(not _is_int_at_most(a, -1), f"a = {a} must not be a negative integer")
    _require(not _is_int_at_most(b, 0), f"b = {b} must not be a nonpositive integer")
    _require(
        not _is_int_at_most(1 + a - b, 0),
        f"b = {b} must not lie in {{1+a, 2+a, ...}}",
    )


def theorem41_sides(a, b, x, n: int) -> tuple[GaussianRational, GaussianRational]:
    """Both sides of ``Lab(a,b)(x_hat)_n = (-1)^n (1+a-b)_n/(b)_n Lab(a,1+a-b)(x)_n``."""
    a, b = as_gaussian(a), as_gaussian(b)
    _check_theorem41_params(a, b)
    x = as_sequence(x)
    x_hat = binomial_transform(x[: n + 1])
    lhs = apply_row(kernel_for(TransformSpec("Lab", a, b)), x_hat, n)
    c = 1 + a - b
    rhs = (-1) ** n * pochhammer(c, n) / pochhammer(b, n) * apply_row(
        kernel_for(TransformSpec("Lab", a, c)), x, n
    )
    return lhs, rhs


def _lab_weight(a, b, n, k):
    return pochhammer(-n, k) * pochhammer(n + a, k) / (factorial(k) * pochhammer(b, k))


def eq445_sides(a, b, x, n: int) -> tuple[GaussianRational, GaussianRational]:
    """The Lab relation written as explicit sums with the signed binomial transform."""
    a, b = as_gaussian(a), as_gaussian(b)
    _check_theorem41_params(a, b)
    x = as_sequence(x)[: n + 1]
    x_hat = [
        sum((GaussianRational((-1) ** j * binomial(k, j)) * x[j] for j in range(k + 1)), ZERO)
        for k in range(n + 1)
    ]
    c = 1 + a - b
    lhs = sum((_lab_weight(a, b, n, k) * x_hat[k] for k in range(n + 1)), ZERO)
    rhs = sum((_lab_weight(a, c, n, k) * x[k] for k in range(n + 1)), ZERO)
    return lhs, (-1) ** n * pochhammer(c, n) / pochhammer(b, n) * rhs


def eq448_sides(a, b, x, n: int) -> tuple[GaussianRational, GaussianRational]:
    """Same relation for the unsigned transform ``y_n = sum C(n,k) x_k``."""
    a, b = as_gaussian(a), as_gaussian(b)
    _check_theorem41_params(a, b)
    x = as_sequence(x)[: n + 1]
    y = binomial_transform(x, signed=False)
    c = 1 + a - b
    lhs = sum((_lab_weight(a, b, n, k) * y[k] for k in range(n + 1)), ZERO)
    rhs = sum(((-1) ** k * _lab_weight(a, c, n, k) * x[k] for k in range(n + 1)), ZERO)
    return lhs, (-1) ** n * pochhammer(c, n) / pochhammer(b, n) * rhs


def eq450_sides(a, x, n: int) -> tuple[GaussianRational, GaussianRational]:
    """``Lab(a,(1+a)/2)(x_hat)_n`` and ``(-1)^n Lab(a,(1+a)/2)(x)_n`` via kernels."""
    a = as_gaussian(a)
    b = (1 + a) / 2
    _check_theorem41_params(a, b)
    x = as_sequence(x)
    kernel = kernel_for(TransformSpec("Lab", a, b))
    x_hat = binomial_transform(x[: n + 1])
    return apply_row(kernel, x_hat, n), (-1) ** n * apply_row(kernel, x, n)


def eq460_sides(a, x, n: int) -> tuple[GaussianRational, GaussianRational]:
    """The b = (1+a)/2 case written out as weighted sums."""
    a = as_gaussian(a)
    b = (1 + a) / 2
    _check_theorem41_params(a, b)
    x = as_sequence(x)[: n + 1]
    x_hat = binomial_transform(x)
    weights = [_lab_weight(a, b, n, k) for k in range(n + 1)]
    lhs = sum((w * xh for w, xh in zip(weights, x_hat)), ZERO)
    rhs = sum((w * xk for w, xk in zip(weights, x)), ZERO)
    return lhs, (-1) ** n * rhs


def _eq470_weight(r, n, k):
    return (-1) ** k * binomial(n, k) * binomial(n + k + 2 * r, k + r)


def eq470_sides(r: int, x, n: int) -> tuple[GaussianRational, GaussianRational]:
    """Integer form of the b = (1+a)/2 relation at a = 2r + 1."""
    if r < 0:
        raise InvalidParameter("r must be a nonnegative integer")
    x = as_sequence(x)
    if n >= len(x):
        raise IndexError(f"n={n} outside the prefix of length {len(x)}")
    x_hat = binomial_transform(x[: n + 1])
    lhs = sum((_eq470_weight(r, n, k) * x_hat[k] for k in range(n + 1)), ZERO)
    rhs = sum((_eq470_weight(r, n, k) * x[k] for k in range(n + 1)), ZERO)
    return lhs, (-1) ** n * rhs


def sun_chen_sides(x, n: int) -> tuple[GaussianRational, GaussianRational]:
    """r = 0 case with the unsigned transform ``y_n = sum C(n,k) x_k``:
    ``sum (-1)^k C(n,k) C(n+k,k) y_k = (-1)^n sum C(n,k) C(n+k,k) x_k``."""
    x = as_sequence(x)[: n + 1]
    y = binomial_transform(x, signed=False)
    lhs = sum(((-1) ** k * binomial(n, k) * binomial(n + k, k) * y[k] for k in range(n + 1)), ZERO)
    rhs = sum((binomial(n, k) * binomial(n + k, k) * x[k] for k in range(n + 1)), ZERO)
    return lhs, (-1) ** n * rhs
