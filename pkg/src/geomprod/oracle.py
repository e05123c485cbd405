"""Built-in test functions and independent reference computations.

Everything here is deliberately computed by a different route than the
estimator: closed forms, explicit multi-index enumeration, and truncated
power-series arithmetic. The test suite compares the estimator against
these.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .combinatorics import IndexSet
from .core import coefficient
from .errors import ZeroSampleError


@dataclass(frozen=True)
class BuiltinFunction:
    """A built-in analytic function with f(0) = 1.

    Tags: 'one', 'cos', 'exp_scaled' (exp(c*x)), 'half_sin_shifted'
    (1 + sin(x)/2), 'monomial_exp' (exp(c*x^k)).
    """

    tag: str
    c: float = 0.0
    k: int = 1

    _TAGS = ("one", "cos", "exp_scaled", "half_sin_shifted", "monomial_exp")

    def __post_init__(self):
        if self.tag not in self._TAGS:
            raise ValueError(f"unknown builtin tag {self.tag!r}")
        if self.tag == "monomial_exp" and self.k < 1:
            raise ValueError(f"monomial order must be positive, got {self.k}")

    @property
    def even(self) -> bool:
        if self.tag in ("one", "cos"):
            return True
        if self.tag == "monomial_exp":
            return self.k % 2 == 0
        return False

    def __call__(self, x: float) -> float:
        if self.tag == "one":
            return 1.0
        if self.tag == "cos":
            return math.cos(x)
        if self.tag == "exp_scaled":
            return math.exp(self.c * x)
        if self.tag == "half_sin_shifted":
            return 1.0 + 0.5 * math.sin(x)
        return math.exp(self.c * x**self.k)

    def signed_log(self, x: float) -> tuple[int, float]:
        """(sign, log|f(x)|), computed without under/overflow for the
        exponential tags."""
        if self.tag == "one":
            return 1, 0.0
        if self.tag == "exp_scaled":
            return 1, self.c * x
        if self.tag == "monomial_exp":
            return 1, self.c * x**self.k
        if self.tag == "half_sin_shifted":
            return 1, math.log1p(0.5 * math.sin(x))
        v = math.cos(x)
        if v == 0.0:
            raise ZeroSampleError(x)
        return (1 if v > 0 else -1), math.log(abs(v))

    def __str__(self) -> str:
        if self.tag == "exp_scaled":
            return f"exp_scaled(c={self.c})"
        if self.tag == "monomial_exp":
            return f"monomial_exp(c={self.c}, k={self.k})"
        return self.tag


ONE = BuiltinFunction("one")
COS = BuiltinFunction("cos")
HALF_SIN_SHIFTED = BuiltinFunction("half_sin_shifted")


def exp_scaled(c: float) -> BuiltinFunction:
    return BuiltinFunction("exp_scaled", c=c)


def monomial_exp(c: float, k: int) -> BuiltinFunction:
    return BuiltinFunction("monomial_exp", c=c, k=k)


def euler_partial_product(x: float, N: int) -> float:
    """prod_{n=1}^{N} cos(x / 2^n): the bisection product for sin(x)/x."""
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    return math.prod(math.cos(x / 2**n) for n in range(1, N + 1))


def sinc(x: float) -> float:
    """sin(x)/x with the removable singularity handled by series."""
    if abs(x) < 1e-4:
        x2 = x * x
        return 1.0 - x2 / 6.0 + x2 * x2 / 120.0
    return math.sin(x) / x


_BRUTE_SET_MAX = 3
_BRUTE_N_MAX = 10


def multiindex_bruteforce(f, S: IndexSet, r: float, x: float, N: int) -> float:
    """Log of the unconsolidated product: one factor per tuple (n_j), j in S,
    each n_j >= 1, sum(n_j) <= N, evaluated at coeff(S, r) * x / r^sum.

    Small scales only; pairs with core.log_partial_product as the two sides
    of the index-consolidation identity.
    """
    m = len(S)
    if m > _BRUTE_SET_MAX or N > _BRUTE_N_MAX:
        raise ValueError(
            f"brute-force scale exceeded: |S| <= {_BRUTE_SET_MAX}, N <= {_BRUTE_N_MAX}"
        )
    coeff = coefficient(S, r)
    terms = []
    for tup in itertools.product(range(1, N + 1), repeat=m):
        total = sum(tup)
        if total > N:
            continue
        _, log_f = f.signed_log(coeff * x / r**total)
        terms.append(log_f)
    return math.fsum(terms)


@dataclass(frozen=True)
class ComponentSeries:
    """Power-series coefficients c_1..c_K of log f for a builtin."""

    function: BuiltinFunction
    coefficients: tuple[float, ...]

    def log_f(self, x: float) -> float:
        return math.fsum(c * x**k for k, c in enumerate(self.coefficients, start=1))

    def f(self, x: float) -> float:
        return math.exp(self.log_f(x))


def _taylor_coefficients(f: BuiltinFunction, K_max: int) -> list[float]:
    a = [0.0] * (K_max + 1)
    a[0] = 1.0
    if f.tag == "cos":
        for m in range(1, K_max // 2 + 1):
            a[2 * m] = (-1) ** m / math.factorial(2 * m)
    elif f.tag == "exp_scaled":
        for n in range(1, K_max + 1):
            a[n] = f.c**n / math.factorial(n)
    elif f.tag == "monomial_exp":
        for m in range(1, K_max // f.k + 1):
            a[f.k * m] = f.c**m / math.factorial(m)
    elif f.tag == "half_sin_shifted":
        for m in range(0, (K_max - 1) // 2 + 1):
            a[2 * m + 1] = 0.5 * (-1) ** m / math.factorial(2 * m + 1)
    return a


def _log_of_series(a: list[float]) -> list[float]:
    """Coefficients g_1.. of log f from Taylor coefficients a_0=1, a_1, ...

    Standard recurrence from f' = g' f:
    g_n = a_n - (1/n) * sum_{j=1}^{n-1} j * g_j * a_{n-j}.
    """
    K = len(a) - 1
    g = [0.0] * (K + 1)
    for n in range(1, K + 1):
        acc = sum(j * g[j] * a[n - j] for j in range(1, n))
        g[n] = a[n] - acc / n
    return g


def log_series_components(f: BuiltinFunction, K_max: int = 12) -> ComponentSeries:
    """c_1..c_{K_max} of log f, derived by truncated series arithmetic."""
    if K_max > 12:
        raise ValueError(f"K_max must be <= 12, got {K_max}")
    g = _log_of_series(_taylor_coefficients(f, K_max))
    return ComponentSeries(function=f, coefficients=tuple(g[1:]))


def truncated_invariance_closed_form(
    c: float, k: int, r: float, x: float, N: int
) -> float:
    """Exact log of the N-truncated order-k product of exp(c x^k):
    c * x^k * (1 - r^(-k*N))."""
    if not r > 1.0:
        raise ValueError(f"ratio r must exceed 1, got {r}")
    return c * x**k * (1.0 - r ** (-k * N))
