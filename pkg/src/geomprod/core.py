"""The geometric-multiproduct estimator.

Sample points live on geometric sequences x_n = coeff(S, r) * x / r^n, one
sequence per index set S. Each partial product multiplies function values on
one sequence with integer composition-count weights; the estimate is the
quotient of odd-cardinality partial products over even-cardinality ones,
accumulated in log space with sign tracking.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Protocol

from .combinatorics import (
    IndexSet,
    enumerate_subsets,
    factor_count,
    log_multiplicity,
    multiplicity,
)
from .errors import GeomprodError


class FunctionSource(Protocol):
    """Anything the estimator can sample.

    signed_log(x) returns (sign, log|f(x)|). Implementations raise
    ZeroSampleError for f(x) == 0, and signal-backed sources additionally
    raise NonPositiveSampleError / DomainCoverageError.
    """

    def __call__(self, x: float) -> float: ...

    def signed_log(self, x: float) -> tuple[int, float]: ...


@dataclass(frozen=True)
class GmpConfig:
    """Estimator parameters: ratio r, truncation n_max, generating base set,
    and the declared parity mode ('all' or 'even')."""

    r: float
    n_max: int
    base: IndexSet
    parity: str = "all"

    def __post_init__(self):
        if not self.r > 1.0:
            raise ValueError(f"ratio r must exceed 1, got {self.r}")
        if self.n_max < len(self.base):
            raise ValueError(
                f"n_max={self.n_max} must be at least |base|={len(self.base)}"
            )
        if self.parity not in ("all", "even"):
            raise ValueError(f"parity must be 'all' or 'even', got {self.parity!r}")
        if self.parity == "even" and any(k % 2 for k in self.base):
            raise ValueError(f"even parity mode requires an all-even base, got {self.base}")


@dataclass(frozen=True)
class LogProduct:
    """One truncated partial product, held as log|value| plus its sign."""

    log_value: float
    sign: int
    term_count: int
    min_point: float


@dataclass(frozen=True)
class Estimate:
    value: float
    log_value: float
    sign: int
    x: float
    config: GmpConfig
    factor_count: int


def _check_r(r: float) -> None:
    if not r > 1.0:
        raise ValueError(f"ratio r must exceed 1, got {r}")


def coefficient(S: IndexSet, r: float) -> float:
    """The sequence coefficient prod_{k in S} (r^k - 1)^(1/k)."""
    _check_r(r)
    return math.prod((r**k - 1.0) ** (1.0 / k) for k in S)


def sequence_point(S: IndexSet, r: float, x: float, n: int) -> float:
    """The n-th point of the geometric sequence for index set S."""
    _check_r(r)
    if n < 1:
        raise ValueError(f"sequence index must be >= 1, got {n}")
    return coefficient(S, r) * x / r**n


def _weighted_term(log_f: float, n: int, m: int) -> float:
    w = multiplicity(n, m)
    try:
        return log_f * w
    except OverflowError:
        # weight exceeds float range; carry it through lgamma
        if log_f == 0.0:
            return 0.0
        return math.copysign(
            math.exp(log_multiplicity(n, m) + math.log(abs(log_f))), log_f
        )


def log_partial_product(
    f: FunctionSource, S: IndexSet, r: float, x: float, n_max: int
) -> LogProduct:
    """Accumulate sum_{n=|S|}^{n_max} binom(n-1, |S|-1) * log f(x_n).

    Compensated summation via math.fsum; negative function values flip the
    tracked sign when their weight is odd.
    """
    _check_r(r)
    m = len(S)
    if n_max < m:
        raise ValueError(f"n_max={n_max} must be at least |S|={m}")
    coeff = coefficient(S, r)
    terms = []
    sign = 1
    point = 0.0
    for n in range(m, n_max + 1):
        point = coeff * x / r**n
        try:
            s, log_f = f.signed_log(point)
        except GeomprodError as e:
            e.args = (f"{e.args[0]} [subset {S}, n={n}]",)
            raise
        if s < 0 and multiplicity(n, m) % 2:
            sign = -sign
        terms.append(_weighted_term(log_f, n, m))
    log_value = math.fsum(terms)
    if not math.isfinite(log_value):
        raise GeomprodError(
            f"non-finite partial product accumulation for subset {S} at x={x}"
        )
    return LogProduct(
        log_value=log_value, sign=sign, term_count=n_max - m + 1, min_point=point
    )


def _signed_exp(sign: int, log_value: float) -> float:
    try:
        return sign * math.exp(log_value)
    except OverflowError:
        raise GeomprodError(f"estimate overflows: log value {log_value}") from None


def _quotient(
    f: FunctionSource,
    subsets,
    r: float,
    x: float,
    n_max: int,
    cfg: GmpConfig,
) -> Estimate:
    if x == 0.0:
        count = sum(math.comb(n_max, len(S)) for S in subsets)
        return Estimate(
            value=1.0, log_value=0.0, sign=1, x=x, config=cfg, factor_count=count
        )
    signed_logs = []
    sign = 1
    count = 0
    for S in subsets:
        lp = log_partial_product(f, S, r, x, n_max)
        parity = 1 if len(S) % 2 else -1
        signed_logs.append(parity * lp.log_value)
        sign *= lp.sign
        count += math.comb(n_max, len(S))
    log_value = math.fsum(signed_logs)
    if not math.isfinite(log_value):
        raise GeomprodError(f"non-finite estimate accumulation at x={x}")
    return Estimate(
        value=_signed_exp(sign, log_value),
        log_value=log_value,
        sign=sign,
        x=x,
        config=cfg,
        factor_count=count,
    )


def estimate(f: FunctionSource, x: float, cfg: GmpConfig) -> Estimate:
    """Full multiproduct estimate of f(x) under cfg."""
    family = enumerate_subsets(cfg.base)
    est = _quotient(f, family.members, cfg.r, x, cfg.n_max, cfg)
    assert est.factor_count == factor_count(cfg.base, cfg.n_max)
    return est


def component_estimate(
    f: FunctionSource,
    k: int,
    x: float,
    r: float,
    n_max: int,
    base: IndexSet,
    parity: str = "all",
) -> Estimate:
    """Estimate of the order-k component exp(c_k x^k): the quotient
    restricted to subsets of `base` whose greatest element is k."""
    if k not in base:
        raise ValueError(f"component order {k} not in base {base}")
    cfg = GmpConfig(r=r, n_max=n_max, base=base, parity=parity)
    subsets = [S for S in enumerate_subsets(base) if S.max_element == k]
    return _quotient(f, subsets, r, x, n_max, cfg)


def reconstruct_from_components(f: FunctionSource, x: float, cfg: GmpConfig) -> Estimate:
    """Product over k in base of the order-k component estimates.

    The subset family partitions by greatest element, so this regroups the
    exact factors of estimate() and must agree with it in log space.
    """
    logs = []
    sign = 1
    count = 0
    for k in cfg.base:
        comp = component_estimate(f, k, x, cfg.r, cfg.n_max, cfg.base, cfg.parity)
        logs.append(comp.log_value)
        sign *= comp.sign
        count += comp.factor_count
    log_value = math.fsum(logs)
    return Estimate(
        value=_signed_exp(sign, log_value),
        log_value=log_value,
        sign=sign,
        x=x,
        config=cfg,
        factor_count=count,
    )


def pollution_exponent(j: int, k: int, r: float) -> float:
    """Factor multiplying c_j x^j when the order-j component is sampled on
    the order-k sequence: (r^k - 1)^(j/k) / (r^j - 1). Exactly 1 for j == k."""
    _check_r(r)
    if j < 1 or k < 1:
        raise ValueError(f"orders must be positive, got j={j}, k={k}")
    if j == k:
        return 1.0
    return (r**k - 1.0) ** (j / k) / (r**j - 1.0)


def cutoff_n_max(K: float, r: float) -> int:
    """Truncation index with r^n_max ~ K held fixed: ceil(ln K / ln r)."""
    _check_r(r)
    if K < 2:
        raise ValueError(f"cutoff must be >= 2, got {K}")
    return max(1, math.ceil(math.log(K) / math.log(r)))
