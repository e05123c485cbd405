"""Forecasting from sampled data.

A raw (t, value) series is shifted so time starts at 0, normalized so the
first value is exactly 1, and bridged to the estimator's geometric sample
points with a shape-preserving cubic interpolant. Coverage checks guarantee
every required sample point lies inside the sampled range before a forecast
runs.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass

import numpy as np
from scipy.interpolate import PchipInterpolator

from .combinatorics import enumerate_subsets
from .core import Estimate, GmpConfig, coefficient, estimate
from .errors import (
    DomainCoverageError,
    NonPositiveSampleError,
    NormalizationError,
    SignalFormatError,
    ZeroSampleError,
)

MIN_POINTS = 4


@dataclass(frozen=True)
class Normalization:
    """Affine record: stored = offset + scale * raw."""

    offset: float
    scale: float

    def apply(self, raw: float) -> float:
        return self.offset + self.scale * raw

    def invert(self, stored: float) -> float:
        return (stored - self.offset) / self.scale


def load_csv(path) -> list[tuple[float, float]]:
    """Parse a two-column CSV of (t, value) pairs.

    An unparseable first row is treated as a header. Rows are sorted by t;
    duplicate abscissas and series shorter than MIN_POINTS are rejected.
    """
    rows: list[tuple[float, float]] = []
    with open(path, newline="", encoding="utf-8") as fh:
        for lineno, record in enumerate(csv.reader(fh), start=1):
            if not record or (len(record) == 1 and not record[0].strip()):
                continue
            if len(record) != 2:
                raise SignalFormatError(
                    f"{path}:{lineno}: expected two columns, got {len(record)}"
                )
            try:
                t, v = float(record[0]), float(record[1])
            except ValueError:
                if lineno == 1:
                    continue  # header
                raise SignalFormatError(
                    f"{path}:{lineno}: could not parse {record!r} as numbers"
                ) from None
            rows.append((t, v))
    rows.sort(key=lambda tv: tv[0])
    for (t0, _), (t1, _) in zip(rows, rows[1:]):
        if t0 == t1:
            raise SignalFormatError(f"{path}: duplicate abscissa {t0!r}")
    if len(rows) < MIN_POINTS:
        raise SignalFormatError(
            f"{path}: need at least {MIN_POINTS} points, got {len(rows)}"
        )
    return rows


class SampledSignal:
    """Immutable sampled series with a shape-preserving cubic interpolant.

    Acts as a FunctionSource over [0, t_last]; queries outside the sampled
    range raise DomainCoverageError.
    """

    def __init__(
        self,
        abscissas: np.ndarray,
        values: np.ndarray,
        normalization: Normalization,
    ):
        abscissas = np.asarray(abscissas, dtype=float)
        values = np.asarray(values, dtype=float)
        if abscissas[0] != 0.0:
            raise ValueError("first abscissa must be 0 after time shift")
        if np.any(np.diff(abscissas) <= 0):
            raise ValueError("abscissas must be strictly increasing")
        if np.any(values <= 0):
            bad = int(np.argmax(values <= 0))
            raise NormalizationError(
                f"non-positive value {values[bad]!r} at t={abscissas[bad]!r}"
            )
        if values[0] != 1.0:
            raise ValueError("normalized value at t=0 must be exactly 1")
        self.abscissas = abscissas
        self.values = values
        self.normalization = normalization
        self._interp = PchipInterpolator(abscissas, values, extrapolate=False)
        self.abscissas.setflags(write=False)
        self.values.setflags(write=False)

    @property
    def domain(self) -> tuple[float, float]:
        return 0.0, float(self.abscissas[-1])

    def __call__(self, x: float) -> float:
        lo, hi = self.domain
        if x < lo or x > hi:
            raise DomainCoverageError(x, lo, hi)
        return float(self._interp(x))

    def signed_log(self, x: float) -> tuple[int, float]:
        v = self(x)
        if v == 0.0:
            raise ZeroSampleError(x)
        if v < 0.0:
            raise NonPositiveSampleError(x, v, "interpolated signal value")
        return 1, math.log(v)


def normalize(
    raw: list[tuple[float, float]],
    mode: str = "divide_by_first",
    a: float | None = None,
    b: float | None = None,
) -> SampledSignal:
    """Build a SampledSignal from a raw series.

    Modes: 'divide_by_first' (scale so the first value is 1), 'affine'
    (stored = a + b*raw; must map the first value to 1), 'none' (raw values
    must already start at 1).
    """
    ts = np.array([t for t, _ in raw], dtype=float)
    vs = np.array([v for _, v in raw], dtype=float)
    ts = ts - ts[0]
    if mode == "divide_by_first":
        if vs[0] == 0.0:
            raise NormalizationError("first value is zero; cannot divide by it")
        norm = Normalization(offset=0.0, scale=1.0 / vs[0])
    elif mode == "affine":
        if a is None or b is None or b == 0.0:
            raise ValueError("affine mode needs offset a and nonzero scale b")
        norm = Normalization(offset=float(a), scale=float(b))
    elif mode == "none":
        norm = Normalization(offset=0.0, scale=1.0)
    else:
        raise ValueError(f"unknown normalization mode {mode!r}")
    stored = norm.offset + norm.scale * vs
    if abs(stored[0] - 1.0) > 1e-9:
        raise NormalizationError(
            f"normalized value at t=0 is {stored[0]!r}, must be 1"
        )
    stored[0] = 1.0
    bad = np.nonzero(stored <= 0)[0]
    if bad.size:
        i = int(bad[0])
        raise NormalizationError(
            f"non-positive value {stored[i]!r} at t={ts[i]!r} after normalization"
        )
    return SampledSignal(ts, stored, norm)


@dataclass(frozen=True)
class CoverageReport:
    ok: bool
    max_required: float
    domain_end: float
    max_feasible_x: float


def coverage_check(sig: SampledSignal, cfg: GmpConfig, x: float) -> CoverageReport:
    """Check that every geometric sample point for (cfg, x) lies inside the
    sampled range; report the largest feasible horizon either way."""
    domain_end = sig.domain[1]
    if x == 0.0:
        return CoverageReport(True, 0.0, domain_end, math.inf)
    max_required = max(
        coefficient(S, cfg.r) * abs(x) / cfg.r ** len(S)
        for S in enumerate_subsets(cfg.base)
    )
    feasible = abs(x) * domain_end / max_required
    return CoverageReport(max_required <= domain_end, max_required, domain_end, feasible)


@dataclass(frozen=True)
class ForecastResult:
    normalized: Estimate
    raw_value: float
    coverage: CoverageReport


def forecast(sig: SampledSignal, x: float, cfg: GmpConfig) -> ForecastResult:
    """Multiproduct estimate of the signal at horizon x, mapped back to raw
    units through the stored normalization record."""
    report = coverage_check(sig, cfg, x)
    if not report.ok:
        raise DomainCoverageError(
            report.max_required,
            0.0,
            report.domain_end,
            f"forecast at x={x} infeasible; largest feasible x is "
            f"{report.max_feasible_x:.6g}",
        )
    est = estimate(sig, x, cfg)
    return ForecastResult(
        normalized=est,
        raw_value=sig.normalization.invert(est.value),
        coverage=report,
    )
