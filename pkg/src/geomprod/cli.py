"""Command-line interface.

Subcommands: estimate, component, euler, sweep, count-factors, forecast.
Exit codes: 0 success, 2 usage error, 3 domain error (non-positive or zero
sample, coverage failure, normalization failure), 4 I/O error.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import asdict

from . import combinatorics, core, oracle, signal, sweeps
from .combinatorics import IndexSet
from .errors import (
    DomainCoverageError,
    GeomprodError,
    NonPositiveSampleError,
    NormalizationError,
    SignalFormatError,
    ZeroSampleError,
)

_DOMAIN_ERRORS = (
    ZeroSampleError,
    NonPositiveSampleError,
    DomainCoverageError,
    NormalizationError,
)


def parse_ratio(text: str) -> float:
    """A decimal ratio, or 'sqrt:N' for an exact-intent square root."""
    if text.startswith("sqrt:"):
        arg = float(text[len("sqrt:"):])
        return math.sqrt(arg)
    return float(text)


def parse_base(text: str) -> IndexSet:
    try:
        elements = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise ValueError(f"base must be comma-separated integers, got {text!r}") from None
    return IndexSet(tuple(sorted(elements)))


def parse_function(text: str) -> oracle.BuiltinFunction:
    """'one', 'cos', 'half_sin_shifted', 'exp_scaled:C', 'monomial_exp:C,K'."""
    name, _, args = text.partition(":")
    if name in ("one", "cos", "half_sin_shifted"):
        return oracle.BuiltinFunction(name)
    if name == "exp_scaled":
        return oracle.exp_scaled(float(args))
    if name == "monomial_exp":
        c_str, k_str = args.split(",")
        return oracle.monomial_exp(float(c_str), int(k_str))
    raise ValueError(f"unknown function {text!r}")


def _resolve_n_max(args, r: float, base: IndexSet) -> int:
    if args.n_max is not None:
        return args.n_max
    if args.cutoff is not None:
        return max(core.cutoff_n_max(args.cutoff, r), len(base))
    raise ValueError("one of --n-max or --cutoff is required")


def _config_dict(cfg: core.GmpConfig) -> dict:
    return {
        "r": cfg.r,
        "n_max": cfg.n_max,
        "base": list(cfg.base.elements),
        "parity": cfg.parity,
    }


def _estimate_dict(est: core.Estimate) -> dict:
    return {
        "value": est.value,
        "log_value": est.log_value,
        "sign": est.sign,
        "x": est.x,
        "factor_count": est.factor_count,
        "config": _config_dict(est.config),
    }


def _emit(text: str, args) -> None:
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_record(record: dict, args) -> None:
    if args.format == "csv":
        flat = _flatten(record)
        lines = [",".join(flat), ",".join(_csv_cell(record, key) for key in flat)]
        _emit("\n".join(lines) + "\n", args)
    else:
        _emit(json.dumps(record, indent=2, sort_keys=True) + "\n", args)


def _flatten(record: dict, prefix: str = "") -> list[str]:
    keys = []
    for key, val in sorted(record.items()):
        if isinstance(val, dict):
            keys.extend(_flatten(val, prefix + key + "."))
        else:
            keys.append(prefix + key)
    return keys


def _csv_cell(record: dict, dotted: str) -> str:
    val = record
    for part in dotted.split("."):
        val = val[part]
    if isinstance(val, float):
        return f"{val:.17g}"
    if isinstance(val, list):
        return ";".join(str(v) for v in val)
    return str(val)


def _add_estimator_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--function", required=True, type=parse_function)
    p.add_argument("--x", required=True, type=float)
    p.add_argument("--r", required=True, type=parse_ratio)
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--cutoff", type=int, default=None,
                   help="set n_max = ceil(ln K / ln r) instead of --n-max")
    p.add_argument("--base", required=True, type=parse_base)
    p.add_argument("--parity", choices=("all", "even"), default="all")


def _add_output_flags(p: argparse.ArgumentParser, default_format: str = "json") -> None:
    p.add_argument("--output", default=None, help="write to PATH instead of stdout")
    p.add_argument("--format", choices=("csv", "json"), default=default_format)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="geomprod",
        description="Extrapolation via weighted products over geometric sequences",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("estimate", help="estimate a builtin function at x")
    _add_estimator_flags(p)
    _add_output_flags(p)

    p = sub.add_parser("component", help="estimate one series component exp(c_k x^k)")
    _add_estimator_flags(p)
    p.add_argument("--k", required=True, type=int)
    _add_output_flags(p)

    p = sub.add_parser("euler", help="bisection cosine product vs sin(x)/x")
    p.add_argument("--x", required=True, type=float)
    p.add_argument("--n", required=True, type=int)
    _add_output_flags(p)

    p = sub.add_parser("sweep", help="error table over an x grid and r schedule")
    p.add_argument("--function", required=True, type=parse_function)
    p.add_argument("--grid", required=True,
                   help="START:STOP:STEP for the x grid")
    p.add_argument("--schedule", default=None,
                   help="comma-separated ratios; default 1+2^-t, t=1..8")
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--cutoff", type=int, default=None)
    p.add_argument("--base", required=True, type=parse_base)
    p.add_argument("--parity", choices=("all", "even"), default="all")
    _add_output_flags(p, default_format="csv")

    p = sub.add_parser("count-factors", help="multiplicity-weighted factor total")
    p.add_argument("--base", required=True, type=parse_base)
    p.add_argument("--n-max", required=True, type=int)
    p.add_argument("--parity", choices=("all", "even"), default="all")
    _add_output_flags(p, default_format="csv")

    p = sub.add_parser("forecast", help="forecast a sampled signal from CSV")
    p.add_argument("--csv", required=True, dest="csv_path")
    p.add_argument("--normalize", default="divide_by_first",
                   help="divide_by_first | none | affine:A,B")
    p.add_argument("--x", required=True, type=float)
    p.add_argument("--r", required=True, type=parse_ratio)
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--cutoff", type=int, default=None)
    p.add_argument("--base", required=True, type=parse_base)
    p.add_argument("--parity", choices=("all", "even"), default="all")
    _add_output_flags(p)

    return parser


def _cmd_estimate(args) -> int:
    n_max = _resolve_n_max(args, args.r, args.base)
    cfg = core.GmpConfig(r=args.r, n_max=n_max, base=args.base, parity=args.parity)
    est = core.estimate(args.function, args.x, cfg)
    _emit_record(_estimate_dict(est), args)
    return 0


def _cmd_component(args) -> int:
    n_max = _resolve_n_max(args, args.r, args.base)
    est = core.component_estimate(
        args.function, args.k, args.x, args.r, n_max, args.base, args.parity
    )
    record = _estimate_dict(est)
    record["k"] = args.k
    _emit_record(record, args)
    return 0


def _cmd_euler(args) -> int:
    product = oracle.euler_partial_product(args.x, args.n)
    reference = oracle.sinc(args.x)
    _emit_record(
        {
            "x": args.x,
            "n": args.n,
            "product": product,
            "sinc": reference,
            "abs_error": abs(product - reference),
        },
        args,
    )
    return 0


def _parse_grid(text: str) -> tuple[float, float, float]:
    parts = text.split(":")
    if len(parts) != 3:
        raise ValueError(f"grid must be START:STOP:STEP, got {text!r}")
    return float(parts[0]), float(parts[1]), float(parts[2])


def _threads() -> int:
    raw = os.environ.get("GEOMPROD_THREADS", "1")
    try:
        n = int(raw)
    except ValueError:
        raise ValueError(f"GEOMPROD_THREADS must be an integer, got {raw!r}") from None
    return n if n >= 0 else 1


def _cmd_sweep(args) -> int:
    if args.schedule is not None:
        schedule = tuple(parse_ratio(tok) for tok in args.schedule.split(","))
    else:
        schedule = sweeps.DEFAULT_SCHEDULE
    if args.n_max is not None:
        coupling, value = "fixed_n_max", args.n_max
    elif args.cutoff is not None:
        coupling, value = "fixed_cutoff", args.cutoff
    else:
        raise ValueError("one of --n-max or --cutoff is required")
    spec = sweeps.SweepSpec(
        function=args.function,
        grid=_parse_grid(args.grid),
        schedule=schedule,
        coupling=coupling,
        coupling_value=value,
        base=args.base,
        parity=args.parity,
    )
    rows = sweeps.grid_eval(spec, threads=_threads())
    if args.format == "json":
        _emit(json.dumps([asdict(row) for row in rows], indent=2) + "\n", args)
    else:
        _emit(sweeps.rows_to_csv(rows), args)
    return 0


def _cmd_count_factors(args) -> int:
    if args.parity == "even" and any(k % 2 for k in args.base):
        raise ValueError(f"even parity mode requires an all-even base, got {args.base}")
    count = combinatorics.factor_count(args.base, args.n_max)
    if args.format == "json":
        _emit(json.dumps({"base": list(args.base.elements), "n_max": args.n_max,
                          "factor_count": count}) + "\n", args)
    else:
        _emit(f"{count}\n", args)
    return 0


def _parse_normalize(text: str):
    if text in ("divide_by_first", "none"):
        return text, None, None
    if text.startswith("affine:"):
        a_str, b_str = text[len("affine:"):].split(",")
        return "affine", float(a_str), float(b_str)
    raise ValueError(f"unknown normalization mode {text!r}")


def _cmd_forecast(args) -> int:
    mode, a, b = _parse_normalize(args.normalize)
    raw = signal.load_csv(args.csv_path)
    sig = signal.normalize(raw, mode=mode, a=a, b=b)
    n_max = _resolve_n_max(args, args.r, args.base)
    cfg = core.GmpConfig(r=args.r, n_max=n_max, base=args.base, parity=args.parity)
    result = signal.forecast(sig, args.x, cfg)
    _emit_record(
        {
            "normalized": _estimate_dict(result.normalized),
            "raw_value": result.raw_value,
            "coverage": asdict(result.coverage),
        },
        args,
    )
    return 0


_COMMANDS = {
    "estimate": _cmd_estimate,
    "component": _cmd_component,
    "euler": _cmd_euler,
    "sweep": _cmd_sweep,
    "count-factors": _cmd_count_factors,
    "forecast": _cmd_forecast,
}


def _report_error(exc: Exception, args) -> None:
    reason = f"error: {type(exc).__name__}: {exc}".replace("\n", " ")
    print(reason, file=sys.stderr)
    if args is not None and getattr(args, "format", None) == "json":
        print(json.dumps({"error": {"type": type(exc).__name__, "message": str(exc)}}))


def run(argv=None) -> int:
    parser = build_parser()
    args = None
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except _DOMAIN_ERRORS as e:
        _report_error(e, args)
        return 3
    except SignalFormatError as e:
        _report_error(e, args)
        return 4
    except OSError as e:
        _report_error(e, args)
        return 4
    except GeomprodError as e:
        _report_error(e, args)
        return 3
    except ValueError as e:
        _report_error(e, args)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
