"""Exact representation theory and homology of twisted crossed products over tori."""

import json

from ._core import (
    ComputationError,
    Datum,
    Error,
    InvariantViolation,
    PreconditionError,
    ValidationError,
    fiber_dimensions,
    hecke_classify,
    hh0,
    hh_summary,
    hp_dimensions,
    k_ranks,
    preset_names,
    regular_class_count,
    run_cli,
    tau_check,
    trace_pairing,
)

__all__ = [
    "ComputationError",
    "Datum",
    "Error",
    "InvariantViolation",
    "PreconditionError",
    "ValidationError",
    "cli",
    "fiber_dimensions",
    "hecke_classify",
    "hh0",
    "hh_summary",
    "hp_dimensions",
    "k_ranks",
    "preset_names",
    "regular_class_count",
    "run_cli",
    "tau_check",
    "trace_pairing",
]


def cli(*args):
    """Run a subcommand and return its parsed JSON output; raises RuntimeError on a nonzero exit."""
    code, out, err = run_cli([str(a) for a in args])
    if code != 0:
        raise RuntimeError(f"exit {code}: {err.strip()}")
    return json.loads(out)
