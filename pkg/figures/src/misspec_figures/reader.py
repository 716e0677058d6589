"""Readers for the experiment CSV schemas.

The trial schema is consumed verbatim (header below); all numbers in the
figures come from these files. Aggregation here is limited to the mean and
standard error per plotted condition.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

TRIAL_COLUMNS = (
    "model", "n", "d", "r", "k", "noise", "gamma", "rho", "replicate", "seed",
    "err_2inf", "err_frob", "lower_bound", "deloc_scaled_max", "runtime_ms", "status",
)

SEMICIRCLE_COLUMNS = ("E", "eta", "emp_re", "emp_im", "ref_re", "ref_im", "abs_err")
DELOC_COLUMNS = ("position", "eigenvalue", "max_abs_entry")


class SchemaError(ValueError):
    """The CSV does not match the expected schema."""


@dataclass(frozen=True)
class ConditionStats:
    """Mean error and 2-SEM bar for one plotted condition."""

    key: Tuple
    x: float
    mean: float
    errbar: Optional[float]
    count: int


def _read_rows(path: str, required: Sequence[str]) -> List[dict]:
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        have = reader.fieldnames or []
        missing = [c for c in required if c not in have]
        if missing:
            raise SchemaError(f"missing column(s): {', '.join(missing)}")
        return list(reader)


def read_trials(path: str) -> List[dict]:
    """Trial rows with ok status and a recorded error, typed for plotting."""
    rows = _read_rows(path, TRIAL_COLUMNS)
    out = []
    for row in rows:
        if row["status"] != "ok" or not row["err_2inf"]:
            continue
        out.append(
            {
                "model": row["model"],
                "n": int(row["n"]),
                "d": int(row["d"]),
                "r": int(row["r"]),
                "k": int(row["k"]),
                "noise": row["noise"],
                "gamma": float(row["gamma"]) if row["gamma"] else None,
                "err_2inf": float(row["err_2inf"]),
            }
        )
    return out


def group_stats(
    rows: Sequence[dict], facet_keys: Sequence[str], x_key: str
) -> Dict[Tuple, List[ConditionStats]]:
    """Mean and 2-SEM of err_2inf per (facet value, x value), sorted by x.

    Facet keys must exist on the rows; each distinct facet tuple becomes
    one plotted series.
    """
    for key in facet_keys:
        if rows and key not in rows[0]:
            raise SchemaError(f"missing column(s): {key}")
    buckets: Dict[Tuple, Dict[float, List[float]]] = {}
    for row in rows:
        facet = tuple(row[k] for k in facet_keys)
        buckets.setdefault(facet, {}).setdefault(float(row[x_key]), []).append(row["err_2inf"])
    series: Dict[Tuple, List[ConditionStats]] = {}
    for facet in sorted(buckets, key=lambda t: tuple(str(v) if v is None else v for v in t)):
        stats = []
        for x in sorted(buckets[facet]):
            vals = np.asarray(buckets[facet][x])
            sem = float(vals.std(ddof=1) / np.sqrt(vals.size)) if vals.size > 1 else None
            stats.append(
                ConditionStats(
                    key=facet,
                    x=x,
                    mean=float(vals.mean()),
                    errbar=None if sem is None else 2.0 * sem,
                    count=vals.size,
                )
            )
        series[facet] = stats
    return series


def read_semicircle_curve(path: str) -> List[dict]:
    rows = _read_rows(path, SEMICIRCLE_COLUMNS)
    return [{k: float(row[k]) for k in SEMICIRCLE_COLUMNS} for row in rows]


def read_deloc_profile(path: str) -> List[dict]:
    rows = _read_rows(path, DELOC_COLUMNS)
    return [
        {
            "position": int(row["position"]),
            "eigenvalue": float(row["eigenvalue"]),
            "max_abs_entry": float(row["max_abs_entry"]),
        }
        for row in rows
    ]
