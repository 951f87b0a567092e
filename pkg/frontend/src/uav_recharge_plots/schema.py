"""Experiment CSV schema: required columns, typed rows, strict errors.

The renderer consumes only the CSV interface of the experiment runner; it
never recomputes any scheduling quantity.  Unknown columns are ignored;
missing or malformed ones raise SchemaError naming the offender.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass


class SchemaError(ValueError):
    """CSV does not match the experiment results schema."""


REQUIRED_COLUMNS = (
    "kind",
    "method",
    "n",
    "f_ms",
    "c_ms",
    "g_bar_ms",
    "delta",
    "omega",
    "trials",
    "seed",
    "fleet_mean",
    "fleet_std",
    "lb_mean",
    "approx_factor",
)

_FLOAT_COLUMNS = ("delta", "omega", "fleet_mean", "fleet_std", "lb_mean", "approx_factor")
_INT_COLUMNS = ("n", "trials")


@dataclass(frozen=True)
class ResultRow:
    kind: str
    method: str
    n: int
    f_ms: str
    c_ms: str
    g_bar_ms: str
    delta: float
    omega: float
    trials: int
    fleet_mean: float
    fleet_std: float
    lb_mean: float
    approx_factor: float


def read_rows(path, expected_kind: str | None = None) -> list[ResultRow]:
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        header = reader.fieldnames or []
        for column in REQUIRED_COLUMNS:
            if column not in header:
                raise SchemaError(f"missing required column '{column}'")
        rows = []
        for lineno, raw in enumerate(reader, start=2):
            values: dict = {}
            for column in _FLOAT_COLUMNS:
                try:
                    values[column] = float(raw[column])
                except (TypeError, ValueError) as exc:
                    raise SchemaError(
                        f"line {lineno}: column '{column}' is not numeric: {raw[column]!r}"
                    ) from exc
            for column in _INT_COLUMNS:
                try:
                    values[column] = int(raw[column])
                except (TypeError, ValueError) as exc:
                    raise SchemaError(
                        f"line {lineno}: column '{column}' is not an integer: {raw[column]!r}"
                    ) from exc
            rows.append(
                ResultRow(
                    kind=raw["kind"],
                    method=raw["method"],
                    f_ms=raw["f_ms"],
                    c_ms=raw["c_ms"],
                    g_bar_ms=raw["g_bar_ms"],
                    **values,
                )
            )
    if not rows:
        raise SchemaError("no data rows")
    if expected_kind is not None:
        off = {r.kind for r in rows} - {expected_kind}
        if off:
            raise SchemaError(
                f"expected kind '{expected_kind}', found {sorted(off)} in column 'kind'"
            )
    return rows
