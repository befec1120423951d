"""Deterministic on-disk formats: long-form CSV grids and JSON sidecars.

Grids serialize row-major as axis1,axis2,re,im with %.17g floats (exact
float64 round-trip); curves as named columns.  Writers stage to <path>.tmp
and os.replace into place so rereads never see partial files, and contain
no timestamps or environment echoes: the same inputs produce byte-identical
files on every run.
"""

import dataclasses
import io
import json
import os

import numpy as np

from .errors import ConfigError

__all__ = [
    "write_grid_csv",
    "read_grid_csv",
    "write_table_csv",
    "write_json",
    "sanitize",
]

_FMT = "%.17g"


def _atomic_write(path, text):
    tmp = f"{path}.tmp"
    with open(tmp, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)
    os.replace(tmp, path)


def write_grid_csv(path, axis1, axis2, values, names=("axis1", "axis2")):
    """Long-form complex grid: one row per node, row-major over axis1."""
    axis1 = np.asarray(axis1, dtype=float)
    axis2 = np.asarray(axis2, dtype=float)
    values = np.asarray(values)
    if values.shape != (axis1.size, axis2.size):
        raise ConfigError(
            f"grid shape {values.shape} does not match axes "
            f"({axis1.size}, {axis2.size})"
        )
    rows = np.column_stack(
        [
            np.repeat(axis1, axis2.size),
            np.tile(axis2, axis1.size),
            values.real.ravel(),
            values.imag.ravel(),
        ]
    )
    buf = io.StringIO()
    np.savetxt(
        buf,
        rows,
        fmt=_FMT,
        delimiter=",",
        header=f"{names[0]},{names[1]},re,im",
        comments="",
    )
    _atomic_write(path, buf.getvalue())


def read_grid_csv(path):
    """Inverse of write_grid_csv: (axis1, axis2, complex values)."""
    rows = np.loadtxt(path, delimiter=",", skiprows=1, ndmin=2)
    if rows.shape[1] != 4:
        raise ConfigError(f"{path}: expected 4 columns, got {rows.shape[1]}")
    a1 = rows[:, 0]
    n2 = int(np.argmax(a1 != a1[0])) or rows.shape[0]  # leading block length
    if rows.shape[0] % n2:
        raise ConfigError(f"{path}: row count {rows.shape[0]} is not a grid")
    n1 = rows.shape[0] // n2
    axis1 = a1[::n2].copy()
    axis2 = rows[:n2, 1].copy()
    values = (rows[:, 2] + 1j * rows[:, 3]).reshape(n1, n2)
    return axis1, axis2, values


def write_table_csv(path, names, columns):
    """Curve/table CSV: equal-length named columns."""
    columns = [np.asarray(c, dtype=float) for c in columns]
    if len(names) != len(columns):
        raise ConfigError("names and columns length mismatch")
    n = columns[0].size
    if any(c.size != n for c in columns):
        raise ConfigError("table columns must have equal length")
    buf = io.StringIO()
    np.savetxt(
        buf,
        np.column_stack(columns),
        fmt=_FMT,
        delimiter=",",
        header=",".join(names),
        comments="",
    )
    _atomic_write(path, buf.getvalue())


def sanitize(obj):
    """Meta dict -> JSON-ready structure (dataclasses and arrays included)."""
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return sanitize(dataclasses.asdict(obj))
    if isinstance(obj, dict):
        return {str(k): sanitize(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [sanitize(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return [sanitize(v) for v in obj.tolist()]
    if isinstance(obj, np.floating):
        return float(obj)
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, complex):
        return {"re": obj.real, "im": obj.imag}
    return obj


def write_json(path, obj):
    _atomic_write(path, json.dumps(sanitize(obj), sort_keys=True, indent=2) + "\n")
