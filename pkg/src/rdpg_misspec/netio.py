"""Plain-text matrix files.

Format: one header line `rows cols kind symmetric` (kind is a short label
such as weighted/binary/coords; symmetric is 0 or 1), followed by one line
per row of whitespace-separated values. Values are written with 17
significant digits, which round-trips IEEE doubles exactly, so write/read
is bit-exact. The format is language neutral and diffable.
"""

from __future__ import annotations

from typing import Tuple

import numpy as np

from .errors import ParameterError

__all__ = ["write_matrix", "read_matrix"]


def write_matrix(path: str, m: np.ndarray, kind: str, symmetric: bool) -> None:
    m = np.asarray(m, dtype=float)
    if m.ndim != 2:
        raise ParameterError("only 2-d matrices are supported")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"{m.shape[0]} {m.shape[1]} {kind} {1 if symmetric else 0}\n")
        for row in m:
            fh.write(" ".join(format(v, ".17g") for v in row) + "\n")


def read_matrix(path: str) -> Tuple[np.ndarray, str, bool]:
    with open(path, "r", encoding="utf-8") as fh:
        header = fh.readline().split()
        if len(header) != 4:
            raise ParameterError(f"bad matrix header in {path}: expected 'rows cols kind symmetric'")
        try:
            rows, cols = int(header[0]), int(header[1])
            symmetric = bool(int(header[3]))
        except ValueError as exc:
            raise ParameterError(f"bad matrix header in {path}: {exc}") from None
        kind = header[2]
        data = np.loadtxt(fh, ndmin=2)
    if data.shape != (rows, cols):
        raise ParameterError(f"matrix body is {data.shape}, header promised {(rows, cols)}")
    return data, kind, symmetric
