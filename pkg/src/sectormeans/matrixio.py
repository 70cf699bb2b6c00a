"""Matrix file I/O.

Schema: UTF-8 JSON object {"n": int, "data": n x n array of [re, im]
doubles}.  Explicit re/im pairs keep the format locale-proof and make
write-then-parse round-trips bit-exact for finite doubles (json emits the
shortest representation that reparses to the same double).
"""

from __future__ import annotations

import json
import math
import os
from typing import Union

import numpy as np

from .linalg import PreconditionError, as_matrix

__all__ = ["MatrixFormatError", "parse_matrix", "write_matrix", "loads_matrix", "dumps_matrix"]


class MatrixFormatError(PreconditionError):
    """Raised when a matrix file does not match the schema."""


def _entry(value, i: int, j: int) -> complex:
    if (
        not isinstance(value, list)
        or len(value) != 2
        or not all(isinstance(p, (int, float)) and not isinstance(p, bool) for p in value)
    ):
        raise MatrixFormatError(
            f"data[{i}][{j}] must be a [re, im] pair of numbers, got {value!r}"
        )
    re, im = float(value[0]), float(value[1])
    if not (math.isfinite(re) and math.isfinite(im)):
        raise MatrixFormatError(f"data[{i}][{j}] has non-finite entry [{re}, {im}]")
    return complex(re, im)


def loads_matrix(text: str) -> np.ndarray:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MatrixFormatError(f"invalid json at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    if not isinstance(obj, dict):
        raise MatrixFormatError(f"top level must be an object, got {type(obj).__name__}")
    missing = {"n", "data"} - set(obj)
    if missing:
        raise MatrixFormatError(f"missing required field(s): {', '.join(sorted(missing))}")
    n = obj["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise MatrixFormatError(f"field 'n' must be a positive integer, got {n!r}")
    data = obj["data"]
    if not isinstance(data, list) or len(data) != n:
        got = len(data) if isinstance(data, list) else type(data).__name__
        raise MatrixFormatError(f"field 'data' must be a list of {n} rows, got {got}")
    out = np.empty((n, n), dtype=np.complex128)
    for i, row in enumerate(data):
        if not isinstance(row, list) or len(row) != n:
            got = len(row) if isinstance(row, list) else type(row).__name__
            raise MatrixFormatError(f"data[{i}] must be a list of {n} entries, got {got}")
        for j, value in enumerate(row):
            out[i, j] = _entry(value, i, j)
    return out


def dumps_matrix(A: np.ndarray) -> str:
    A = as_matrix(A)
    n = A.shape[0]
    payload = {
        "n": n,
        "data": [[[A[i, j].real, A[i, j].imag] for j in range(n)] for i in range(n)],
    }
    return json.dumps(payload)


def parse_matrix(path: Union[str, os.PathLike]) -> np.ndarray:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise MatrixFormatError(f"cannot read {path}: {exc.strerror or exc}") from None
    try:
        return loads_matrix(text)
    except MatrixFormatError as exc:
        raise MatrixFormatError(f"{path}: {exc}") from None


def write_matrix(A: np.ndarray, path: Union[str, os.PathLike]) -> None:
    text = dumps_matrix(A)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
        fh.write("\n")
