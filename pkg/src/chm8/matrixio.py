"""Reading and writing the ``chm-matrix-v1`` JSON matrix format.

Three entry representations are understood::

    cartesian   [re, im]
    angle       theta (radians), value exp(i*theta)
    butson-log  integer k, value exp(2*pi*i*k/q)

Writers default to cartesian with 17 significant digits, which round-trips
IEEE doubles exactly.
"""
from __future__ import annotations

import json
import sys

import numpy as np

from .errors import MatrixFormatError
from .verify import is_butson

FORMAT = "chm-matrix-v1"
REPRS = ("cartesian", "angle", "butson-log")


def _num(x: float) -> float:
    # 17 significant digits; float() keeps JSON output numeric
    return float(f"{x:.17g}")


def to_document(H, repr: str = "cartesian", q: int | None = None) -> dict:
    H = np.asarray(H, dtype=np.complex128)
    n = H.shape[0]
    doc = {"format": FORMAT, "n": n, "repr": repr}
    if repr == "cartesian":
        doc["entries"] = [[[_num(z.real), _num(z.imag)] for z in row] for row in H]
    elif repr == "angle":
        doc["entries"] = [[_num(float(np.angle(z))) for z in row] for row in H]
    elif repr == "butson-log":
        if q is None:
            raise MatrixFormatError("butson-log output needs q")
        check = is_butson(H, q)
        if not check.is_butson:
            raise MatrixFormatError(f"matrix is not of Butson type with q={q}")
        doc["q"] = q
        doc["entries"] = check.logs.tolist()
    else:
        raise MatrixFormatError(f"unknown repr {repr!r}")
    return doc


def from_document(doc) -> np.ndarray:
    if not isinstance(doc, dict) or doc.get("format") != FORMAT:
        raise MatrixFormatError(f"not a {FORMAT} document")
    try:
        n = int(doc["n"])
        rep = doc["repr"]
        rows = doc["entries"]
    except (KeyError, TypeError, ValueError) as exc:
        raise MatrixFormatError(f"missing or invalid field: {exc}") from None
    if rep not in REPRS:
        raise MatrixFormatError(f"unknown repr {rep!r}")
    if n < 1 or len(rows) != n or any(len(r) != n for r in rows):
        raise MatrixFormatError(f"entries must be an {n}x{n} array")
    try:
        if rep == "cartesian":
            arr = np.array(rows, dtype=float)
            if arr.shape != (n, n, 2):
                raise MatrixFormatError("cartesian entries must be [re, im] pairs")
            H = arr[..., 0] + 1j * arr[..., 1]
        elif rep == "angle":
            H = np.exp(1j * np.array(rows, dtype=float))
        else:
            q = int(doc["q"])
            if q < 1:
                raise MatrixFormatError("q must be positive")
            k = np.array(rows)
            if k.dtype.kind not in "iu":
                raise MatrixFormatError("butson-log entries must be integers")
            H = np.exp(2j * np.pi * k / q)
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, MatrixFormatError):
            raise
        raise MatrixFormatError(str(exc)) from None
    if not np.all(np.isfinite(H)):
        raise MatrixFormatError("entries must be finite")
    return H.astype(np.complex128)


def dumps(H, repr: str = "cartesian", q: int | None = None) -> str:
    return json.dumps(to_document(H, repr, q))


def loads(text: str) -> np.ndarray:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MatrixFormatError(f"invalid JSON: {exc}") from None
    return from_document(doc)


def read_matrix(path) -> np.ndarray:
    if str(path) == "-":
        return loads(sys.stdin.read())
    try:
        with open(path) as fh:
            return loads(fh.read())
    except OSError as exc:
        raise MatrixFormatError(f"cannot read {path}: {exc}") from None


def write_matrix(H, path, repr: str = "cartesian", q: int | None = None) -> None:
    text = dumps(H, repr, q)
    if str(path) == "-":
        sys.stdout.write(text + "\n")
        return
    with open(path, "w") as fh:
        fh.write(text + "\n")
