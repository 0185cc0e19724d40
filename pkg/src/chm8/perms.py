"""Permutations as index arrays.

A permutation ``p`` stands for the matrix whose ``k``-th column is the unit
vector ``e_{p[k]}``, so ``(P @ X)[p[m]] == X[m]`` and ``(X @ P)[:, k] ==
X[:, p[k]]``. One-line notation lists ``p`` 1-based.
"""
from __future__ import annotations

import numpy as np


def as_perm(p) -> np.ndarray:
    p = np.asarray(p, dtype=np.intp)
    if p.ndim != 1 or sorted(p.tolist()) != list(range(len(p))):
        raise ValueError(f"not a permutation of 0..n-1: {p.tolist()}")
    return p


def identity(n: int) -> np.ndarray:
    return np.arange(n, dtype=np.intp)


def inverse(p) -> np.ndarray:
    p = as_perm(p)
    out = np.empty_like(p)
    out[p] = np.arange(len(p))
    return out


def compose(p, q) -> np.ndarray:
    """Index map ``i -> p[q[i]]``."""
    return as_perm(p)[as_perm(q)]


def matrix(p) -> np.ndarray:
    p = as_perm(p)
    n = len(p)
    P = np.zeros((n, n))
    P[p, np.arange(n)] = 1.0
    return P


def apply(p1, X, p2) -> np.ndarray:
    """``P1 @ X @ P2`` without forming the matrices."""
    X = np.asarray(X)
    return X[inverse(p1)][:, as_perm(p2)]


def one_line(p) -> str:
    return "[" + ",".join(str(int(v) + 1) for v in as_perm(p)) + "]"


def parse_one_line(text: str) -> np.ndarray:
    body = text.strip().lstrip("[").rstrip("]")
    return as_perm([int(v) - 1 for v in body.split(",") if v.strip()])
