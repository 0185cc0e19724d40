"""Hadamard verification, dephasing and Butson detection."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, NonUnimodularInput
from .numerics import DEFAULT_TOL, ToleranceConfig

__all__ = [
    "as_cmatrix",
    "gram_residual",
    "unimodular_deviation",
    "is_hadamard",
    "DephaseResult",
    "dephase",
    "dephased",
    "ButsonCheck",
    "is_butson",
    "hadamard_product",
    "fourier",
]


def as_cmatrix(H) -> np.ndarray:
    """Return ``H`` as a square complex128 array with finite entries."""
    H = np.asarray(H, dtype=np.complex128)
    if H.ndim != 2 or H.shape[0] != H.shape[1] or H.shape[0] == 0:
        raise DimensionMismatch(f"expected a square matrix, got shape {H.shape}")
    if not np.all(np.isfinite(H)):
        raise ValueError("matrix has non-finite entries")
    return H


def fourier(n: int) -> np.ndarray:
    j = np.arange(n)
    return np.exp(2j * np.pi * np.outer(j, j) / n)


def gram_residual(H) -> float:
    """max_{j,l} |(H H^dagger)_{jl} - n delta_{jl}|"""
    H = as_cmatrix(H)
    n = H.shape[0]
    return float(np.abs(H @ H.conj().T - n * np.eye(n)).max())


def unimodular_deviation(H) -> float:
    return float(np.abs(np.abs(as_cmatrix(H)) - 1.0).max())


def is_hadamard(H, tol: ToleranceConfig = DEFAULT_TOL) -> bool:
    H = as_cmatrix(H)
    n = H.shape[0]
    if unimodular_deviation(H) >= tol.unimodular:
        return False
    return gram_residual(H) < n * tol.gram


@dataclass(frozen=True)
class DephaseResult:
    dephased: np.ndarray
    d1: np.ndarray
    d2: np.ndarray


def dephase(H, tol: ToleranceConfig = DEFAULT_TOL) -> DephaseResult:
    """Dephase ``H`` so that its first row and column are all ones.

    Entries are computed from the closed form
    ``h_ij * conj(h_i1 * h_1j) * h_11`` rather than by multiplying out the
    diagonal factors, which are returned as well.
    """
    H = as_cmatrix(H)
    dev = unimodular_deviation(H)
    if dev >= tol.unimodular:
        raise NonUnimodularInput(f"entry modulus deviates from 1 by {dev:.3g}")
    return _dephase_unchecked(H)


def _dephase_unchecked(H: np.ndarray) -> DephaseResult:
    col = H[:, 0]
    row = H[0, :]
    out = H * np.conj(col)[:, None] * np.conj(row)[None, :] * H[0, 0]
    out[0, :] = 1.0
    out[:, 0] = 1.0
    d1 = np.conj(col).copy()
    d2 = H[0, 0] * np.conj(row)
    d2[0] = 1.0
    return DephaseResult(out, d1, d2)


def dephased(H) -> np.ndarray:
    """Shorthand for ``dephase(H).dephased`` without the modulus check."""
    return _dephase_unchecked(as_cmatrix(H)).dephased


@dataclass(frozen=True)
class ButsonCheck:
    q: int
    is_butson: bool
    logs: np.ndarray | None


def is_butson(H, q: int, tol: ToleranceConfig = DEFAULT_TOL) -> ButsonCheck:
    if q < 1:
        raise ValueError("q must be a positive integer")
    H = as_cmatrix(H)
    k = np.rint(np.angle(H) * q / (2 * np.pi)).astype(np.int64) % q
    snapped = np.exp(2j * np.pi * k / q)
    ok = bool(np.all(np.abs(H - snapped) < tol.match))
    return ButsonCheck(q, ok, k if ok else None)


def hadamard_product(A, B) -> np.ndarray:
    A = np.asarray(A, dtype=np.complex128)
    B = np.asarray(B, dtype=np.complex128)
    if A.shape != B.shape:
        raise DimensionMismatch(f"shapes differ: {A.shape} vs {B.shape}")
    return A * B
