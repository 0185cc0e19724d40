"""Tolerance policy and scalar conventions shared by every module."""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, fields, replace

from .errors import NonUnimodularInput

__all__ = [
    "ToleranceConfig",
    "DEFAULT_TOL",
    "approx_eq",
    "principal_sqrt",
    "unimodular",
    "quantize",
    "neighbor_keys",
]


@dataclass(frozen=True)
class ToleranceConfig:
    """Tolerances split by purpose.

    ``match`` is the entry-matching accuracy used when two matrix entries are
    compared for equality; the others guard unimodularity, the Gram residual
    (scaled by the order), numerical rank, and polynomial residuals.
    """

    unimodular: float = 1e-10
    gram: float = 1e-9
    match: float = 1e-8
    rank: float = 1e-9
    residual: float = 1e-9

    def __post_init__(self):
        for f in fields(self):
            v = getattr(self, f.name)
            if not (0.0 < v < 1e-2):
                raise ValueError(f"tolerance {f.name}={v!r} must lie in (0, 1e-2)")

    def with_(self, **changes) -> "ToleranceConfig":
        return replace(self, **changes)


DEFAULT_TOL = ToleranceConfig()


def approx_eq(z1: complex, z2: complex, eps: float) -> bool:
    if eps <= 0:
        raise ValueError("eps must be positive")
    return abs(z1 - z2) < eps


def principal_sqrt(z: complex) -> complex:
    """Square root with argument in (-pi/2, pi/2]; negative reals map to i*sqrt(|z|)."""
    z = complex(z)
    if z.imag == 0.0 and z.real < 0.0:
        # cmath would honour the sign of a negative zero imaginary part
        return complex(0.0, math.sqrt(-z.real))
    w = cmath.sqrt(z)
    if w.real == 0.0 and w.imag < 0.0:
        # just below the cut the real part underflowed; keep the root in the
        # right half-plane
        w = complex(math.ulp(0.0), w.imag)
    return w


def unimodular(z: complex, tol: ToleranceConfig = DEFAULT_TOL) -> complex:
    """Checked constructor: return ``z`` if it lies on the unit circle."""
    z = complex(z)
    if abs(abs(z) - 1.0) >= tol.unimodular:
        raise NonUnimodularInput(f"|{z}| = {abs(z)!r} is not 1")
    return z


def quantize(z: complex, tol: ToleranceConfig = DEFAULT_TOL) -> tuple[int, int]:
    """Grid cell of ``z`` at resolution ``tol.match``; for hashing only."""
    z = complex(z)
    return (round(z.real / tol.match), round(z.imag / tol.match))


def neighbor_keys(key: tuple[int, int]):
    """The cell itself followed by its eight neighbours."""
    i, j = key
    yield key
    for di in (-1, 0, 1):
        for dj in (-1, 0, 1):
            if di or dj:
                yield (i + di, j + dj)
