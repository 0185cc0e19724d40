"""Exploratory check that the one-parameter ``T8raw`` construction sits inside
the transpose of ``T8D``.

The known identity lists seven arguments for the six-symbol dephased ``T8D``
table. Every way of dropping one of them is tried on random unimodular
``(x, y, z)`` with ``u = y``; a binding survives when the dephased ``T8D``
matrix equals ``P1 T8raw(x, y, z, y)^T P2`` entrywise.
"""
from __future__ import annotations

import cmath
import math

import numpy as np

from .. import perms
from ..numerics import DEFAULT_TOL, ToleranceConfig
from .registry import eval_t8_raw, get_family

# one-line images (1-based) of the two permutation matrices
T8RAW_P1 = (1, 6, 5, 8, 7, 4, 3, 2)
T8RAW_P2 = (1, 6, 3, 5, 2, 4, 8, 7)


def t8raw_arguments(x: complex, y: complex, z: complex, u: complex) -> list[complex]:
    w = cmath.exp(1j * math.pi * 3 / 10)
    return [w * u / y, 1j * z, 1j, -1j * y * z / x, w, 1j, 1j * x]


def t8raw_containment_probe(
    rng: np.random.Generator, trials: int = 5, tol: ToleranceConfig = DEFAULT_TOL
) -> list[int]:
    """Indices of the dropped argument for which the identity held in every trial."""
    table = get_family("T8D").dephased_table
    p1 = perms.as_perm(np.array(T8RAW_P1) - 1)
    p2 = perms.as_perm(np.array(T8RAW_P2) - 1)
    alive = set(range(7))
    for _ in range(trials):
        x, y, z = np.exp(1j * rng.uniform(-np.pi, np.pi, 3))
        target = perms.apply(p1, eval_t8_raw(x, y, z, y).T, p2)
        args = t8raw_arguments(x, y, z, y)
        for drop in sorted(alive):
            six = [v for k, v in enumerate(args) if k != drop]
            if np.max(np.abs(table.evaluate(six) - target)) >= tol.match:
                alive.discard(drop)
    return sorted(alive)
