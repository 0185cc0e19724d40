"""Monomial tables of the order-8 matrices, transcribed entry by entry.

Conjugates of unimodular symbols are written as inverses.
"""
from __future__ import annotations

import cmath
import math

import numpy as np

from ..palindromic import LaurentPoly
from .monomial import MonomialMatrix

OMEGA8 = cmath.exp(2j * math.pi / 8)
ZETA20 = cmath.exp(2j * math.pi / 20)
OMEGA6 = cmath.exp(2j * math.pi / 6)


def _vars(names: str):
    return LaurentPoly.variables(len(names))


def _ones_like(x: LaurentPoly) -> LaurentPoly:
    return LaurentPoly.constant(x.nvars, 1)


def _masked(symbols: str, base: np.ndarray, mask) -> MonomialMatrix:
    rows = [[complex(base[j, k]) * mask[j][k] for k in range(8)] for j in range(8)]
    return MonomialMatrix.from_polys(tuple(symbols), rows)


def f8_table() -> MonomialMatrix:
    a, b, c, d, e = _vars("abcde")
    one = _ones_like(a)
    base = OMEGA8 ** np.outer(np.arange(8), np.arange(8))
    ace = a**-1 * c * e
    r0 = [one] * 8
    r1 = [one, a, b, c, one, a, b, c]
    r2 = [one, d, one, d, one, d, one, d]
    r3 = [one, e, b, ace, one, e, b, ace]
    return _masked("abcde", base, [r0, r1, r2, r3, r0, r1, r2, r3])


_D8A_BASE_EXP = [
    [0, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 2, 3, 4, 5, 6, 7],
    [0, 2, 6, 4, 0, 2, 6, 4],
    [0, 3, 6, 1, 4, 7, 2, 5],
    [0, 4, 4, 0, 0, 4, 4, 0],
    [0, 5, 2, 7, 4, 1, 6, 3],
    [0, 6, 2, 4, 0, 6, 2, 4],
    [0, 7, 6, 5, 4, 3, 2, 1],
]


def d8a_table() -> MonomialMatrix:
    a, b, c, d, e = _vars("abcde")
    one = _ones_like(a)
    base = OMEGA8 ** np.array(_D8A_BASE_EXP)
    ace = a**-1 * c * e
    r0 = [one] * 8
    r1 = [one, a, b, c, one, a, b, c]
    r2 = [one, d, d, one, one, d, d, one]
    r3 = [one, e, b, ace, one, e, b, ace]
    return _masked("abcde", base, [r0, r1, r2, r3, r0, r1, r2, r3])


_S8A_BASE = np.array(
    [
        [1, 1, 1, 1, 1, 1, 1, 1],
        [1, 1, -1, -1, -1, 1j, -1j, 1],
        [1, 1j, 1j, -1j, 1, -1, -1, -1j],
        [1, 1j, -1j, 1j, -1, -1j, 1j, -1j],
        [1, -1, -1j, 1j, 1, 1j, -1j, -1],
        [1, -1, 1j, -1j, -1, 1, 1, -1],
        [1, -1j, -1, -1, 1, -1j, 1j, 1j],
        [1, -1j, 1, 1, -1, -1, -1, 1j],
    ]
)


def s8a_table() -> MonomialMatrix:
    a, b, c, d = _vars("abcd")
    one = _ones_like(a)
    ad = a * d**-1
    bd = b * d**-1
    mask = [
        [one] * 8,
        [one, d, d, d, one, c * d, c * d, d],
        [one, ad, bd, bd, one, one, one, ad],
        [one, a, b, b, one, c * d, c * d, a],
        [one, one, bd, bd, one, c, c, one],
        [one, d, b, b, one, d, d, d],
        [one, ad, one, one, one, c, c, ad],
        [one, a, d, d, one, d, d, a],
    ]
    return _masked("abcd", _S8A_BASE, mask)


def a8a_table() -> MonomialMatrix:
    (a,) = _vars("a")
    o = _ones_like(a)
    rows = [
        [a, o, -a, o, -a, -a, a, o],
        [o, -a, o, a, -a, a, -a, o],
        [-a, o, -a, a, o, a, o, -a],
        [o, a, a, o, o, -a, -a, -a],
        [-a, -a, o, o, a, -a, o, a],
        [-a, a, a, -a, -a, o, o, o],
        [a, -a, o, -a, o, o, a, -a],
        [o, o, -a, -a, a, o, -a, a],
    ]
    return MonomialMatrix.from_polys(("a",), rows)


def v8_table() -> MonomialMatrix:
    a, b, c = _vars("abc")
    o = _ones_like(a)
    ab, bc, ac = a * b, b * c, a * c
    rows = [
        [-ab, -ab, bc, bc, o, o, ac, ac],
        [-ab, bc, -ab, o, bc, ac, o, -ac],
        [bc, -ab, o, -ab, ac, bc, -ac, o],
        [bc, o, -ab, ac, -ab, -ac, bc, -o],
        [o, bc, ac, -ab, -ac, -ab, -o, bc],
        [o, ac, bc, -ac, -ab, -o, -ab, -bc],
        [ac, o, -ac, bc, -o, -ab, -bc, -ab],
        [ac, -ac, o, -o, bc, -bc, -ab, ab],
    ]
    return MonomialMatrix.from_polys(("a", "b", "c"), rows)


_T8_BASE_EXP = [
    [0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 3, 15, 18],
    [0, 8, 8, 8, 8, 13, 15, 8],
    [0, 2, 2, 2, 2, 17, 5, 2],
    [0, 0, 0, 0, 0, 7, 5, 12],
    [0, 0, 0, 0, 0, 0, 10, 10],
    [0, 0, 0, 0, 0, 10, 0, 10],
    [0, 0, 0, 0, 0, 10, 10, 0],
]


def t8raw_table() -> MonomialMatrix:
    x, y, z, u = _vars("xyzu")
    o = _ones_like(x)
    I = 1j
    xi = x**-1
    mask = [
        [o] * 8,
        [o, x, y, z, -y * z * xi, o, o, o],
        [o, -u * y**-1, u * xi, -u * z * xi * y**-1, -u * z * xi**2, o, o, o],
        [o, y, x, -y * z * xi, z, o, o, o],
        [o, u * xi, -u * y**-1, -u * z * xi**2, -u * z * xi * y**-1, o, o, o],
        [o, -I * x * z**-1, I * x * z**-1, -I * z * xi, I * z * xi, o, o, o],
        [o, u, -u, -u * z**2 * xi**2, u * z**2 * xi**2, o, o, o],
        [o, I * u * z * xi, I * u * z * xi, -I * u * z * xi, -I * u * z * xi, o, o, o],
    ]
    base = ZETA20 ** np.array(_T8_BASE_EXP)
    return _masked("xyzu", base, mask)


def t8b_table() -> MonomialMatrix:
    a, b, c, d = _vars("abcd")
    o = _ones_like(a)
    rows = [
        [o] * 8,
        [o, -o, -d, -c, d, c, c * d, -c * d],
        [o, -a, -o, c, a, -a * c, -c, a * c],
        [o, a, d, -o, a * d, -a, -d, -a * d],
        [o, b, -b, -b * c, -o, -c, c, b * c],
        [o, -b, b * d, b, -d, -o, d, -b * d],
        [o, -a * b, b, -b, -a, a, -o, a * b],
        [o, a * b, -b * d, b * c, -a * d, a * c, -c * d, -a * b * c * d],
    ]
    return MonomialMatrix.from_polys(tuple("abcd"), rows)


def t8c_table() -> MonomialMatrix:
    a, b, c, d, e, f = _vars("abcdef")
    rows = [
        [a, b * d, d, a * b, a * d, b * c, a * c, b * d],
        [b * d, -a, a * b, -d, b * c, -a * d, b * d, -a * c],
        [d, a * b, b * d * e * f, -a * e * f, a * c * f, b * d * f, b * c * e, -a * d * e],
        [a * b, -d, -a * e * f, -b * d * e * f, b * d * f, -a * c * f, -a * d * e, -b * c * e],
        [a * c, b * d, a * d * f, b * c * f, -c * d * f, -a * b * c * f, -a * c, -b * c * d],
        [b * d, -a * c, b * c * f, -a * d * f, -a * b * c * f, c * d * f, -b * c * d, a * c],
        [a * d, b * c, b * d * e, -a * c * e, -a * c, -b * c * d, -a * b * c * e, c * d * e],
        [b * c, -a * d, -a * c * e, -b * d * e, -b * c * d, a * c, c * d * e, a * b * c * e],
    ]
    return MonomialMatrix.from_polys(tuple("abcdef"), rows)


def t8d_table() -> MonomialMatrix:
    a, b, c, d, e, f = _vars("abcdef")
    o = _ones_like(a)
    rows = [
        [o, -c, c, -e, -c, e, -e, c * e],
        [o, c, -e, c, -e, c, -e, -c * e],
        [c, -o, c, e, -c, -e, c * e, -e],
        [c, o, e, c, e, c, c * e, e],
        [b, f, a * d, a * b, d * f, b * f, a * b * d, a * d * f],
        [b, -f, a * b, a * d, -b * f, -d * f, a * b * d, -a * d * f],
        [f, b, -a * d, a * b, -d * f, b * f, -a * d * f, -a * b * d],
        [f, -b, a * b, -a * d, -b * f, d * f, -a * d * f, a * b * d],
    ]
    return MonomialMatrix.from_polys(tuple("abcdef"), rows)


def t8e_table() -> MonomialMatrix:
    a, b, c, d, e, f = _vars("abcdef")
    o = _ones_like(a)
    rows = [
        [o] * 8,
        [o, d, e, -f, d * f, e * f, -d * e, d * e * f],
        [o, a, -b, f, -a * f, b * f, a * b, a * b * f],
        [o, -d, b, c, c * d, -b * c, b * d, b * c * d],
        [o, -a, -e, -c, -a * c, -c * e, -a * e, a * c * e],
        [o, -a * d, b * e, -o, a * d, -b * e, -a * b * d * e, a * b * d * e],
        [o, a * d, -o, -c * f, -a * c * d * f, c * f, -a * d, a * c * d * f],
        [o, -o, -b * e, c * f, -c * f, -b * c * e * f, b * e, b * c * e * f],
    ]
    return MonomialMatrix.from_polys(tuple("abcdef"), rows)


def t8f_table() -> MonomialMatrix:
    a, b, c, d, e, f, g, h = _vars("abcdefgh")
    o = _ones_like(a)
    ab, ef = a * b, e * f
    cdgh = c * d * g * h
    rows = [
        [o, ab, ef, ab * ef, c * d, d * h, c * g, g * h],
        [ab, o, -ab * ef, -ef, d * h, c * d, -g * h, -c * g],
        [ef, -ab * ef, -o, ab, -c * g, g * h, c * d, -d * h],
        [ab * ef, -ef, ab, -o, -g * h, c * g, -d * h, c * d],
        [b * e, -a * e, b * f, -a * f, o, -c * h, d * g, -cdgh],
        [a * e, -b * e, -a * f, b * f, c * h, -o, -cdgh, d * g],
        [b * f, a * f, -b * e, -a * e, -d * g, -cdgh, o, c * h],
        [a * f, b * f, a * e, b * e, -cdgh, -d * g, -c * h, -o],
    ]
    return MonomialMatrix.from_polys(tuple("abcdefgh"), rows)


B1_LOGS = np.array(
    [
        [0, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 3, 3, 3, 3],
        [0, 1, 3, 4, 0, 2, 3, 5],
        [0, 2, 5, 3, 4, 5, 2, 1],
        [0, 3, 2, 5, 2, 5, 1, 4],
        [0, 3, 4, 1, 5, 2, 0, 3],
        [0, 4, 1, 3, 3, 2, 5, 0],
        [0, 5, 3, 2, 1, 5, 4, 2],
    ]
)


def b1_table() -> MonomialMatrix:
    coef = OMEGA6**B1_LOGS
    return MonomialMatrix(("_",), coef.astype(np.complex128), np.zeros((8, 8, 1), dtype=np.int64))


def f4_table() -> MonomialMatrix:
    """The one-parameter order-4 family used in the worked membership example."""
    (a,) = _vars("a")
    o = _ones_like(a)
    I = 1j
    rows = [
        [o, o, o, o],
        [o, I * a, -o, -I * a],
        [o, -o, o, -o],
        [o, -I * a, -o, I * a],
    ]
    return MonomialMatrix.from_polys(("a",), rows)
