"""Matrices whose entries are single monomials ``coef * prod(sym**exp)``.

Every matrix in the catalogue has this shape once conjugates of unimodular
symbols are written as inverses, so transposition, conjugation and
dephasing can all be carried out on the exponent tables directly.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..palindromic import LaurentPoly


@dataclass(frozen=True)
class MonomialMatrix:
    symbols: tuple[str, ...]
    coef: np.ndarray  # (n, n) complex
    exps: np.ndarray  # (n, n, len(symbols)) int

    @classmethod
    def from_polys(cls, symbols, rows) -> "MonomialMatrix":
        m = len(symbols)
        n = len(rows)
        coef = np.zeros((n, n), dtype=np.complex128)
        exps = np.zeros((n, n, m), dtype=np.int64)
        for j, row in enumerate(rows):
            if len(row) != n:
                raise ValueError("rows must form a square matrix")
            for k, entry in enumerate(row):
                if isinstance(entry, LaurentPoly):
                    if len(entry.terms) != 1:
                        raise ValueError(f"entry ({j},{k}) is not a monomial")
                    (e, c), = entry.terms.items()
                    coef[j, k] = c
                    exps[j, k] = e
                else:
                    coef[j, k] = entry
        return cls(tuple(symbols), coef, exps)

    @property
    def n(self) -> int:
        return self.coef.shape[0]

    def evaluate(self, values) -> np.ndarray:
        values = np.asarray(values, dtype=np.complex128)
        if values.shape != (len(self.symbols),):
            raise ValueError(f"expected {len(self.symbols)} symbol values")
        # integer powers of each symbol, then a product over the symbol axis
        out = self.coef.copy()
        for s in range(len(self.symbols)):
            e = self.exps[:, :, s]
            if e.any():
                out *= values[s] ** e
        return out

    def evaluate_many(self, values, positions=None) -> np.ndarray:
        """Evaluate at every row of ``values`` (shape ``(m, nsym)``, no zeros).

        Returns shape ``(m, n, n)``, or ``(m, len(positions))`` when a list
        of ``(i, j)`` positions is given.
        """
        values = np.asarray(values, dtype=np.complex128)
        if values.ndim != 2 or values.shape[1] != len(self.symbols):
            raise ValueError(f"expected shape (m, {len(self.symbols)})")
        if positions is None:
            coef = self.coef.ravel()
            exps = self.exps.reshape(-1, len(self.symbols))
        else:
            ii, jj = np.asarray(positions, dtype=np.intp).reshape(-1, 2).T
            coef, exps = self.coef[ii, jj], self.exps[ii, jj]
        # integer exponents make the branch of the logarithm irrelevant
        out = np.exp(np.log(values) @ exps.T.astype(float)) * coef
        if positions is None:
            return out.reshape(-1, self.n, self.n)
        return out

    def transpose(self) -> "MonomialMatrix":
        return MonomialMatrix(self.symbols, self.coef.T.copy(), self.exps.transpose(1, 0, 2).copy())

    def conj(self) -> "MonomialMatrix":
        """Entrywise conjugate, valid for unimodular symbol values."""
        return MonomialMatrix(self.symbols, self.coef.conj(), -self.exps)

    def dephased(self) -> "MonomialMatrix":
        c, e = self.coef, self.exps
        coef = c * np.conj(c[:, :1]) * np.conj(c[:1, :]) * c[0, 0]
        exps = e - e[:, :1] - e[:1, :] + e[0, 0]
        coef[0, :] = 1.0
        coef[:, 0] = 1.0
        return MonomialMatrix(self.symbols, coef, exps)

    def depends_on(self, j: int, k: int) -> frozenset[int]:
        return frozenset(int(s) for s in np.nonzero(self.exps[j, k])[0])
