"""Sparse multivariate Laurent polynomials and unimodular roots of
(anti-)palindromic polynomials.

A polynomial ``f`` with maximal degrees ``alpha`` is palindromic when
``f = x**alpha * f*`` and anti-palindromic when ``f = -x**alpha * f*``,
where ``f*(x) = conj(f(1/conj(x)))`` is the conjugate reciprocal.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from numbers import Number
from typing import Iterable, Sequence

from .errors import (
    DegenerateLeadingCoefficient,
    IncoherentInput,
    NotPalindromic,
    NotUnimodular,
    ZeroAtNegativeExponent,
)
from .numerics import DEFAULT_TOL, ToleranceConfig

__all__ = [
    "LaurentPoly",
    "PalindromeClass",
    "evaluate",
    "conjugate_reciprocal",
    "classify_palindrome",
    "half_reduce_check",
    "solve_unimodular_linear",
    "solve_unimodular_quadratic",
]

PRUNE = 1e-14
LEADING_EPS = 1e-13


class LaurentPoly:
    """Polynomial in ``nvars`` variables with integer (possibly negative)
    exponents and complex coefficients, stored as ``{exponents: coeff}``."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        if nvars < 1:
            raise ValueError("nvars must be positive")
        self.nvars = nvars
        clean = {}
        for exp, c in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != nvars:
                raise ValueError(f"exponent {exp} does not have length {nvars}")
            c = complex(c)
            if abs(c) >= PRUNE:
                clean[exp] = clean.get(exp, 0) + c
        self.terms = {e: c for e, c in clean.items() if abs(c) >= PRUNE}

    @classmethod
    def variables(cls, nvars: int) -> tuple["LaurentPoly", ...]:
        out = []
        for i in range(nvars):
            e = [0] * nvars
            e[i] = 1
            out.append(cls(nvars, {tuple(e): 1}))
        return tuple(out)

    @classmethod
    def constant(cls, nvars: int, c: complex) -> "LaurentPoly":
        return cls(nvars, {(0,) * nvars: c})

    # arithmetic -----------------------------------------------------------
    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.nvars != self.nvars:
                raise ValueError("polynomials have different numbers of variables")
            return other
        if isinstance(other, Number):
            return LaurentPoly.constant(self.nvars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return LaurentPoly(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return LaurentPoly(self.nvars, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials can be raised to negative powers")
            (e, c), = self.terms.items()
            return LaurentPoly(self.nvars, {tuple(k * x for x in e): c**k})
        out = LaurentPoly.constant(self.nvars, 1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.nvars == other.nvars and (self - other).is_zero()

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms)))

    def __repr__(self):
        if not self.terms:
            return f"LaurentPoly({self.nvars}, 0)"
        parts = []
        for e, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(
                f"x{i + 1}" + (f"^{k}" if k != 1 else "") for i, k in enumerate(e) if k
            )
            parts.append(f"({c:g})" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)

    # queries --------------------------------------------------------------
    def is_zero(self, tol: float = PRUNE) -> bool:
        return all(abs(c) < tol for c in self.terms.values())

    def max_abs_coeff(self) -> float:
        return max((abs(c) for c in self.terms.values()), default=0.0)

    def degrees(self) -> tuple[int, ...]:
        """Maximal exponent of each variable (0 for absent variables)."""
        if not self.terms:
            return (0,) * self.nvars
        return tuple(max(0, max(e[i] for e in self.terms)) for i in range(self.nvars))

    def has_negative_exponents(self) -> bool:
        return any(x < 0 for e in self.terms for x in e)

    def coefficients_in(self, var: int) -> dict[int, "LaurentPoly"]:
        """Split into ``{k: p_k}`` with ``f = sum_k p_k * x_var**k``."""
        out: dict[int, dict] = {}
        for e, c in self.terms.items():
            k = e[var]
            rest = list(e)
            rest[var] = 0
            out.setdefault(k, {})[tuple(rest)] = c
        return {k: LaurentPoly(self.nvars, t) for k, t in out.items()}

    def evaluate(self, point: Sequence[complex]) -> complex:
        return evaluate(self, point)

    def __call__(self, *point):
        return evaluate(self, point)


def evaluate(f: LaurentPoly, point: Sequence[complex]) -> complex:
    point = [complex(x) for x in point]
    if len(point) != f.nvars:
        raise ValueError(f"expected {f.nvars} coordinates, got {len(point)}")
    total = 0j
    for e, c in f.terms.items():
        term = c
        for x, k in zip(point, e):
            if k == 0:
                continue
            if x == 0 and k < 0:
                raise ZeroAtNegativeExponent("zero coordinate under a negative exponent")
            term *= x**k
        total += term
    return total


def conjugate_reciprocal(f: LaurentPoly) -> LaurentPoly:
    return LaurentPoly(
        f.nvars, {tuple(-x for x in e): c.conjugate() for e, c in f.terms.items()}
    )


@dataclass(frozen=True)
class PalindromeClass:
    kind: str  # "palindromic" | "anti_palindromic" | "neither"
    alpha: tuple[int, ...]


def _mirror(f: LaurentPoly, alpha: Sequence[int]) -> LaurentPoly:
    """x**alpha * f*"""
    return LaurentPoly(
        f.nvars,
        {tuple(a - x for a, x in zip(alpha, e)): c.conjugate() for e, c in f.terms.items()},
    )


def classify_palindrome(f: LaurentPoly, tol: float = 1e-12) -> PalindromeClass:
    if f.has_negative_exponents():
        raise ValueError("classification is defined for ordinary polynomials only")
    alpha = f.degrees()
    mirror = _mirror(f, alpha)
    if (f - mirror).max_abs_coeff() < tol:
        kind = "palindromic"
    elif (f + mirror).max_abs_coeff() < tol:
        kind = "anti_palindromic"
    else:
        kind = "neither"
    return PalindromeClass(kind, alpha)


def _half_powers(point: Sequence[complex]) -> list[complex]:
    # x^(1/2) := exp(i arg(x) / 2) * sqrt|x|, with arg in (-pi, pi]
    out = []
    for x in point:
        r, phi = cmath.polar(complex(x))
        if phi == -math.pi:
            phi = math.pi
        out.append(cmath.rect(math.sqrt(r), phi / 2))
    return out


def half_reduce_check(f: LaurentPoly, point: Sequence[complex], tol: float = 1e-12) -> float:
    """Residual of the half-degree reduction identity at ``point``.

    Pairs each monomial ``x**e`` with its mirror ``x**(alpha - e)`` and
    compares ``sum (c y +- conj(c) / y)`` over the pairs, with
    ``y = x**(e - alpha/2)``, against ``f(x) * x**(-alpha/2)``.
    """
    cls = classify_palindrome(f, tol)
    if cls.kind == "neither":
        raise NotPalindromic("polynomial is neither palindromic nor anti-palindromic")
    sign = 1.0 if cls.kind == "palindromic" else -1.0
    alpha = cls.alpha
    point = [complex(x) for x in point]
    roots = _half_powers(point)
    scale = 1 + 0j
    for s, a in zip(roots, alpha):
        scale *= s ** (-a)

    def mono(e):
        v = 1 + 0j
        for x, k in zip(point, e):
            v *= x**k
        return v

    lhs = 0j
    for e, c in f.terms.items():
        partner = tuple(a - x for a, x in zip(alpha, e))
        if e < partner:
            continue  # handled from its partner
        y = mono(e) * scale
        if e == partner:
            lhs += c * y
        else:
            lhs += c * y + sign * c.conjugate() / y
    rhs = evaluate(f, point) * scale
    return abs(lhs - rhs)


def solve_unimodular_linear(
    p1: complex, p0: complex, tol: ToleranceConfig = DEFAULT_TOL
) -> complex:
    """Root of ``p1 x + p0`` when the coefficients come from a palindromic
    polynomial evaluated on the torus (so ``|p1| == |p0|``)."""
    p1, p0 = complex(p1), complex(p0)
    if abs(p1) <= LEADING_EPS:
        raise DegenerateLeadingCoefficient(f"|p1| = {abs(p1):.3g}")
    if abs(abs(p1) - abs(p0)) >= tol.match:
        raise IncoherentInput(f"|p1| = {abs(p1)!r} but |p0| = {abs(p0)!r}")
    x = -p0 / p1
    return x / abs(x)


def solve_unimodular_quadratic(
    p2: complex, p1: complex, p0: complex, tol: ToleranceConfig = DEFAULT_TOL
) -> tuple[complex, complex]:
    """Both roots of ``p2 x^2 + p1 x + p0`` for palindromic coefficients.

    The equation is reduced to ``y^2 + (|p1|/|p2|) y + 1 = 0`` by dividing by
    the constant term and substituting ``x = y exp(i(arg p1 - arg p2))``;
    its roots are unimodular exactly when ``|p1|/|p2| <= 2``.
    """
    p2, p1, p0 = complex(p2), complex(p1), complex(p0)
    if abs(p2) <= LEADING_EPS:
        raise DegenerateLeadingCoefficient(f"|p2| = {abs(p2):.3g}")
    if abs(abs(p2) - abs(p0)) >= tol.match * max(1.0, abs(p2)):
        raise IncoherentInput(f"|p2| = {abs(p2)!r} but |p0| = {abs(p0)!r}")
    ratio = abs(p1) / abs(p2)
    if ratio > 2 + tol.match:
        raise NotUnimodular(f"|p1|/|p2| = {ratio!r} exceeds 2")
    if abs(p1) <= LEADING_EPS:
        # x^2 = -p0/p2
        w = cmath.sqrt(-p0 / p2)
        w /= abs(w)
        return (w, -w)
    rot = cmath.exp(1j * (cmath.phase(p1) - cmath.phase(p2)))
    # palindromic coefficients satisfy p0 = |p2| exp(i(2 arg p1 - arg p2))
    if abs(p0 - rot * rot * p2) >= tol.match * max(1.0, abs(p2)):
        raise IncoherentInput("coefficients are not palindromic on the torus")
    ratio = min(ratio, 2.0)
    disc = math.sqrt(max(0.0, 4.0 - ratio * ratio))
    y1 = complex(-ratio, disc) / 2
    y2 = complex(-ratio, -disc) / 2
    return (y1 * rot, y2 * rot)
