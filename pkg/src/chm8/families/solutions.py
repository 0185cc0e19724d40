"""Closed-form solutions of the orthogonality systems and their domains.

Each ``solve_*`` function maps free parameters to the full tuple of symbol
values of the corresponding monomial table and reports whether the point
lies in the family's domain.
"""
from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from ..numerics import DEFAULT_TOL, ToleranceConfig, principal_sqrt

DENOM_EPS = 1e-10


@dataclass(frozen=True)
class Reason:
    name: str
    value: float


@dataclass(frozen=True)
class DomainVerdict:
    inside: bool
    reasons: tuple[Reason, ...] = field(default_factory=tuple)
    degenerate: bool = False  # a denominator vanished

    def __post_init__(self):
        if not self.inside and not self.reasons:
            raise ValueError("an outside verdict needs at least one reason")


INSIDE = DomainVerdict(True)


class _Checks:
    """Collects constraint violations while a solution is evaluated."""

    def __init__(self):
        self.reasons: list[Reason] = []
        self.degenerate = False

    def nonzero(self, name: str, value: complex) -> bool:
        if abs(value) <= DENOM_EPS:
            self.reasons.append(Reason(name, abs(value)))
            self.degenerate = True
            return False
        return True

    def nonpositive_real(self, name: str, q: complex, tol: ToleranceConfig) -> None:
        scale = max(1.0, abs(q))
        if abs(q.imag) >= tol.residual * scale:
            self.reasons.append(Reason(f"{name}:imag", q.imag))
        elif q.real > tol.residual * scale:
            self.reasons.append(Reason(name, q.real))

    def fail(self, name: str, value: float) -> None:
        self.reasons.append(Reason(name, value))

    def verdict(self) -> DomainVerdict:
        if self.reasons:
            return DomainVerdict(False, tuple(self.reasons), self.degenerate)
        return INSIDE


def e_i(theta: float) -> complex:
    return cmath.exp(1j * theta)


# -- shared helpers for scalar and array evaluation --------------------------

def csqrt(z):
    """``principal_sqrt`` for scalars, elementwise for arrays."""
    if np.ndim(z) == 0:
        return principal_sqrt(complex(z))
    z = np.asarray(z, dtype=complex)
    neg = (z.imag == 0.0) & (z.real < 0.0)
    return np.where(neg, 1j * np.sqrt(np.abs(z.real)), np.sqrt(z))


def _nonzero_mask(v) -> np.ndarray:
    return np.abs(v) > DENOM_EPS


def _nonpositive_mask(q, tol: ToleranceConfig) -> np.ndarray:
    scale = np.maximum(1.0, np.abs(q))
    return (np.abs(np.imag(q)) < tol.residual * scale) & (np.real(q) <= tol.residual * scale)


def _stack(*cols) -> np.ndarray:
    return np.stack([np.asarray(c, dtype=complex) for c in cols], axis=-1)


# -- T8B ---------------------------------------------------------------------

def _t8b_d(a, b, c):
    return (1 + a * b + a * c + b * c) / (a + b + c + a * b * c)


def solve_t8b(a: complex, b: complex, c: complex, tol: ToleranceConfig = DEFAULT_TOL):
    chk = _Checks()
    for name, x in zip("abc", (a, b, c)):
        # the excluded set D0: a coordinate equal to 1 or -1
        if min(abs(x - 1), abs(x + 1)) <= DENOM_EPS:
            chk.fail(f"D0:{name}", x.real)
            chk.degenerate = True
    if not chk.nonzero("denominator", a + b + c + a * b * c):
        return None, chk.verdict()
    return (a, b, c, _t8b_d(a, b, c)), chk.verdict()


def batch_t8b(a, b, c, branch: int = 0, tol: ToleranceConfig = DEFAULT_TOL):
    inside = _nonzero_mask(a + b + c + a * b * c)
    for x in (a, b, c):
        inside &= np.minimum(np.abs(x - 1), np.abs(x + 1)) > DENOM_EPS
    with np.errstate(all="ignore"):
        return _stack(a, b, c, _t8b_d(a, b, c)), inside


# -- T8C ---------------------------------------------------------------------

def t8c_parts(a, b, c) -> dict:
    a2, b2 = a * a, b * b
    a4, b4 = a2 * a2, b2 * b2
    A1 = -a2 + a2 * b2 - a2 * c + b2 * c
    A2 = a2 + a4 - 4 * a2 * b2 + b4 + a2 * b4
    A3 = (
        -a4 * b2 - a4 * c + a2 * b2 * c + a4 * b2 * c - a2 * b4 * c - a2 * c**2 - a4 * c**2
        + 6 * a2 * b2 * c**2 - b4 * c**2 - a2 * b4 * c**2 - a2 * c**3 + b2 * c**3
        + a2 * b2 * c**3 - b4 * c**3 - b2 * c**4
    )
    B1 = a2 - b2 + c - b2 * c
    B2 = -2 * a * (a - b) * (b - 1) * (1 + b) * (a + b) * A3
    B3 = 2 * b * c * (a - c) * (a + c) * A1 * A2
    C = (
        (1 + c) ** 2 * (a2 + c) ** 2 * (c - b2) ** 2 * (a2 - b2 * c) ** 2 * A2**2
        - 4 * a2 * (a2 - b2) ** 2 * (b2 - 1) ** 2 * A3**2
    )
    return dict(A1=A1, A2=A2, A3=A3, B1=B1, B2=B2, B3=B3, C=C)


def _t8c_def(a, b, c, p, branch):
    a2, b2 = a * a, b * b
    d = -csqrt(c * p["A1"]) / csqrt(p["B1"])
    sC = csqrt(p["C"])
    e = d * ((1 - a) * (1 + a) * (a - b2) * (a + b2) * p["A3"] + sC) / p["B3"]
    f = ((c - b2) * (c + 1) * (a2 + c) * (a2 - b2 * c) * p["A2"] + sC) / p["B2"]
    # the four documented sign/conjugation assignments of (d, e, f)
    return [
        (d, e, f),
        (-d, -e, f),
        (d, -np.conj(e), np.conj(f)),
        (-d, np.conj(e), np.conj(f)),
    ][branch]


def solve_t8c(a, b, c, branch: int = 0, tol: ToleranceConfig = DEFAULT_TOL):
    p = t8c_parts(a, b, c)
    chk = _Checks()
    ok = all([chk.nonzero(k, p[k]) for k in ("B1", "B2", "B3")])
    chk.nonpositive_real("C/(a^8 b^8 c^4)", p["C"] / (a**8 * b**8 * c**4), tol)
    if not ok:
        return None, chk.verdict()
    d, e, f = (complex(v) for v in _t8c_def(a, b, c, p, branch))
    return (a, b, c, d, e, f), chk.verdict()


def batch_t8c(a, b, c, branch: int = 0, tol: ToleranceConfig = DEFAULT_TOL):
    with np.errstate(all="ignore"):
        p = t8c_parts(a, b, c)
        inside = _nonzero_mask(p["B1"]) & _nonzero_mask(p["B2"]) & _nonzero_mask(p["B3"])
        inside &= _nonpositive_mask(p["C"] / (a**8 * b**8 * c**4), tol)
        return _stack(a, b, c, *_t8c_def(a, b, c, p, branch)), inside


# -- T8D ---------------------------------------------------------------------

def t8d_parts(a, b, c) -> dict:
    A1 = b * c + a * b * c + b * b * c + b * c * c
    A2 = 2 * a * b + a * a * b + a * b * b + a * c + b * c + 2 * a * b * c
    B1 = a * b + a * c + b * c + a * b * c
    B2 = 2 * (c - 1) * B1
    B3 = a * b + c + 2 * a * c + 2 * b * c + a * b * c + c * c
    C = (1 + c) ** 2 * A2**2 - 4 * a * b * B3**2
    return dict(A1=A1, A2=A2, B1=B1, B2=B2, B3=B3, C=C)


def _t8d_def(a, b, c, p, branch):
    sC = csqrt(p["C"]) * (1 if branch == 0 else -1)
    d = -p["A1"] / p["B1"]
    e = c * ((a - b) * (a * b - c) * (1 + c) + sC) / p["B2"]
    f = -((1 + c) * p["A2"] + sC) / (2 * p["B3"])
    return d, e, f


def solve_t8d(a, b, c, branch: int = 0, tol: ToleranceConfig = DEFAULT_TOL):
    p = t8d_parts(a, b, c)
    chk = _Checks()
    ok = all([chk.nonzero(k, p[k]) for k in ("B1", "B2", "B3")])
    chk.nonpositive_real("C/(a^2 b^2 c^2)", p["C"] / (a * a * b * b * c * c), tol)
    if not ok:
        return None, chk.verdict()
    d, e, f = (complex(v) for v in _t8d_def(a, b, c, p, branch))
    return (a, b, c, d, e, f), chk.verdict()


def batch_t8d(a, b, c, branch: int = 0, tol: ToleranceConfig = DEFAULT_TOL):
    with np.errstate(all="ignore"):
        p = t8d_parts(a, b, c)
        inside = _nonzero_mask(p["B1"]) & _nonzero_mask(p["B2"]) & _nonzero_mask(p["B3"])
        inside &= _nonpositive_mask(p["C"] / (a * a * b * b * c * c), tol)
        return _stack(a, b, c, *_t8d_def(a, b, c, p, branch)), inside


# -- T8E ---------------------------------------------------------------------

def _t8e_dens(a, b, c):
    return (-1 + b + c + b * c, -1 - a - c + a * c, 1 - a + b + a * b)


def _t8e_def(a, b, c, dens):
    return (
        (-1 - b - c + b * c) / dens[0],
        (-1 + a + c + a * c) / dens[1],
        (-1 - a + b - a * b) / dens[2],
    )


def solve_t8e(a, b, c, tol: ToleranceConfig = DEFAULT_TOL):
    chk = _Checks()
    dens = _t8e_dens(a, b, c)
    if not all([chk.nonzero(k, v) for k, v in zip(("den_d", "den_e", "den_f"), dens)]):
        return None, chk.verdict()
    return (a, b, c, *_t8e_def(a, b, c, dens)), chk.verdict()


def batch_t8e(a, b, c, branch: int = 0, tol: ToleranceConfig = DEFAULT_TOL):
    with np.errstate(all="ignore"):
        dens = _t8e_dens(a, b, c)
        inside = _nonzero_mask(dens[0]) & _nonzero_mask(dens[1]) & _nonzero_mask(dens[2])
        return _stack(a, b, c, *_t8e_def(a, b, c, dens)), inside


# -- T8F ---------------------------------------------------------------------

# Seven independent sign choices, most significant bit first; 2**7 branches.
T8F_SIGN_NAMES = ("a_i", "b_i", "c_r", "sqrtA1", "sqrtA2", "sqrtB3", "conj")


def t8f_signs(branch: int) -> tuple[int, ...]:
    """Sign flips of a branch index; the first name is the most significant bit."""
    if not 0 <= branch < 128:
        raise ValueError("T8F branch must lie in [0, 128)")
    bits = [(branch >> (6 - k)) & 1 for k in range(7)]
    return tuple(-1 if bit else 1 for bit in bits)


def t8f_branch(signs) -> int:
    return sum((1 << (6 - k)) for k, s in enumerate(signs) if s < 0)


def t8f_parts(ar, br, ci, signs) -> dict:
    s = signs
    ai = s[0] * np.sqrt(np.maximum(0.0, 1 - ar * ar))
    bi = s[1] * np.sqrt(np.maximum(0.0, 1 - br * br))
    cr = s[2] * np.sqrt(np.maximum(0.0, 1 - ci * ci))
    A1 = (ci - bi) * (bi + ci)
    A2 = -(ai**4) * br**2 + ar**4 * ci**2 + ai**2 * br**2 * ci**2 - ar**2 * br**2 * ci**2
    B1 = (ar - br) * (ar + br)
    B2 = -(ar**2) * br**2 + ar**2 * ci**2 + cr**2
    B3 = ai**2 * br**2 + ar**2 * ci**2 - br**2 * ci**2
    B4 = -(ai**2) * br**2 - ar**2 * ci**2
    return dict(ai=ai, bi=bi, cr=cr, A1=A1, A2=A2, B1=B1, B2=B2, B3=B3, B4=B4)


def _t8f_denominators(ci, p) -> dict:
    return {
        "c_i": ci,
        "c_r": p["cr"],
        "B1*B2": p["B1"] * p["B2"],
        "B1*B4": p["B1"] * p["B4"],
        "B3": p["B3"],
    }


def _t8f_components(ar, br, ci, p, s) -> dict:
    """Real and imaginary parts of d..h; each must come out real."""
    ai, bi, cr = p["ai"], p["bi"], p["cr"]
    rA1 = s[3] * csqrt(p["A1"])
    rA2 = s[4] * csqrt(p["A2"])
    rB3 = s[5] * csqrt(p["B3"])
    q2 = csqrt(p["B1"] * p["B2"])
    q4 = csqrt(p["B1"] * p["B4"])
    aci = np.abs(ci)
    return {
        "d_r": bi * rA2 / (ci * q2),
        "d_i": 1j * ai * rA1 * rB3 / (aci * q2),
        "e_r": rA2 / q2,
        "e_i": 1j * ar * bi * rA1 / q2,
        "f_r": -ai * br * aci * rA1 / (ci * q4),
        "f_i": 1j * aci * rA2 / (ci * q4),
        "g_r": ar * rA1 * rB3 / (cr * q4),
        "g_i": 1j * br * aci * rA2 / (cr * ci * q4),
        "h_r": -ai * br * cr * aci / (rB3 * ci),
        "h_i": ar * bi * aci / rB3,
    }


def solve_t8f(ar: float, br: float, ci: float, branch: int = 0, tol: ToleranceConfig = DEFAULT_TOL):
    chk = _Checks()
    for name, x in (("a_r", ar), ("b_r", br), ("c_i", ci)):
        if not -1.0 <= x <= 1.0:
            chk.fail(f"{name} in [-1,1]", x)
    if chk.reasons:
        return None, chk.verdict()
    s = t8f_signs(branch)
    p = t8f_parts(ar, br, ci, s)
    dens = _t8f_denominators(ci, p)
    if not all([chk.nonzero(k, float(v)) for k, v in dens.items()]):
        return None, chk.verdict()
    parts = {k: complex(v) for k, v in _t8f_components(ar, br, ci, p, s).items()}
    for name, v in parts.items():
        if abs(v.imag) >= tol.residual:
            chk.fail(f"{name}:imag", v.imag)
    if chk.reasons:
        return None, chk.verdict()
    for name in ("d_r", "e_r", "f_r", "g_r", "h_r"):
        v = parts[name].real
        if abs(v) > 1.0 + tol.residual:
            chk.fail(f"{name} in [-1,1]", v)
    if chk.reasons:
        return None, chk.verdict()
    vals = [complex(ar, p["ai"]), complex(br, p["bi"]), complex(p["cr"], ci)]
    for x in "defgh":
        vals.append(complex(parts[f"{x}_r"].real, parts[f"{x}_i"].real))
    for name, v in zip("defgh", vals[3:]):
        if abs(abs(v) - 1) >= tol.unimodular:
            chk.fail(f"|{name}'|-1", abs(v) - 1)
    if chk.reasons:
        return None, chk.verdict()
    if s[6] < 0:
        vals = [v.conjugate() for v in vals]
    return tuple(vals), chk.verdict()


def batch_t8f(ar, br, ci, signs, tol: ToleranceConfig = DEFAULT_TOL):
    """Array version of ``solve_t8f``; ``signs`` holds seven arrays of +-1."""
    ar, br, ci = (np.asarray(x, dtype=float) for x in (ar, br, ci))
    s = [np.asarray(v, dtype=float) for v in signs]
    with np.errstate(all="ignore"):
        inside = (np.abs(ar) <= 1) & (np.abs(br) <= 1) & (np.abs(ci) <= 1)
        p = t8f_parts(ar, br, ci, s)
        for v in _t8f_denominators(ci, p).values():
            inside &= _nonzero_mask(v)
        parts = _t8f_components(ar, br, ci, p, s)
        for v in parts.values():
            inside &= np.abs(np.imag(v)) < tol.residual
        for k in ("d_r", "e_r", "f_r", "g_r", "h_r"):
            inside &= np.abs(np.real(parts[k])) <= 1.0 + tol.residual
        cols = [ar + 1j * p["ai"], br + 1j * p["bi"], p["cr"] + 1j * ci]
        for x in "defgh":
            v = np.real(parts[f"{x}_r"]) + 1j * np.real(parts[f"{x}_i"])
            inside &= np.abs(np.abs(v) - 1) < tol.unimodular
            cols.append(v)
        vals = _stack(*cols)
        vals = np.where((s[6] < 0)[..., None], np.conj(vals), vals)
        return vals, inside




# -- isolated matrices ------------------------------------------------------

A8A_VALUE = complex(1, 2 * math.sqrt(2)) / 3  # root of 3x^2 - 2x + 3 with Im > 0


def v8_trig_values() -> dict[str, float]:
    p = math.pi
    s, c = math.sin, math.cos

    def sec(x):
        return 1 / math.cos(x)

    return dict(
        x1=math.sqrt(0.5 * s(p / 16) * sec(3 * p / 16)),
        x2=math.sqrt(c(p / 16) * c(3 * p / 16) * sec(p / 8)),
        y1=2 * c(p / 16) * math.sqrt(s(p / 16) * sec(3 * p / 16)),
        y2=-s(p / 16) * math.sqrt(2 * c(p / 16) * sec(p / 8) * sec(3 * p / 16)),
        z1=-2 * c(p / 16) * sec(p / 8) * math.sqrt(s(p / 16) * c(3 * p / 16)),
        z2=-0.5 * sec(p / 8) * math.sqrt(c(3 * p / 16) * sec(p / 16) * sec(p / 8)),
    )


def v8b_generator() -> tuple[complex, complex, complex]:
    t = v8_trig_values()
    return (complex(t["x1"], t["x2"]), complex(t["y1"], t["y2"]), complex(t["z1"], t["z2"]))


def v8_sixteen_solutions() -> list[tuple[complex, complex, complex]]:
    """The non-Butson solutions of the V8 system, two templates times the
    sign patterns (mu1, mu2, mu3); the first entry is the V8B generator."""
    t = v8_trig_values()
    x1, x2, y1, y2, z1, z2 = (t[k] for k in ("x1", "x2", "y1", "y2", "z1", "z2"))
    out = []
    for template in (1, 2):
        for m1, m2, m3 in itertools.product((1, -1), repeat=3):
            if template == 1:
                out.append(
                    (
                        complex(m1 * x1, m2 * x2),
                        complex(m3 * y1, m2 * y2),
                        complex(m1 * z1, m1 * m2 * m3 * z2),
                    )
                )
            else:
                # -y1 here, not +y1: with +y1 the system fails for every sign pattern
                out.append(
                    (
                        complex(m1 * x2, m2 * x1),
                        complex(m3 * z2, m2 * z1),
                        complex(m1 * y2, -m1 * m2 * m3 * y1),
                    )
                )
    return out
