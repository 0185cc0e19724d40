"""Orthogonality systems of the parametric families, as Laurent
polynomials or trigonometric expressions, with a residual evaluator."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from ..errors import UnknownSystem
from ..palindromic import LaurentPoly


def _p_b() -> tuple[LaurentPoly, ...]:
    a, b, c, d = LaurentPoly.variables(4)
    return (1 + a * b + a * c + b * c - d * (a + b + c + a * b * c),)


def _p_v() -> tuple[LaurentPoly, ...]:
    a, b, c = LaurentPoly.variables(3)
    return (
        b + a**2 * b + c - a**2 * c - b**2 * c + a**2 * b**2 * c + b * c**2 + a**2 * b * c**2,
        a + b - a**2 * b - b * c**2 + a**2 * b * c**2 + a * b**2 * c**2,
        a * b**2 + c + a**2 * c + b**2 * c + a**2 * b**2 * c + a * c**2,
    )


def _p_c() -> tuple[LaurentPoly, ...]:
    a, b, c, d, e, f = LaurentPoly.variables(6)
    return (
        a**2 * c - a**2 * b**2 * c + a**2 * c**2 - b**2 * c**2 + a**2 * d**2
        - b**2 * d**2 + c * d**2 - b**2 * c * d**2,
        a**2 * b * c + b * c * d**2 - a**2 * c * d * e + b**2 * c * d * e
        + a * b * c**2 * f + a * b * d**2 * f - a * c * d * e * f + a * b**2 * c * d * e * f,
        a * c * d - a * b**2 * c * d + a * b * c**2 * e + a * b * d**2 * e
        + a**2 * c * d * f - b**2 * c * d * f + a**2 * b * c * e * f + b * c * d**2 * e * f,
    )


def _p_d() -> tuple[LaurentPoly, ...]:
    a, b, c, d, e, f = LaurentPoly.variables(6)
    return (
        a * b * c + a * b * c * d - b * c * e - a * d * e - b * c * f - a * d * f + e * f + d * e * f,
        a * c * d + a * b * c * d - a * b * e - b * c * e + a * d * f + c * d * f - e * f - b * e * f,
        a * b * c + a * b * d + b * e + a * d * e - b * c * f - a * c * d * f - c * e * f - d * e * f,
        a * b * d + a * c * d + b * e + a * b * e + c * d * f + a * c * d * f + b * e * f + c * e * f,
    )


def _p_e() -> tuple[LaurentPoly, ...]:
    a, b, c, d, e, f = LaurentPoly.variables(6)
    return (
        1 + b + c - b * c - d + b * d + c * d + b * c * d,
        1 - a - c - a * c - e - a * e - c * e + a * c * e,
        1 + a - b + a * b + f - a * f + b * f + a * b * f,
        1 + d + e - d * e - f + d * f + e * f + d * e * f,
    )


def _p_f() -> tuple[LaurentPoly, ...]:
    a, b, c, d, e, f, g, h = LaurentPoly.variables(8)
    return (
        -c * d + b**2 * c * d + b * e - b * c**2 * e + b * d**2 * e - b * c**2 * d**2 * e
        - c * d * e**2 + b**2 * c * d * e**2,
        -a * e + a * d**2 * e + d * h - a**2 * d * h - d * e**2 * h + a**2 * d * e**2 * h
        + a * e * h**2 - a * d**2 * e * h**2,
        b * f + b * c**2 * f - c * g - b**2 * c * g + c * f**2 * g + b**2 * c * f**2 * g
        - b * f * g**2 - b * c**2 * f * g**2,
        -a * f - a * f * g**2 + g * h + a**2 * g * h + f**2 * g * h + a**2 * f**2 * g * h
        - a * f * h**2 - a * f * g**2 * h**2,
        a * b * c**2 * d**2 * e * f + a * b * c**2 * e * f * g**2 - c * d * g * h
        + a**2 * b**2 * c * d * g * h - c * d * e**2 * f**2 * g * h
        + a**2 * b**2 * c * d * e**2 * f**2 * g * h - a * b * d**2 * e * f * h**2
        - a * b * e * f * g**2 * h**2,
        a * b * e * f + a * b * d**2 * e * f * g**2 + a**2 * c * d * e**2 * g * h
        - b**2 * c * d * e**2 * g * h + a**2 * c * d * f**2 * g * h
        - b**2 * c * d * f**2 * g * h - a * b * c**2 * e * f * h**2
        - a * b * c**2 * d**2 * e * f * g**2 * h**2,
    )


def _trig_v(x: Sequence[complex]) -> list[complex]:
    a, b, c = x
    return [
        a.real * c.real - a.imag * b.imag,
        a.real * b.real - a.imag * c.imag + b.real * c.real,
        a.real * b.real + a.imag * c.imag + b.imag * c.imag,
    ]


def _trig_f(x: Sequence[complex]) -> list[complex]:
    a, b, c, d, e, f, g, h = x
    return [
        b.imag * e.real - c.imag * d.real,
        a.imag * e.imag - d.imag * h.imag,
        b.real * f.imag - c.real * g.imag,
        a.real * f.real - g.real * h.real,
        (a * b).imag * (e * f).real - (d * g.conjugate()).real * (h * c.conjugate()).imag,
        (a * b.conjugate()).imag * (e * f.conjugate()).real - (d * g).real * (h * c).imag,
    ]


@dataclass(frozen=True)
class System:
    name: str
    nvars: int
    polys: tuple[LaurentPoly, ...] = ()
    trig: Callable[[Sequence[complex]], list] | None = None

    def values(self, point: Sequence[complex]) -> list[complex]:
        point = [complex(v) for v in point]
        if len(point) != self.nvars:
            raise ValueError(f"{self.name} needs {self.nvars} values, got {len(point)}")
        if self.trig is not None:
            return [complex(v) for v in self.trig(point)]
        return [p.evaluate(point) for p in self.polys]

    def residual(self, point: Sequence[complex]) -> float:
        return float(max(abs(v) for v in self.values(point)))


SYSTEMS: dict[str, System] = {
    "p_B": System("p_B", 4, _p_b()),
    "p_V": System("p_V", 3, _p_v()),
    "p_C": System("p_C", 6, _p_c()),
    "p_D": System("p_D", 6, _p_d()),
    "p_E": System("p_E", 6, _p_e()),
    "p_F": System("p_F", 8, _p_f()),
    "trig_V": System("trig_V", 3, trig=_trig_v),
    "trig_F": System("trig_F", 8, trig=_trig_f),
}

_LOOKUP = {k.lower().replace("_", ""): v for k, v in SYSTEMS.items()}


def get_system(name: str) -> System:
    try:
        return _LOOKUP[name.lower().replace("_", "")]
    except KeyError:
        raise UnknownSystem(
            f"unknown system {name!r}; choose from {', '.join(SYSTEMS)}"
        ) from None


def residual_system(name: str, values: Sequence[complex]) -> float:
    """Largest modulus over the equations of system ``name`` at ``values``."""
    return get_system(name).residual(values)


def polynomial(name: str, index: int) -> LaurentPoly:
    """The ``index``-th (1-based) polynomial of a polynomial system."""
    sys_ = get_system(name)
    if not sys_.polys:
        raise UnknownSystem(f"{name} is not a polynomial system")
    return sys_.polys[index - 1]


# Which symbol tuple of each family's table feeds which system.
FAMILY_SYSTEMS = {
    "T8B_3": "p_B",
    "T8C_3": "p_C",
    "T8D_3": "p_D",
    "T8E_3": "p_E",
    "T8F_3": "p_F",
    "V8B_0": "p_V",
}


def family_residual(family_id: str, symbol_values: Sequence[complex]) -> float:
    return residual_system(FAMILY_SYSTEMS[family_id], np.asarray(symbol_values))
