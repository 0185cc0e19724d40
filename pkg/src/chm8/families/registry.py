"""Family registry: constructors, parameter signatures, domains, branches."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Sequence

import numpy as np

from ..errors import DegenerateDenominator, OutOfDomain, UnknownFamily
from ..numerics import DEFAULT_TOL, ToleranceConfig
from . import catalogue as cat
from . import solutions as sol
from .monomial import MonomialMatrix
from .solutions import INSIDE, DomainVerdict, e_i


class FamilyId(str, Enum):
    F8_5 = "F8_5"
    D8A_5 = "D8A_5"
    D8B_5 = "D8B_5"
    S8A_4 = "S8A_4"
    S8B_4 = "S8B_4"
    T8B_3 = "T8B_3"
    T8C_3 = "T8C_3"
    T8D_3 = "T8D_3"
    T8D_T_3 = "T8D_T_3"
    T8E_3 = "T8E_3"
    T8E_T_3 = "T8E_T_3"
    T8F_3 = "T8F_3"
    T8_1_RAW = "T8_1_RAW"
    A8A_0 = "A8A_0"
    A8B_0 = "A8B_0"
    V8A_0 = "V8A_0"
    V8B_0 = "V8B_0"
    B1_BUTSON = "B1_BUTSON"
    B2_BUTSON = "B2_BUTSON"


ANGLE = "angle"
REAL_INTERVAL = "real_interval"


@dataclass(frozen=True)
class ParamSignature:
    count: int
    kinds: tuple[str, ...]
    branch_count: int = 1


# solver(params, branch, tol) -> (symbol values | None, DomainVerdict)
Solver = Callable[[Sequence[float], int, ToleranceConfig], tuple]


@dataclass(frozen=True)
class FamilySpec:
    id: FamilyId
    name: str
    signature: ParamSignature
    table: MonomialMatrix
    solver: Solver
    constants: dict = field(default_factory=dict)
    is_transpose_of: FamilyId | None = None
    in_inequivalence_list: bool = False
    parametric: bool = True
    # free symbols of the table, i.e. the ones the membership search recovers
    n_free: int = 0

    @property
    def dephased_table(self) -> MonomialMatrix:
        return _dephased_tables.setdefault(self.id, self.table.dephased())


_dephased_tables: dict = {}


def _angles(params) -> list[complex]:
    return [e_i(float(t)) for t in params]


def _affine_solver(params, branch, tol):
    return tuple(_angles(params)), INSIDE


def _t8b_solver(params, branch, tol):
    return sol.solve_t8b(*_angles(params), tol=tol)


def _t8c_solver(params, branch, tol):
    return sol.solve_t8c(*_angles(params), branch=branch, tol=tol)


def _t8d_solver(params, branch, tol):
    return sol.solve_t8d(*_angles(params), branch=branch, tol=tol)


def _t8e_solver(params, branch, tol):
    return sol.solve_t8e(*_angles(params), tol=tol)


def _t8f_solver(params, branch, tol):
    return sol.solve_t8f(*[float(p) for p in params], branch=branch, tol=tol)


def _constant_solver(values):
    def solver(params, branch, tol):
        return tuple(values), INSIDE

    return solver


def _angle_sig(k: int, branches: int = 1) -> ParamSignature:
    return ParamSignature(k, (ANGLE,) * k, branches)


def _build() -> dict[FamilyId, FamilySpec]:
    F = FamilyId
    specs: list[FamilySpec] = []
    omega8 = {"omega": cat.OMEGA8}

    def add(**kw):
        specs.append(FamilySpec(**kw))

    d8a = cat.d8a_table()
    s8a = cat.s8a_table()
    t8d = cat.t8d_table()
    t8e = cat.t8e_table()
    add(id=F.F8_5, name="F8", signature=_angle_sig(5), table=cat.f8_table(),
        solver=_affine_solver, constants=omega8, in_inequivalence_list=True, n_free=5)
    add(id=F.D8A_5, name="D8A", signature=_angle_sig(5), table=d8a,
        solver=_affine_solver, constants=omega8, in_inequivalence_list=True, n_free=5)
    add(id=F.D8B_5, name="D8B", signature=_angle_sig(5), table=d8a.transpose(),
        solver=_affine_solver, constants=omega8, is_transpose_of=F.D8A_5,
        in_inequivalence_list=True, n_free=5)
    add(id=F.S8A_4, name="S8A", signature=_angle_sig(4), table=s8a,
        solver=_affine_solver, in_inequivalence_list=True, n_free=4)
    add(id=F.S8B_4, name="S8B", signature=_angle_sig(4), table=s8a.transpose(),
        solver=_affine_solver, is_transpose_of=F.S8A_4, in_inequivalence_list=True, n_free=4)
    add(id=F.T8B_3, name="T8B", signature=_angle_sig(3), table=cat.t8b_table(),
        solver=_t8b_solver, in_inequivalence_list=True, n_free=3)
    add(id=F.T8C_3, name="T8C", signature=_angle_sig(3, 4), table=cat.t8c_table(),
        solver=_t8c_solver, in_inequivalence_list=True, n_free=3)
    add(id=F.T8D_3, name="T8D", signature=_angle_sig(3, 2), table=t8d,
        solver=_t8d_solver, in_inequivalence_list=True, n_free=3)
    add(id=F.T8D_T_3, name="T8Dt", signature=_angle_sig(3, 2), table=t8d.transpose(),
        solver=_t8d_solver, is_transpose_of=F.T8D_3, in_inequivalence_list=True, n_free=3)
    add(id=F.T8E_3, name="T8E", signature=_angle_sig(3), table=t8e,
        solver=_t8e_solver, in_inequivalence_list=True, n_free=3)
    add(id=F.T8E_T_3, name="T8Et", signature=_angle_sig(3), table=t8e.transpose(),
        solver=_t8e_solver, is_transpose_of=F.T8E_3, in_inequivalence_list=True, n_free=3)
    add(id=F.T8F_3, name="T8F", signature=ParamSignature(3, (REAL_INTERVAL,) * 3, 128),
        table=cat.t8f_table(), solver=_t8f_solver, in_inequivalence_list=True, n_free=3)
    add(id=F.T8_1_RAW, name="T8raw", signature=_angle_sig(4), table=cat.t8raw_table(),
        solver=_affine_solver, constants={"zeta": cat.ZETA20}, n_free=4)

    a8a = cat.a8a_table()
    add(id=F.A8A_0, name="A8A", signature=_angle_sig(0), table=a8a,
        solver=_constant_solver([sol.A8A_VALUE]), constants={"a": sol.A8A_VALUE},
        parametric=False)
    add(id=F.A8B_0, name="A8B", signature=_angle_sig(0), table=a8a.conj(),
        solver=_constant_solver([sol.A8A_VALUE]), constants={"a": sol.A8A_VALUE},
        parametric=False)
    v8 = cat.v8_table()
    gen = sol.v8b_generator()
    add(id=F.V8B_0, name="V8B", signature=_angle_sig(0), table=v8,
        solver=_constant_solver(gen), constants=dict(zip("abc", gen)), parametric=False)
    add(id=F.V8A_0, name="V8A", signature=_angle_sig(0), table=v8.transpose().conj(),
        solver=_constant_solver(gen), constants=dict(zip("abc", gen)), parametric=False)
    b1 = cat.b1_table()
    omega6 = {"omega": cat.OMEGA6}
    add(id=F.B1_BUTSON, name="B1", signature=_angle_sig(0), table=b1,
        solver=_constant_solver([1.0]), constants=omega6, parametric=False)
    add(id=F.B2_BUTSON, name="B2", signature=_angle_sig(0), table=b1.transpose(),
        solver=_constant_solver([1.0]), constants=omega6, is_transpose_of=F.B1_BUTSON,
        parametric=False)
    return {s.id: s for s in specs}


REGISTRY: dict[FamilyId, FamilySpec] = _build()

INEQUIVALENCE_LIST: tuple[FamilyId, ...] = tuple(
    fid for fid, s in REGISTRY.items() if s.in_inequivalence_list
)

_BY_NAME = {s.name.lower(): s for s in REGISTRY.values()}
_BY_NAME.update({s.id.value.lower(): s for s in REGISTRY.values()})


def get_family(family) -> FamilySpec:
    if isinstance(family, FamilySpec):
        return family
    if isinstance(family, FamilyId):
        return REGISTRY[family]
    try:
        return _BY_NAME[str(family).lower()]
    except KeyError:
        raise UnknownFamily(f"unknown family {family!r}") from None


def branch_variants(family) -> int:
    return get_family(family).signature.branch_count


def _check_call(spec: FamilySpec, params, branch: int):
    params = [float(p) for p in params]
    if len(params) != spec.signature.count:
        raise ValueError(
            f"{spec.name} takes {spec.signature.count} parameters, got {len(params)}"
        )
    if not 0 <= branch < spec.signature.branch_count:
        raise ValueError(f"{spec.name} has {spec.signature.branch_count} branch(es)")
    return params


def solve_symbols(family, params, branch: int = 0, tol: ToleranceConfig = DEFAULT_TOL):
    """Full tuple of table symbol values at ``params`` plus the domain verdict."""
    spec = get_family(family)
    params = _check_call(spec, params, branch)
    return spec.solver(params, branch, tol)


def in_domain(family, params, branch: int = 0, tol: ToleranceConfig = DEFAULT_TOL) -> DomainVerdict:
    _, verdict = solve_symbols(family, params, branch, tol)
    return verdict


def eval_family(family, params=(), branch: int = 0, tol: ToleranceConfig = DEFAULT_TOL) -> np.ndarray:
    """Matrix of ``family`` at ``params`` in catalogue form (not dephased)."""
    spec = get_family(family)
    values, verdict = solve_symbols(spec, params, branch, tol)
    if not verdict.inside:
        if verdict.degenerate:
            raise DegenerateDenominator(verdict)
        raise OutOfDomain(verdict)
    return spec.table.evaluate(values)


def eval_symbols(family, values) -> np.ndarray:
    """Evaluate the catalogue table at explicit symbol values (no solving)."""
    return get_family(family).table.evaluate(values)


def eval_t8_raw(x: complex, y: complex, z: complex, u: complex) -> np.ndarray:
    return REGISTRY[FamilyId.T8_1_RAW].table.evaluate([x, y, z, u])


def reference_point(family) -> tuple[tuple[float, ...], int]:
    """Parameters and branch of the point (e^{2i}, e^{3i}, ..., e^{(k+1)i}).

    For the angle families these are the angles 2, ..., k+1. T8F is
    parametrised by (Re a, Re b, Im c); the point a = e^{2i}, b = e^{3i},
    c = e^{4i} needs the branch that flips the sign of Re c.
    """
    spec = get_family(family)
    k = spec.signature.count
    if spec.id is FamilyId.T8F_3:
        signs = [1] * 7
        a, b, c = e_i(2), e_i(3), e_i(4)
        signs[0] = 1 if a.imag >= 0 else -1
        signs[1] = 1 if b.imag >= 0 else -1
        signs[2] = 1 if c.real >= 0 else -1
        return (a.real, b.real, c.imag), sol.t8f_branch(signs)
    return tuple(float(t) for t in range(2, k + 2)), 0


def random_parameters(family, rng: np.random.Generator) -> tuple[float, ...]:
    spec = get_family(family)
    out = []
    for kind in spec.signature.kinds:
        if kind == ANGLE:
            out.append(float(rng.uniform(-math.pi, math.pi)))
        else:
            out.append(float(rng.uniform(-1.0, 1.0)))
    return tuple(out)


def sample_in_domain(family, rng: np.random.Generator, branch: int | None = None,
                     tol: ToleranceConfig = DEFAULT_TOL, max_tries: int = 10000):
    """Rejection-sample a point of the domain; returns (params, branch, values)."""
    spec = get_family(family)
    for _ in range(max_tries):
        params = random_parameters(spec, rng)
        br = int(rng.integers(spec.signature.branch_count)) if branch is None else branch
        values, verdict = spec.solver(params, br, tol)
        if verdict.inside:
            return params, br, values
    raise RuntimeError(f"no in-domain point found for {spec.name}")
