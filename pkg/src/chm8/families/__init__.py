"""Catalogue of complex Hadamard matrices and families of order 8."""
from .registry import (
    ANGLE,
    INEQUIVALENCE_LIST,
    REAL_INTERVAL,
    REGISTRY,
    FamilyId,
    FamilySpec,
    ParamSignature,
    branch_variants,
    eval_family,
    eval_symbols,
    eval_t8_raw,
    get_family,
    in_domain,
    random_parameters,
    sample_in_domain,
    solve_symbols,
    reference_point,
)
from .solutions import DomainVerdict, Reason, v8_sixteen_solutions
from .systems import SYSTEMS, residual_system

__all__ = [
    "ANGLE",
    "REAL_INTERVAL",
    "INEQUIVALENCE_LIST",
    "REGISTRY",
    "SYSTEMS",
    "FamilyId",
    "FamilySpec",
    "ParamSignature",
    "DomainVerdict",
    "Reason",
    "branch_variants",
    "eval_family",
    "eval_symbols",
    "eval_t8_raw",
    "get_family",
    "in_domain",
    "random_parameters",
    "residual_system",
    "sample_in_domain",
    "solve_symbols",
    "reference_point",
    "v8_sixteen_solutions",
]
