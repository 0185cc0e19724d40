"""Complex Hadamard matrices of order 8: families, equivalence and membership."""
from .equivalence import (
    EquivalenceWitness,
    PermPair,
    defect,
    dephased_classes,
    equivalent,
    perm_equivalent,
)
from .families import FamilyId, eval_family, get_family, in_domain
from .membership import MembershipReport, inequivalence_table, member
from .numerics import DEFAULT_TOL, ToleranceConfig
from .verify import dephase, gram_residual, is_butson, is_hadamard

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_TOL",
    "EquivalenceWitness",
    "FamilyId",
    "MembershipReport",
    "PermPair",
    "ToleranceConfig",
    "defect",
    "dephase",
    "dephased_classes",
    "equivalent",
    "eval_family",
    "get_family",
    "gram_residual",
    "in_domain",
    "inequivalence_table",
    "is_butson",
    "is_hadamard",
    "member",
    "perm_equivalent",
]
