"""Frobenius powers, colon decompositions and the finitely-generated locus
of square-free monomial ideals in prime characteristic."""

from ._kernels import ACTIVE_BACKEND
from .errors import (
    AmbientMismatch,
    DegenerateIdeal,
    FroblocError,
    InadmissibleStratum,
    ResourceLimit,
    SquareFreeViolation,
)
from .monomials import (
    MonomialIdeal,
    PrimePower,
    colon,
    divides,
    frobenius_power,
    lcm,
    minimalize,
    mono_mul,
)
from .symbolic import (
    ColonDecomposition,
    GenerationClass,
    SymbolicIdeal,
    SymExp,
    classify_global,
    colon_symbolic,
    compute_beta,
    compute_u_prime,
    decompose,
    validate_square_free,
)
from .locus import (
    Certificate,
    LocusReport,
    Openness,
    Stratum,
    StratumVerdict,
    build_locus,
    classify_stratum,
    enumerate_strata,
    is_open,
    render_expression,
    substitute,
)
from .oracle import GenerationProfile, classify_up_to, compute_f, compute_l

__version__ = "0.1.0"

__all__ = [
    "ACTIVE_BACKEND",
    "AmbientMismatch",
    "Certificate",
    "ColonDecomposition",
    "DegenerateIdeal",
    "FroblocError",
    "GenerationClass",
    "GenerationProfile",
    "InadmissibleStratum",
    "LocusReport",
    "MonomialIdeal",
    "Openness",
    "PrimePower",
    "ResourceLimit",
    "SquareFreeViolation",
    "Stratum",
    "StratumVerdict",
    "SymExp",
    "SymbolicIdeal",
    "build_locus",
    "classify_global",
    "classify_stratum",
    "classify_up_to",
    "colon",
    "colon_symbolic",
    "compute_beta",
    "compute_f",
    "compute_l",
    "compute_u_prime",
    "decompose",
    "divides",
    "enumerate_strata",
    "frobenius_power",
    "is_open",
    "lcm",
    "minimalize",
    "mono_mul",
    "render_expression",
    "substitute",
    "validate_square_free",
]
