"""Exact decision engine for quiver varieties and surface-group character
varieties: roots, canonical decompositions, strata, codimension-two leaves
and symplectic-resolution verdicts, all in integer/rational arithmetic."""

from .charvar import (
    SurfaceVariety,
    char_as_quiver,
    dimension_char,
    local_quiver_char,
    resolution_verdict_char,
    singular_components_char,
    strata_char,
)
from .corpus import builtin
from .decomp import (
    CanonicalDecomposition,
    canonical_decomposition,
    is_minimal,
    max_p,
    restricted_roots,
    sigma_enumerate,
    sigma_member,
)
from .errors import DomainError, InternalConsistencyError
from .leaves import (
    AffineRejection,
    AffineType,
    IsotropicDecomposition,
    affine_classify,
    build_cartan,
    codim2_leaves,
    isotropic_decompositions,
    namikawa_factors,
)
from .quiver import (
    ParamSet,
    Quiver,
    cartan_pairing,
    frame,
    p_value,
    reflect,
    ringel_form,
    validate_params,
)
from .roots import RootInfo, RootKind, classify, enumerate_roots, in_fundamental_region
from .variety import (
    ResolutionVerdict,
    Stratum,
    VarietyDescriptor,
    is_generic_stability,
)

__version__ = "0.1.0"

__all__ = [
    "AffineRejection",
    "AffineType",
    "CanonicalDecomposition",
    "DomainError",
    "InternalConsistencyError",
    "IsotropicDecomposition",
    "ParamSet",
    "Quiver",
    "ResolutionVerdict",
    "RootInfo",
    "RootKind",
    "Stratum",
    "SurfaceVariety",
    "VarietyDescriptor",
    "affine_classify",
    "build_cartan",
    "builtin",
    "canonical_decomposition",
    "cartan_pairing",
    "char_as_quiver",
    "classify",
    "codim2_leaves",
    "dimension_char",
    "enumerate_roots",
    "frame",
    "in_fundamental_region",
    "is_generic_stability",
    "is_minimal",
    "isotropic_decompositions",
    "local_quiver_char",
    "max_p",
    "namikawa_factors",
    "p_value",
    "reflect",
    "resolution_verdict_char",
    "restricted_roots",
    "ringel_form",
    "sigma_enumerate",
    "sigma_member",
    "singular_components_char",
    "strata_char",
    "validate_params",
]
