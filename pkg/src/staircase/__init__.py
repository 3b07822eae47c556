"""Exact arithmetic on monomial ideals of K[x, y] and generator counts of their powers."""

__version__ = "0.1.0"

from .errors import (
    ExponentOverflow,
    InvalidParams,
    NotMPrimary,
    StaircaseError,
    VerificationError,
    ZeroIdeal,
)
from .ideal import (
    EquigeneratedSpec,
    Monomial,
    StaircaseIdeal,
    contains,
    contains_monomial,
    deg_ideal,
    equals,
    ideal_sum,
    mu,
    normalize,
    power,
    powers,
    product,
)
from .grading import (
    GradedSlice,
    cm_type,
    colon_by_maximal,
    graded_dim,
    graded_slice,
    is_m_primary,
    socle_monomials,
)
from .family import (
    FamilyParams,
    MuReport,
    build_family,
    choose_parameters,
    component_degree,
    predicted_mu,
    predicted_power_structure,
    sign_sequence,
    verify_headline,
)

__all__ = [
    "ExponentOverflow",
    "InvalidParams",
    "NotMPrimary",
    "StaircaseError",
    "VerificationError",
    "ZeroIdeal",
    "EquigeneratedSpec",
    "Monomial",
    "StaircaseIdeal",
    "contains",
    "contains_monomial",
    "deg_ideal",
    "equals",
    "ideal_sum",
    "mu",
    "normalize",
    "power",
    "powers",
    "product",
    "GradedSlice",
    "cm_type",
    "colon_by_maximal",
    "graded_dim",
    "graded_slice",
    "is_m_primary",
    "socle_monomials",
    "FamilyParams",
    "MuReport",
    "build_family",
    "choose_parameters",
    "component_degree",
    "predicted_mu",
    "predicted_power_structure",
    "sign_sequence",
    "verify_headline",
]
