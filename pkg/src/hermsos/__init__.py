"""Exact arithmetic for Hermitian squared-norm forms.

Polynomial maps with Gaussian-rational coefficients, their squared norms as
Hermitian forms over monomial bases, exact rank/inertia/sum-of-squares
computations, isometry identities between such norms, and the integer
bounds constraining how many squares those identities can use.
"""

from .bounds import (
    BoundReport,
    check_affine_norm_product,
    check_gap_feasible,
    check_homogeneous_norm_product,
    check_min_embedding_dim,
    check_modification_rank,
    check_norm_product,
    check_power_rank,
    check_rational_modification_rank,
    extremal_lower,
    extremal_power_lower,
    gap_intervals,
    prime_substitution,
    verify_injective,
)
from .documents import (
    DocumentError,
    EnsembleConfig,
    parse_form_document,
    parse_map_document,
    random_map,
    serialize_form_document,
    serialize_map_document,
)
from .isometry import (
    ModificationSpec,
    NotMinimalError,
    NotNormalizedError,
    divide_by_norm,
    identity_mismatch,
    modification_form,
    one_plus_norm,
    one_plus_norm_z,
    r_lambda,
    solve_h,
    tensor_power_rank,
    verify_identity,
)
from .polyalg import (
    GR_I,
    GR_ONE,
    GR_ZERO,
    GaussianRational,
    HermitianForm,
    HoloMap,
    HoloPoly,
    Monomial,
    dehomogenize_form,
    dehomogenize_map,
    grlex_key,
    homogenize_form,
    homogenize_map,
    monomials_of_degree,
    monomials_up_to_degree,
    norm_form,
    oplus,
    substitute_powers,
    tensor,
    truncate_map,
)
from .rankdecomp import (
    Inertia,
    NotSOSError,
    ScaledMap,
    affine_split,
    extract_sos,
    grams_equal,
    inertia,
    reduce_minimal,
)

__all__ = [
    "BoundReport",
    "DocumentError",
    "EnsembleConfig",
    "GR_I",
    "GR_ONE",
    "GR_ZERO",
    "GaussianRational",
    "HermitianForm",
    "HoloMap",
    "HoloPoly",
    "Inertia",
    "ModificationSpec",
    "Monomial",
    "NotMinimalError",
    "NotNormalizedError",
    "NotSOSError",
    "ScaledMap",
    "affine_split",
    "check_affine_norm_product",
    "check_gap_feasible",
    "check_homogeneous_norm_product",
    "check_min_embedding_dim",
    "check_modification_rank",
    "check_norm_product",
    "check_power_rank",
    "check_rational_modification_rank",
    "dehomogenize_form",
    "dehomogenize_map",
    "divide_by_norm",
    "extract_sos",
    "extremal_lower",
    "extremal_power_lower",
    "gap_intervals",
    "grams_equal",
    "grlex_key",
    "homogenize_form",
    "homogenize_map",
    "identity_mismatch",
    "inertia",
    "modification_form",
    "monomials_of_degree",
    "monomials_up_to_degree",
    "norm_form",
    "one_plus_norm",
    "one_plus_norm_z",
    "oplus",
    "parse_form_document",
    "parse_map_document",
    "prime_substitution",
    "r_lambda",
    "random_map",
    "reduce_minimal",
    "serialize_form_document",
    "serialize_map_document",
    "solve_h",
    "substitute_powers",
    "tensor",
    "tensor_power_rank",
    "truncate_map",
    "verify_identity",
    "verify_injective",
]
