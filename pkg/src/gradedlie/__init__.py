"""Exact computations with fundamental graded Lie algebras and their prolongations."""

from .cartantype import check_transitive_cartan, k_algebra, k_layer, w_algebra, w_layer, weighted_poly_dim
from .construct import contact_algebra, free_fgla, free_pseudoproduct_fgla, model_mn3, universal_fgla
from .exactlin import Matrix, Subspace, kernel_basis, rref, solve
from .fgla import (
    GradedLieAlgebra,
    GradedMap,
    HomomorphismError,
    PseudoProduct,
    centralizer_of_gm2_in_gm1,
    check_antisymmetry,
    check_grading,
    check_jacobi,
    extend_graded_automorphism,
    extend_hom,
    graded_ideal_generated_by,
    is_fundamental,
    is_nondegenerate,
    quotient,
    subalgebra_generated_by,
)
from .freelie import hall_basis, normal_form, witt_dimension
from .prolong import (
    derivations_degree0,
    prolong_layer,
    restricted_derivations_degree0,
    restricted_prolong_layer,
    truncated_prolongation,
    verify_transitive,
)
from .rootgrade import canonical_cross, dim_top_is_one, grade_by_marks, positive_roots, prolongation_exception

__version__ = "0.1.0"

__all__ = [
    "check_transitive_cartan",
    "k_algebra",
    "k_layer",
    "w_algebra",
    "w_layer",
    "weighted_poly_dim",
    "contact_algebra",
    "free_fgla",
    "free_pseudoproduct_fgla",
    "model_mn3",
    "universal_fgla",
    "Matrix",
    "Subspace",
    "kernel_basis",
    "rref",
    "solve",
    "GradedLieAlgebra",
    "GradedMap",
    "HomomorphismError",
    "PseudoProduct",
    "centralizer_of_gm2_in_gm1",
    "check_antisymmetry",
    "check_grading",
    "check_jacobi",
    "extend_graded_automorphism",
    "extend_hom",
    "graded_ideal_generated_by",
    "is_fundamental",
    "is_nondegenerate",
    "quotient",
    "subalgebra_generated_by",
    "hall_basis",
    "normal_form",
    "witt_dimension",
    "derivations_degree0",
    "prolong_layer",
    "restricted_derivations_degree0",
    "restricted_prolong_layer",
    "truncated_prolongation",
    "verify_transitive",
    "canonical_cross",
    "dim_top_is_one",
    "grade_by_marks",
    "positive_roots",
    "prolongation_exception",
]
