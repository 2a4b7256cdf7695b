"""Workbench for Singleton-optimal locally repairable codes.

Exact GF(p^m) arithmetic, linear-code algebra, locality analysis through
dual-codeword supports, the [H1; H2] parity-check normal form, derived-code
transformations, certified and asymptotic length bounds, and an exhaustive
subspace search that certifies small-parameter existence or non-existence.
"""

from .code import (
    LinearCode,
    SupportSet,
    classify,
    code_from_generator,
    code_from_parity,
    dual,
    min_distance,
    puncture,
    shorten,
    singleton_defect,
    weight_distribution,
)
from .field import FieldSpec, fe_add, fe_inv, fe_mul, field_from_order, field_new
from .lrc import (
    LocalityProfile,
    NormalForm,
    analyze,
    build_normal_form,
    disjoint_partition,
    divisibility_identity,
    is_singleton_optimal,
    locality,
    singleton_slack,
    solve_k,
)
from .matrix import GFMatrix
from .search import (
    SearchOutcome,
    SearchTask,
    enumerate_subspaces,
    evaluation_fixture,
    gaussian_binomial,
    random_code,
    search_singleton_optimal,
)
from .transform import (
    derive_ci,
    derive_mds,
    derive_residual,
    propagate_optimal,
    reduce_distance,
    run_pipeline,
)

__version__ = "0.1.0"

__all__ = [
    "FieldSpec",
    "GFMatrix",
    "LinearCode",
    "LocalityProfile",
    "NormalForm",
    "SearchOutcome",
    "SearchTask",
    "SupportSet",
    "analyze",
    "build_normal_form",
    "classify",
    "code_from_generator",
    "code_from_parity",
    "derive_ci",
    "derive_mds",
    "derive_residual",
    "disjoint_partition",
    "divisibility_identity",
    "dual",
    "enumerate_subspaces",
    "evaluation_fixture",
    "fe_add",
    "fe_inv",
    "fe_mul",
    "field_from_order",
    "field_new",
    "gaussian_binomial",
    "is_singleton_optimal",
    "locality",
    "min_distance",
    "propagate_optimal",
    "puncture",
    "random_code",
    "reduce_distance",
    "run_pipeline",
    "search_singleton_optimal",
    "shorten",
    "singleton_defect",
    "singleton_slack",
    "solve_k",
    "weight_distribution",
]
