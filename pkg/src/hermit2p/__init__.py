"""Two-point codes on the Hermitian curve and the quantum codes built from them."""

from __future__ import annotations

from .codes import (
    LinearCode,
    evaluate_code,
    evaluation_image,
    formula_dual,
    formula_dual_code,
    hermitian_dual,
    nullspace_dual,
    same_code,
)
from .curve import CurvePoint, affine_points, curve_constants, evaluation_set
from .gf import FieldElement, FieldSpec, field_arith, field_make
from .oracle import BudgetExceeded, Oracle, WeightDistribution, macwilliams
from .params import ClassicalParams, comparison_table, decompose_r, one_point_params, two_point_params
from .quantum import QuantumCodeParams, one_point_aqecc, search_nested_pairs, two_point_aqecc
from .rrspace import TwoPointDivisor, monomial_basis, rr_dim

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "ClassicalParams",
    "CurvePoint",
    "FieldElement",
    "FieldSpec",
    "LinearCode",
    "Oracle",
    "QuantumCodeParams",
    "TwoPointDivisor",
    "WeightDistribution",
    "affine_points",
    "comparison_table",
    "curve_constants",
    "decompose_r",
    "evaluate_code",
    "evaluation_image",
    "evaluation_set",
    "field_arith",
    "field_make",
    "formula_dual",
    "formula_dual_code",
    "hermitian_dual",
    "macwilliams",
    "monomial_basis",
    "nullspace_dual",
    "one_point_aqecc",
    "one_point_params",
    "rr_dim",
    "same_code",
    "search_nested_pairs",
    "two_point_aqecc",
    "two_point_params",
]
