"""Exact integer cohomology and first Pontryagin class of S^7_Omega."""

from .cohomology import (
    CohomologyReport,
    OrderLedger,
    cohomology_report,
    cup_product,
    order_cross_check,
    pontryagin_class,
    pontryagin_via_vr,
    relations_matrix,
    torsion_group,
)
from .estimator import S7Cohomology
from .exceptions import ArgumentError, BudgetExceededError, CrossCheckError, NotValidatedError, S7OmegaError
from .families import BgmrParams, bgmr_family, random_valid_omega
from .linalg import AbelianGroup, IntMatrix, cokernel, det_exact, smith_normal_form
from .omega import OmegaMatrix, check_condition, sign_epsilon
from .poly import IntPolynomial, PolynomialRing
from .trees import EdgeWeights, enumerate_trees, laplacian_minor, prufer_decode, prufer_encode, tree_order_sum

__version__ = "0.1.0"

__all__ = [
    "AbelianGroup", "ArgumentError", "BgmrParams", "BudgetExceededError", "CohomologyReport",
    "CrossCheckError", "EdgeWeights", "IntMatrix", "IntPolynomial", "NotValidatedError", "OmegaMatrix",
    "OrderLedger", "PolynomialRing", "S7Cohomology", "S7OmegaError", "bgmr_family", "check_condition",
    "cohomology_report", "cokernel", "cup_product", "det_exact", "enumerate_trees", "laplacian_minor",
    "order_cross_check", "pontryagin_class", "pontryagin_via_vr", "prufer_decode", "prufer_encode",
    "random_valid_omega", "relations_matrix", "sign_epsilon", "smith_normal_form", "torsion_group",
    "tree_order_sum",
]
