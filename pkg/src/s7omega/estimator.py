"""scikit-learn style front end.

``fit`` takes an Omega matrix and learns the group ``G_Omega``;
``transform`` sends quadratic forms in ``x_1..x_k`` (as coefficient rows in
the basis ``x_1^2, x_1 x_2, ..., x_k^2``) to their normal form in
``G_Omega``.

>>> est = S7Cohomology().fit([[1, 0], [0, 1], [1, 2], [3, 1]])
>>> est.order_
124
>>> est.transform([[0, 0, 1]]).tolist()
[[1]]
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from .classes import quadratic_basis, quadratic_coords
from .cohomology import cohomology_report
from .exceptions import CrossCheckError, NotValidatedError
from .linalg import GroupElement
from .omega import check_condition
from .poly import IntPolynomial
from .validation import check_coordinate_rows, check_omega_array, check_ordering


class S7Cohomology(BaseEstimator):
    """Integer cohomology of ``S^7_Omega`` as a fitted estimator.

    Parameters
    ----------
    tree_budget : int, optional
        Largest ``k + 2`` for which trees are enumerated in the order
        cross-check.  ``None`` uses the package default.
    ordering : str or sequence of int, optional
        Vertex ordering for the Laplacian minor and relations matrix.
    strict : bool, default True
        Raise if any internal cross-check disagrees instead of keeping an
        invalid report.

    Attributes
    ----------
    omega_ : OmegaMatrix
    report_ : CohomologyReport
    torsion_ : AbelianGroup
    invariant_factors_ : tuple of int
    order_ : int
    betti_ : tuple of int
    cup_table_ : dict
    p1_ : GroupElement
    """

    def __init__(self, tree_budget=None, ordering=None, strict=True):
        self.tree_budget = tree_budget
        self.ordering = ordering
        self.strict = strict

    def fit(self, X, y=None):
        omega = check_omega_array(X)
        condition = check_condition(omega)
        if not condition.valid:
            raise NotValidatedError(f"Omega fails the reduction condition: {condition.describe()}")
        ordering = check_ordering(self.ordering, omega.n)
        report = cohomology_report(omega, self.tree_budget, ordering)
        if self.strict and not report.valid:
            raise CrossCheckError("; ".join(report.diagnostics))
        self.omega_ = omega
        self.condition_ = condition
        self.report_ = report
        self.torsion_ = report.torsion
        self.invariant_factors_ = report.torsion.invariant_factors
        self.order_ = report.torsion.order
        self.betti_ = report.betti
        self.order_ledger_ = report.order_ledger
        self.cup_table_ = report.cup_table
        self.p1_ = report.p1
        self.n_monomials_ = len(quadratic_basis(omega.k))
        return self

    def _rows(self, X) -> list[list[int]]:
        if isinstance(X, IntPolynomial):
            X = [X]
        if isinstance(X, (list, tuple)) and X and isinstance(X[0], IntPolynomial):
            return [quadratic_coords(f, self.omega_.k) for f in X]
        return check_coordinate_rows(X, self.n_monomials_)

    def transform(self, X):
        """Residues of each row in ``Z/d_1 + ... + Z/d_r`` (object dtype, exact)."""
        check_is_fitted(self, "torsion_")
        G = self.torsion_
        out = [list(G.reduce(r).residues) for r in self._rows(X)]
        return np.array(out, dtype=object).reshape(len(out), len(G.invariant_factors))

    def inverse_transform(self, Xt):
        """A representative quadratic form for each normal-form row."""
        check_is_fitted(self, "torsion_")
        G = self.torsion_
        width = len(G.invariant_factors)
        rows = check_coordinate_rows(Xt, width)
        out = [G.lift(GroupElement(tuple(r))) for r in rows]
        return np.array(out, dtype=object).reshape(len(out), self.n_monomials_)

    def get_feature_names_out(self, input_features=None):
        check_is_fitted(self, "torsion_")
        return np.array([f"Z/{d}" for d in self.invariant_factors_], dtype=object)
