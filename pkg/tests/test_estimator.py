import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from s7omega import CrossCheckError, NotValidatedError, S7Cohomology
from s7omega.classes import x_ring

from conftest import WORKED


def test_params_round_trip():
    est = S7Cohomology(tree_budget=5, ordering="2,1,3,4")
    assert est.get_params() == {"tree_budget": 5, "ordering": "2,1,3,4", "strict": True}
    assert clone(est).get_params() == est.get_params()
    est.set_params(strict=False)
    assert est.strict is False


def test_fit_attributes():
    est = S7Cohomology().fit(WORKED)
    assert est.order_ == 124
    assert est.invariant_factors_ == (124,)
    assert est.betti_ == (1, 0, 2, 0, 0, 2, 0, 1)
    assert est.p1_.residues == (84,)
    assert est.order_ledger_.agree


def test_transform_matches_cup_table():
    est = S7Cohomology().fit(np.array(WORKED))
    out = est.transform(np.eye(3, dtype=int))
    assert out.shape == (3, 1)
    assert [r[0] for r in out.tolist()] == [e.residues[0] for _, e in sorted(est.cup_table_.items())]


def test_transform_polynomials():
    est = S7Cohomology().fit(WORKED)
    R = x_ring(2)
    out = est.transform([R.parse("22*x1^2 + 20*x1*x2 + 12*x2^2")])
    assert out.tolist() == [[84]]


def test_inverse_transform_round_trip():
    est = S7Cohomology().fit(WORKED)
    rows = np.array([[0], [5], [123]], dtype=object)
    assert est.transform(est.inverse_transform(rows)).tolist() == [[0], [5], [123]]


def test_feature_names():
    assert S7Cohomology().fit(WORKED).get_feature_names_out().tolist() == ["Z/124"]


def test_not_fitted():
    with pytest.raises(NotFittedError):
        S7Cohomology().transform([[1, 0, 0]])


def test_invalid_omega():
    with pytest.raises(NotValidatedError):
        S7Cohomology().fit([[2], [2], [1]])


def test_budget_skip_is_not_strict_failure():
    assert S7Cohomology(tree_budget=3).fit(WORKED).order_ == 124


def test_strict_is_exported():
    assert issubclass(CrossCheckError, AssertionError)
