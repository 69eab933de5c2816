import pytest
from hypothesis import given
from hypothesis import strategies as st

from s7omega import ArgumentError, PolynomialRing
from s7omega.poly import equal

R = PolynomialRing(["x1", "x2", "x3"])

polys = st.dictionaries(
    st.tuples(*[st.integers(0, 3)] * 3), st.integers(-20, 20), max_size=6
).map(lambda d: R.zero() + sum((R.monomial(e, c) for e, c in d.items()), R.zero()))


@given(polys)
def test_parse_inverts_str(f):
    assert R.parse(str(f)) == f


@given(polys, polys, polys)
def test_ring_axioms(f, g, h):
    assert f + g == g + f
    assert f * g == g * f
    assert (f + g) + h == f + (g + h)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f - f == 0
    assert f * R.one() == f


@given(polys, polys)
def test_substitution_is_a_ring_map(f, g):
    x1, x2, x3 = R.gens
    images = [x1 + x2, x2 * x3 - 1, R.constant(2)]
    assert (f * g).substitute(images) == f.substitute(images) * g.substitute(images)
    assert (f + g).substitute(images) == f.substitute(images) + g.substitute(images)


def test_formatting():
    x1, x2, _ = R.gens
    f = 3 * x1**2 - 2 * x1 * x2
    assert str(f) == "3*x1^2 - 2*x1*x2"
    assert str(R.zero()) == "0"
    assert str(-x2 + 1) == "-x2 + 1"


def test_degrees():
    x1, x2, x3 = R.gens
    f = x1 * x2 * x3 + x1**2 + 4
    assert f.total_degree() == 3
    assert f.degrees() == {0, 2, 3}
    assert f.coefficient((2, 0, 0)) == 1


def test_ring_mismatch_rejected():
    S = PolynomialRing(["y"])
    with pytest.raises(ArgumentError):
        equal(R.gen(0), S.gen(0))


def test_parse_rejects_unknown_generator():
    with pytest.raises(ArgumentError):
        R.parse("x9^2")
