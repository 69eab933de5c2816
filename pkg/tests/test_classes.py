from itertools import permutations

import pytest
from hypothesis import given

from s7omega import ArgumentError, OmegaMatrix, sign_epsilon
from s7omega.classes import (
    biquadratic_certificate,
    cocycle_holds,
    cubic_certificate,
    ideal_identity_check,
    ideal_membership_certificates,
    orientation_table,
    quadratic_basis,
    quadratic_coords,
    rho_u,
    rho_x,
    square_difference_certificate,
    u_ring,
    v_class,
    x_ring,
)
from s7omega.cohomology import vp_square_relation_check

from conftest import valid_omegas


def test_worked_rho_follows_sign_formula(worked):
    # eps(1,2) = -1, eps(2,3) = +1, eps(3,1) = -1
    R = u_ring(4)
    assert rho_u(sign_epsilon(worked), 1, 2, 3) == R.parse("-u1*u2 - u1*u3 + u2*u3")


def test_rho_x_k1():
    omega = OmegaMatrix([[1], [1], [1]]).validate()
    assert str(rho_x(omega, 1, 2, 3)) == "3*x1^2"


def test_rho_x_is_pullback(worked):
    from s7omega.classes import pullback

    eps = sign_epsilon(worked)
    for p, q, r in permutations(range(1, 5), 3):
        assert rho_x(worked, p, q, r) == pullback(worked, rho_u(eps, p, q, r))


def test_v_class(worked):
    assert v_class(worked, 4) == x_ring(2).parse("3*x1 + x2")


def test_distinct_indices_required(worked):
    with pytest.raises(ArgumentError):
        rho_x(worked, 1, 1, 2)


@given(valid_omegas(ks=(2, 3)))
def test_orientation_cocycle(omega):
    orient = orientation_table(sign_epsilon(omega))
    for t in permutations(range(1, omega.n + 1), 4):
        assert cocycle_holds(orient, *t)


@given(valid_omegas(ks=(2, 3)))
def test_ideal_identity(omega):
    for t in permutations(range(1, omega.n + 1), 4):
        assert ideal_identity_check(omega, *t)


@given(valid_omegas(ks=(2, 3)))
def test_membership_certificates(omega):
    certs = ideal_membership_certificates(omega)
    assert all(c.verify() for c in certs)
    assert all(c.multiplier in (None, -1, 1) for c in certs)


def test_certificate_targets(worked):
    eps = sign_epsilon(worked)
    R = u_ring(4)
    assert cubic_certificate(eps, 1, 2, 3).target == R.parse("u1*u2*u3")
    assert square_difference_certificate(eps, 1, 2, 3).verify()
    bq = biquadratic_certificate(eps, 2, 4)
    assert bq.target == R.parse("u2^2*u4^2") and bq.verify()


def test_tampered_certificate_fails(worked):
    from dataclasses import replace

    cert = cubic_certificate(sign_epsilon(worked), 1, 2, 3)
    assert not replace(cert, target=cert.target * 2).verify()


def test_certificates_need_k2():
    with pytest.raises(ArgumentError):
        ideal_membership_certificates(OmegaMatrix([[1], [1], [1]]).validate())


@given(valid_omegas(ks=(1, 2, 3)))
def test_weighted_square_relation(omega):
    assert vp_square_relation_check(omega)


def test_quadratic_coords_round_trip():
    R = x_ring(3)
    f = R.parse("2*x1^2 - x1*x3 + 5*x2*x3")
    assert quadratic_basis(3) == [(1, 1), (1, 2), (1, 3), (2, 2), (2, 3), (3, 3)]
    assert quadratic_coords(f, 3) == [2, 0, -1, 0, 5, 0]
    with pytest.raises(ArgumentError):
        quadratic_coords(R.parse("x1"), 3)
