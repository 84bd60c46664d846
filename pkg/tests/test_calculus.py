import random

import pytest

from qgda.basealg import NotInvertible, base_inverse, twist
from qgda.calculus import (
    Basis,
    KForm,
    change_of_variable,
    covariant_D,
    covariant_Dk,
    delta,
    derivative,
    form_differential,
    form_from_ext,
    form_to_dx_basis,
    form_to_ext,
    form_to_tau_basis,
    linearity_check,
    make_coordinate,
    phi_1_closed_form,
    phi_dx,
    phi_recurrence_report,
    poly_P,
    poly_P_twisted_sum,
    poly_Phi,
    poly_Q,
    poly_Q_inverse,
    poly_Q_product,
)
from qgda.extension import d_power, differential
from qgda.instances import default_coordinate, quantum_plane, quaternions
from qgda.sampling import random_base

NS = range(2, 7)


def setup(N):
    E = quantum_plane(N)
    c = default_coordinate(E)
    return E, c, c.x, E.q


def test_delta_examples():
    E, c, x, q = setup(3)
    assert c.delta_x == (1 - q) * x
    assert base_inverse(c.delta_x) == (1 - q).inverse() * x * x
    assert delta(x * x) == (1 - q ** 2) * x * x


def test_non_coordinate_rejected():
    E, c, x, q = setup(3)
    with pytest.raises(NotInvertible):
        make_coordinate(E, E.base.one())


def test_derivative_of_square():
    E, c, x, q = setup(3)
    assert derivative(x * x, c) == (1 + q) * x


@pytest.mark.parametrize("N", NS)
def test_power_rule(N):
    E, c, x, q = setup(N)
    F = E.field
    for m in range(N):
        expected = F.q_integer(m) * x ** (m - 1) if m else E.base.zero()
        assert derivative(x ** m, c) == expected


@pytest.mark.parametrize("N", NS)
def test_du_equals_dx_times_derivative(N):
    E, c, x, q = setup(N)
    rng = random.Random(N)
    for _ in range(20):
        u = random_base(E.base, rng)
        assert differential(E.from_base(u)) == c.dx() * E.from_base(derivative(u, c))


def test_phi_dx_is_twist_for_commutative_base():
    E, c, x, q = setup(3)
    rng = random.Random(0)
    for _ in range(10):
        u = random_base(E.base, rng)
        assert phi_dx(u, c) == twist(u)


@pytest.mark.parametrize("N", NS)
def test_twisted_leibniz(N):
    E, c, x, q = setup(N)
    rng = random.Random(N + 10)
    for _ in range(20):
        u, v = random_base(E.base, rng), random_base(E.base, rng)
        assert derivative(u * v, c) == derivative(u, c) * v + phi_dx(u, c) * derivative(v, c)


def test_change_of_variable_example():
    E, c, x, q = setup(3)
    cy = make_coordinate(E, x * x)
    cov = change_of_variable(c, cy)
    assert cov.y_prime_x == (1 + q) * x
    u = x * x
    assert derivative(u, c) == cov.y_prime_x * derivative(u, cy)


def test_Q2_and_Phi1_examples():
    E, c, x, q = setup(3)
    assert poly_Q(2, c) == q * (1 - q) ** 2 * x * x
    assert poly_P(2, c) == (1 - q) ** 2 * (1 + q) * x
    assert poly_Phi(1, c) == (1 + q) * q.inverse() * x * x
    assert (c.dx() ** 2) == E.from_base(q * (1 - q) ** 2 * x * x, 2)


@pytest.mark.parametrize("N", NS)
def test_polynomial_identities(N):
    E, c, x, q = setup(N)
    assert poly_P(N, c).is_zero()
    assert poly_P_twisted_sum(c).is_zero()
    assert poly_P(2, c) == x - (1 + q) * twist(x) + q * twist(x, 2)
    if N >= 3:
        assert poly_P(3, c) == (x - (1 + q + q ** 2) * twist(x) + (q + q ** 2 + q ** 3) * twist(x, 2)
                                - q ** 3 * twist(x, 3))
    xe = E.from_base(x)
    for k in range(1, N):
        assert d_power(xe, k) == E.from_base(poly_P(k, c), k)
        assert c.dx() ** k == E.from_base(poly_Q(k, c), k)
        assert poly_Q(k, c) == poly_Q_product(k, c)
        assert poly_Q_inverse(k, c) * poly_Q(k, c) == E.base.one()
    assert phi_1_closed_form(c) == poly_Phi(1, c)


def test_phi1_vanishes_at_N2():
    E, c, x, q = setup(2)
    assert poly_Phi(1, c).is_zero()


@pytest.mark.parametrize("N", [3, 4, 5, 6])
def test_phi_defining_property_and_recurrence(N):
    E, c, x, q = setup(N)
    dx = c.dx()
    for k in range(1, N):
        assert differential(dx ** k) == dx ** (k + 1) * E.from_base(poly_Phi(k, c))
    report = phi_recurrence_report(c)
    assert all(row["twisted, q^k"] for row in report.values())
    assert not any(row["twisted, q^(k-1)"] or row["plain, q^(k-1)"] for row in report.values())


@pytest.mark.parametrize("N", [3, 4, 5])
def test_form_two_paths(N):
    E, c, x, q = setup(N)
    rng = random.Random(N)
    for k in range(0, N - 1):
        for _ in range(10):
            w = KForm(k, Basis.TAU, random_base(E.base, rng))
            direct = differential(form_to_ext(w, c))
            via = form_differential(form_to_dx_basis(w, c), c)
            assert via.basis is Basis.DX and via.degree == k + 1
            assert form_to_ext(via, c) == direct


def test_form_basis_round_trip():
    E, c, x, q = setup(4)
    rng = random.Random(1)
    for k in range(4):
        w = KForm(k, Basis.TAU, random_base(E.base, rng))
        assert form_to_tau_basis(form_to_dx_basis(w, c), c) == w


def test_second_differential_in_dx_basis():
    E, c, x, q = setup(3)
    w = form_from_ext(d_power(E.from_base(x), 2), c, Basis.DX)
    assert w == KForm(2, Basis.DX, base_inverse(poly_Q(2, c)) * poly_P(2, c))


def test_D1_is_D():
    for N in NS:
        E, c, x, q = setup(N)
        u = x ** 2 + 3
        assert covariant_Dk(u, c, 1) == covariant_D(u, c)


def test_top_form_differential_rejected():
    E, c, x, q = setup(3)
    with pytest.raises(ValueError):
        form_differential(KForm(2, Basis.DX, x), c)


def test_quaternion_linearity():
    H = quaternions()
    c = default_coordinate(H)
    rng = random.Random(2)
    for _ in range(20):
        assert linearity_check(c, random_base(H.base, rng)).is_zero
    j = H.base.basis_element("j")
    assert delta(3 + 5 * j) == 10 * j


def test_linearity_needs_N2():
    E, c, x, q = setup(3)
    with pytest.raises(ValueError):
        linearity_check(c, x)
