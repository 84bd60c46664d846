import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qgda.exactnum import (
    CyclotomicNumber,
    FieldMismatch,
    cyclotomic_field,
    cyclotomic_minimal_poly,
    embed,
    euler_phi,
    format_cyc,
)

small = st.fractions(min_value=-9, max_value=9, max_denominator=4)


def elements(n):
    F = cyclotomic_field(n)
    return st.lists(small, min_size=F.degree, max_size=F.degree).map(lambda cs: CyclotomicNumber(F, cs))


@pytest.mark.parametrize("n, coeffs", [
    (1, [-1, 1]),
    (2, [1, 1]),
    (3, [1, 1, 1]),
    (4, [1, 0, 1]),
    (6, [1, -1, 1]),
    (8, [1, 0, 0, 0, 1]),
    (12, [1, 0, -1, 0, 1]),
])
def test_minimal_poly(n, coeffs):
    assert cyclotomic_minimal_poly(n) == [Fraction(c) for c in coeffs]


@pytest.mark.parametrize("n", range(1, 31))
def test_degree_is_euler_phi(n):
    assert len(cyclotomic_minimal_poly(n)) - 1 == euler_phi(n)


def test_root_of_unity_identities():
    F = cyclotomic_field(3)
    z = F.q_root()
    assert z * z ** 2 == F.one
    assert (F.one - z).inverse() == (2 + z) / 3
    F4 = cyclotomic_field(4)
    assert F4.q_root() ** 2 == -F4.one


@pytest.mark.parametrize("n", range(2, 13))
def test_q_sum_vanishes(n):
    F = cyclotomic_field(n)
    assert F.q_integer(n).is_zero()
    assert F.q_root() ** n == F.one
    assert all(F.q_power(k) != F.one for k in range(1, n))


def test_zero_inverse_raises():
    with pytest.raises(ZeroDivisionError):
        cyclotomic_field(5).zero.inverse()


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        cyclotomic_field(3).one + cyclotomic_field(4).one


def test_embedding_sends_root_to_power():
    z3 = cyclotomic_field(3).q_root()
    F6 = cyclotomic_field(6)
    assert embed(z3, F6) == F6.q_root() ** 2


def test_format():
    F = cyclotomic_field(3)
    assert format_cyc(F.zero) == "0"
    assert format_cyc(1 - F.q_root()) == "1 - q"


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6, 12])
@given(data=st.data())
def test_field_axioms(n, data):
    a, b, c = (data.draw(elements(n)) for _ in range(3))
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == cyclotomic_field(n).zero
    if not a.is_zero():
        assert a * a.inverse() == cyclotomic_field(n).one


@pytest.mark.parametrize("n", [3, 5, 7])
@given(data=st.data())
def test_json_round_trip(n, data):
    a = data.draw(elements(n))
    payload = json.loads(json.dumps(a.to_json()))
    assert CyclotomicNumber.from_json(payload) == a
    assert hash(CyclotomicNumber.from_json(payload)) == hash(a)
