import random

import pytest

from qgda.instances import default_coordinate, quantum_plane, quaternions
from qgda.matrix_rep import (
    mat_add,
    is_faithful_on_basis,
    mat_identity,
    mat_inverse,
    mat_mul,
    mat_pow,
    mat_scale,
    quantum_plane_rep,
    quaternion_rep,
    represent,
)
from qgda.oracle import oracle_suite, relation_checks
from qgda.sampling import random_ext

REPS = [quantum_plane_rep(n) for n in range(2, 7)] + [quaternion_rep()]
IDS = [R.ext.name for R in REPS]


@pytest.mark.parametrize("N", range(2, 7))
def test_quantum_plane_relations(N):
    R = quantum_plane_rep(N)
    X, Y = R.images["x"], R.images["y"]
    q = R.field.q_root()
    assert mat_mul(X, Y) == mat_scale(mat_mul(Y, X), q)
    assert mat_pow(X, N) == mat_identity(R.field, N) == mat_pow(Y, N)


def test_quaternion_relations():
    R = quaternion_rep()
    I, J, K = R.images["i"], R.images["j"], R.images["k"]
    minus_one = mat_scale(mat_identity(R.field, 2), -R.field.one)
    for M in (I, J, K):
        assert mat_mul(M, M) == minus_one
    assert mat_mul(mat_mul(I, J), K) == minus_one


@pytest.mark.parametrize("R", REPS, ids=IDS)
def test_relation_checks_pass(R):
    assert all(ch.passed for ch in relation_checks(R))


@pytest.mark.parametrize("R", REPS, ids=IDS)
def test_faithful_and_multiplicative(R):
    assert is_faithful_on_basis(R)
    rng = random.Random(5)
    E = R.ext
    for _ in range(20):
        a, b = random_ext(E, rng), random_ext(E, rng)
        assert represent(a * b, R) == mat_mul(represent(a, R), represent(b, R))
        assert represent(a + b, R) == mat_add(represent(a, R), represent(b, R))


def test_inverse():
    R = quantum_plane_rep(3)
    X = R.images["x"]
    assert mat_mul(X, mat_inverse(X)) == mat_identity(R.field, 3)


@pytest.mark.parametrize("E", [quantum_plane(3), quantum_plane(4), quaternions()], ids=lambda E: E.name)
def test_oracle_suite_passes(E):
    checks = oracle_suite(E, default_coordinate(E), random.Random(0), samples=10)
    failed = [ch for ch in checks if ch.status == "FAIL"]
    assert not failed, [ch.line() for ch in failed]
