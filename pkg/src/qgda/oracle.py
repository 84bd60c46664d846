"""Replay of the algebraic identities through matrix realizations.

Every quantity computed in A[t] is mapped to matrices and compared with a
value produced by matrix arithmetic alone: the differential becomes
``T M - q^k M T`` on the grade-k block and the twist becomes ``T^-1 M T``.
"""
from __future__ import annotations

import random

from .basealg import NotInvertible, twist
from .calculus import (
    Basis,
    Coordinate,
    KForm,
    derivative,
    form_differential,
    form_to_ext,
    is_q_eigen_coordinate,
    make_coordinate,
    phi_dx,
    poly_P,
    poly_Phi,
    poly_Q,
    poly_Q_inverse,
    change_of_variable,
)
from .extension import ExtAlgebra, ExtElement, differential, grade_project
from .matrix_rep import (
    Matrix,
    MatrixRep,
    format_matrix,
    is_faithful_on_basis,
    mat_add,
    mat_inverse,
    mat_is_zero,
    mat_mul,
    mat_pow,
    mat_scale,
    mat_sub,
    rep_for,
    represent,
)
from .report import SKIP, Check, expect, forall
from .sampling import random_base, random_ext, random_homogeneous

Graded = list  # list of N matrices, entry k = image of the grade-k part


def graded(xi: ExtElement, R: MatrixRep) -> Graded:
    return [represent(grade_project(xi, k), R) for k in range(xi.algebra.n)]


def total(g: Graded, R: MatrixRep) -> Matrix:
    out = R.zero()
    for m in g:
        out = mat_add(out, m)
    return out


def mat_inner_d(g: Graded, V: Matrix, R: MatrixRep) -> Graded:
    """Graded q-commutator with V (degree 1), block by block."""
    N = len(g)
    out = [R.zero() for _ in range(N)]
    for k, M in enumerate(g):
        qk = R.scalar(R.ext.field.q_power(k))
        out[(k + 1) % N] = mat_sub(mat_mul(V, M), mat_scale(mat_mul(M, V), qk))
    return out


def mat_d(g: Graded, R: MatrixRep) -> Graded:
    return mat_inner_d(g, R.tau, R)


def mat_twist(M: Matrix, R: MatrixRep, T_inv: Matrix) -> Matrix:
    # u t = t twist(u)  =>  twist(u) = T^-1 U T
    return mat_mul(mat_mul(T_inv, M), R.tau)


def relation_checks(R: MatrixRep) -> list[Check]:
    F, N = R.field, R.ext.n
    I = R.identity()
    checks = []
    if "x" in R.images:
        X, Y = R.images["x"], R.images["y"]
        q = R.scalar(R.ext.q)
        checks.append(expect("oracle: X Y = q Y X", mat_mul(X, Y) == mat_scale(mat_mul(Y, X), q)))
        checks.append(expect("oracle: X^N = Y^N = 1", mat_pow(X, N) == I and mat_pow(Y, N) == I))
    if "i" in R.images:
        Im, J, K = R.images["i"], R.images["j"], R.images["k"]
        minus = mat_scale(I, -F.one)
        checks.append(expect("oracle: i^2 = j^2 = k^2 = -1",
                             mat_mul(Im, Im) == minus and mat_mul(J, J) == minus and mat_mul(K, K) == minus))
        checks.append(expect("oracle: ij = -ji = k, jk = -kj = i, ki = -ik = j",
                             mat_mul(Im, J) == K and mat_mul(J, Im) == mat_scale(K, -F.one)
                             and mat_mul(J, K) == Im and mat_mul(K, J) == mat_scale(Im, -F.one)
                             and mat_mul(K, Im) == J and mat_mul(Im, K) == mat_scale(J, -F.one)))
    T = R.tau
    checks.append(expect("oracle: t^N = sign * 1", mat_pow(T, N) == mat_scale(I, F(R.ext.sign))))
    checks.append(expect("oracle: represent(1) = identity", represent(R.ext.one(), R) == I))
    checks.append(expect("oracle: representation injective on the basis t^k e_i", is_faithful_on_basis(R)))
    return checks


def oracle_suite(ext: ExtAlgebra, c: Coordinate | None, rng: random.Random, samples: int = 50,
                 R: MatrixRep | None = None) -> list[Check]:
    R = R or rep_for(ext)
    if R is None:
        return [Check("oracle", SKIP, "no matrix realization for this algebra")]
    E, A, N = ext, ext.base, ext.n
    F = R.field
    T = R.tau
    T_inv = mat_inverse(T)
    checks = relation_checks(R)
    rep = lambda xi: represent(xi, R)  # noqa: E731
    repb = lambda u: represent(E.from_base(u), R)  # noqa: E731

    pairs = [(random_ext(E, rng, 0.5), random_ext(E, rng, 0.5)) for _ in range(samples)]
    checks.append(forall("oracle: represent is multiplicative", pairs,
                         lambda p: None if rep(p[0] * p[1]) == mat_mul(rep(p[0]), rep(p[1])) else f"{p[0]} | {p[1]}"))

    def d_matches(xi):
        g = graded(xi, R)
        cur = xi
        for step in range(1, N + 1):
            g = mat_d(g, R)
            cur = differential(cur)
            if graded(cur, R) != g:
                return f"d^{step} mismatch for {xi}"
        if not all(mat_is_zero(m) for m in g):
            return f"matrix d^N nonzero for {xi}"
        return None

    xis = [p[0] for p in pairs]
    checks.append(forall("oracle: d^m by matrices agrees with A[t], and d^N = 0", xis, d_matches))

    def leibniz(p):
        a, b = p
        k = next((i for i, u in enumerate(a.parts) if not u.is_zero()), 0)
        ga, gb = graded(a, R), graded(b, R)
        lhs = total(mat_d(graded(a * b, R), R), R)
        qk = R.scalar(E.field.q_power(k))
        rhs = mat_add(mat_mul(total(mat_d(ga, R), R), total(gb, R)),
                      mat_scale(mat_mul(total(ga, R), total(mat_d(gb, R), R)), qk))
        return None if lhs == rhs else f"xi={a}, eta={b}"

    hom = [(random_homogeneous(E, rng), random_homogeneous(E, rng)) for _ in range(samples)]
    checks.append(forall("oracle: graded q-Leibniz by matrices", hom, leibniz))

    # witnesses v = t, t*x: V^N = +-1 and d_V^N = 0 on every basis image
    vs = [("t", E.tau())]
    if c is not None:
        vs.append((f"t*({c.x})", E.tau() * E.from_base(c.x)))
    for label, v in vs:
        V = rep(v)
        VN = mat_pow(V, N)
        pm = VN == R.identity() or VN == mat_scale(R.identity(), -F.one)
        vanish = True
        for b in E.basis():
            g = graded(b, R)
            for _ in range(N):
                g = mat_inner_d(g, V, R)
            vanish = vanish and all(mat_is_zero(m) for m in g)
        checks.append(expect(f"oracle: v = {label} gives V^N = +-1 and d_V^N = 0", pm and vanish,
                             "", format_matrix(VN)))

    if c is None:
        return checks

    dx = c.dx()
    Dx = repb(c.delta_x)
    TD = mat_mul(T, Dx)
    us = [(random_base(A, rng), random_base(A, rng)) for _ in range(samples)]

    def first_order(p):
        u, v = p
        U = repb(u)
        du = mat_sub(mat_mul(T, U), mat_mul(U, T))
        if du != mat_mul(TD, repb(derivative(u, c))):
            return f"du != dx u' for u={u}"
        # twisted Leibniz with the twist computed as conjugation by T
        Dx_inv = repb(c.delta_x_inv)
        phi = mat_mul(mat_mul(Dx_inv, mat_twist(U, R, T_inv)), Dx)
        if phi != repb(phi_dx(u, c)):
            return f"phi_dx mismatch for u={u}"
        lhs = repb(derivative(u * v, c))
        rhs = mat_add(mat_mul(repb(derivative(u, c)), repb(v)), mat_mul(phi, repb(derivative(v, c))))
        return None if lhs == rhs else f"twisted Leibniz for u={u}, v={v}"

    checks.append(forall("oracle: du = dx u' and twisted Leibniz by matrices", us, first_order))

    if is_q_eigen_coordinate(c):
        X = repb(c.x)

        def power(m):
            want = mat_scale(mat_pow(X, m - 1), R.scalar(E.field.q_integer(m))) if m else R.zero()
            return None if repb(derivative(c.x ** m, c)) == want else f"m={m}"

        checks.append(forall("oracle: power rule by matrices", range(N), power))

    def chain(u):
        y = _matrix_coordinate(E, rng)
        if y is None:
            return None
        cv = change_of_variable(c, y)
        Yp = repb(cv.y_prime_x)
        if mat_mul(Yp, repb(cv.x_prime_y)) != R.identity():
            return f"y'_x x'_y != 1 for y={y.x}"
        return None if repb(derivative(u, c)) == mat_mul(Yp, repb(derivative(u, y))) else f"u={u}, y={y.x}"

    checks.append(forall("oracle: change of variable by matrices", (p[0] for p in us[:10]), chain))

    X0 = repb(c.x)

    def polys(k):
        if mat_pow(TD, k) != mat_mul(mat_pow(T, k), repb(poly_Q(k, c))):
            return f"(dx)^{k} != t^{k} Q_{k}"
        if mat_mul(repb(poly_Q_inverse(k, c)), repb(poly_Q(k, c))) != R.identity():
            return f"Q_{k} inverse formula"
        g = graded(E.from_base(c.x), R)
        for _ in range(k):
            g = mat_d(g, R)
        if total(g, R) != mat_mul(mat_pow(T, k), repb(poly_P(k, c))):
            return f"d^{k} x != t^{k} P_{k}"
        return None

    checks.append(forall("oracle: (dx)^k = t^k Q_k, d^k x = t^k P_k, Q_k^-1 by matrices",
                         range(1, N), polys))
    checks.append(expect("oracle: P_N = 0 by matrices", mat_is_zero(repb(poly_P(N, c)))))
    P = repb(poly_P(N - 1, c))
    acc, cur = R.zero(), P
    for _ in range(N):
        acc = mat_add(acc, cur)
        cur = mat_twist(cur, R, T_inv)
    checks.append(expect("oracle: sum_j twist^j(P_(N-1)) = 0 by matrices", mat_is_zero(acc)))
    x1 = mat_twist(X0, R, T_inv)
    x2 = mat_twist(x1, R, T_inv)
    q = R.scalar(E.q)
    p2 = mat_add(mat_sub(X0, mat_scale(x1, F.one + q)), mat_scale(x2, q))
    checks.append(expect("oracle: P_2 expansion by matrices", repb(poly_P(2, c)) == p2))

    def phi_k(k):
        g = graded(dx ** k, R)
        lhs = total(mat_d(g, R), R)
        rhs = mat_mul(mat_pow(TD, k + 1), repb(poly_Phi(k, c)))
        return None if lhs == rhs else f"k={k}"

    checks.append(forall("oracle: d((dx)^k) = (dx)^(k+1) Phi_k by matrices", range(1, N), phi_k))

    forms = [KForm(k, Basis.DX, random_base(A, rng)) for k in range(N - 1) for _ in range(max(1, samples // 10))]

    def two_path(w):
        direct = total(mat_d(graded(form_to_ext(w, c), R), R), R)
        via = rep(form_to_ext(form_differential(w, c), c))
        return None if direct == via else f"k={w.degree}, u={w.coeff}"

    checks.append(forall("oracle: form differential by matrices", forms, two_path))

    if A.name == "gaussian":
        def quat(h):
            g = graded(h, R)
            d1 = mat_d(g, R)
            if not all(mat_is_zero(m) for m in mat_d(d1, R)):
                return f"d^2 q != 0 for {h}"
            z0, z1 = h.parts
            if d1[0] != repb(-(twist(z1) + z1)):
                return f"degree-0 part of d({h})"
            return None

        checks.append(forall("oracle: quaternion d q and d^2 q = 0 by matrices",
                             (random_ext(E, rng, 1.0) for _ in range(samples)), quat))

        def linear(u):
            U1 = repb(derivative(u, c))
            Dx_inv = repb(c.delta_x_inv)
            # u'' = Dx^-1 (U1 - twist(U1)) entirely in matrices
            second = mat_mul(Dx_inv, mat_sub(U1, mat_twist(U1, R, T_inv)))
            return None if mat_is_zero(second) else f"u={u}"

        checks.append(forall("oracle: u''_x = 0 by matrices", (p[0] for p in us), linear))
    return checks


def _matrix_coordinate(E: ExtAlgebra, rng: random.Random) -> Coordinate | None:
    for _ in range(20):
        try:
            return make_coordinate(E, random_base(E.base, rng))
        except NotInvertible:
            continue
    return None
