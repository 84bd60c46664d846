"""Verification suites: algebraic laws checked exactly on random and basis elements."""
from __future__ import annotations

import itertools
import random

from .basealg import NotInvertible, base_inverse, twist, validate
from .calculus import (
    Basis,
    Coordinate,
    KForm,
    change_of_variable,
    covariant_D,
    covariant_Dk,
    delta,
    derivative,
    form_differential,
    form_from_ext,
    form_to_ext,
    is_q_eigen_coordinate,
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
from .exactnum import cyclotomic_field, cyclotomic_minimal_poly, euler_phi, _poly_divmod
from .extension import (
    ExtAlgebra,
    check_theorem_2_1,
    d_power,
    degree,
    differential,
    grade_project,
    inner_derivation,
    q_commutator,
)
from .report import FAIL, SKIP, Check, Report, expect, forall
from .sampling import random_base, random_cyc, random_ext, random_homogeneous

SUITES = ("field", "base", "extension", "calculus", "oracle", "all")


def field_checks(ext: ExtAlgebra, rng: random.Random, samples: int = 50) -> list[Check]:
    F = ext.field
    trip = [(random_cyc(F, rng), random_cyc(F, rng), random_cyc(F, rng)) for _ in range(samples)]
    checks = [
        forall("field: associativity", trip,
               lambda t: None if (t[0] * t[1]) * t[2] == t[0] * (t[1] * t[2]) else f"{t}"),
        forall("field: commutativity", trip,
               lambda t: None if t[0] * t[1] == t[1] * t[0] else f"{t}"),
        forall("field: distributivity", trip,
               lambda t: None if t[0] * (t[1] + t[2]) == t[0] * t[1] + t[0] * t[2] else f"{t}"),
        forall("field: a + (-a) = 0", (t[0] for t in trip),
               lambda a: None if (a + (-a)).is_zero() else str(a)),
        forall("field: a * a^-1 = 1", (random_cyc(F, rng, nonzero=True) for _ in range(samples)),
               lambda a: None if a * a.inverse() == F.one else str(a)),
    ]

    def roots(N):
        G = cyclotomic_field(N)
        if G.q_power(N) != G.one or G.q_power(N - 1) * G.q_root() != G.one:
            return f"q^{N} != 1"
        total = G.zero
        for k in range(N):
            total = total + G.q_power(k)
        return None if total.is_zero() else f"sum of q^k for N={N} is {total}"

    def minpoly(N):
        phi = cyclotomic_minimal_poly(N)
        _, rem = _poly_divmod([-1] + [0] * (N - 1) + [1], phi)
        if rem != [0] or phi[-1] != 1 or len(phi) - 1 != euler_phi(N):
            return f"bad Phi_{N}: {phi}"
        return None

    checks.append(forall("field: q^N = 1 and 1 + q + ... + q^(N-1) = 0", range(2, 13), roots))
    checks.append(forall("field: Phi_N monic, divides z^N - 1, degree totient(N)", range(1, 13), minpoly))
    return checks


def base_checks(ext: ExtAlgebra, rng: random.Random, samples: int = 50) -> list[Check]:
    A = ext.base
    rep = validate(A)
    checks = [
        expect("base: structure axioms (assoc, unit, twist hom, twist^N)", rep.ok,
               f"{len(rep.failures)} failure(s)" if rep.failures else "",
               "; ".join(str(f) for f in rep.failures[:3]))
    ]
    pairs = [(random_base(A, rng), random_base(A, rng)) for _ in range(samples)]
    checks.append(forall("base: twist(uv) = twist(u) twist(v)", pairs,
                         lambda p: None if twist(p[0] * p[1]) == twist(p[0]) * twist(p[1]) else f"u={p[0]}, v={p[1]}"))

    def twist_n(u):
        cur = u
        for _ in range(A.n):
            cur = twist(cur, 1)
        return None if cur == u else f"u={u}"

    checks.append(forall("base: twist^N(u) = u", (p[0] for p in pairs), twist_n))
    one = A.one()
    checks.append(forall("base: unit laws", (p[0] for p in pairs),
                         lambda u: None if one * u == u and u * one == u else f"u={u}"))

    def inverse(u):
        try:
            w = base_inverse(u)
        except NotInvertible:
            return None
        return None if w * u == one and u * w == one else f"u={u}, w={w}"

    checks.append(forall("base: inverses are two-sided", (p[1] for p in pairs), inverse))
    return checks


def extension_checks(ext: ExtAlgebra, rng: random.Random, samples: int = 50,
                     coord: Coordinate | None = None) -> list[Check]:
    E = ext
    N = E.n
    basis = E.basis()
    checks = []
    if len(basis) <= 16:
        triples = itertools.product(basis, repeat=3)
        tag = "all basis triples"
    else:
        triples = ((rng.choice(basis), rng.choice(basis), rng.choice(basis)) for _ in range(300))
        tag = "300 sampled basis triples"
    checks.append(forall("extension: associativity on basis", triples,
                         lambda t: None if (t[0] * t[1]) * t[2] == t[0] * (t[1] * t[2]) else f"{t[0]} | {t[1]} | {t[2]}",
                         tag))
    rand = [(random_ext(E, rng, 0.4), random_ext(E, rng, 0.4), random_ext(E, rng, 0.4))
            for _ in range(max(1, samples // 5))]
    checks.append(forall("extension: associativity on random triples", rand,
                         lambda t: None if (t[0] * t[1]) * t[2] == t[0] * (t[1] * t[2]) else f"{t[0]} | {t[1]} | {t[2]}"))
    one = E.one()
    checks.append(forall("extension: unit laws", (t[0] for t in rand),
                         lambda a: None if one * a == a and a * one == a else str(a)))
    sign_ok = E.tau() ** N == one * E.sign
    checks.append(expect("extension: t^N = sign", sign_ok, f"sign {E.sign:+d}", str(E.tau() ** N)))
    tau = E.tau()
    xis = [random_ext(E, rng) for _ in range(samples)]

    def d_is_commutator(xi):
        total = E.zero()
        for k in range(N):
            total = total + q_commutator(tau, grade_project(xi, k))
        return None if differential(xi) == total else str(xi)

    checks.append(forall("extension: d = sum_k [t, xi_k]_q", xis, d_is_commutator))

    def leibniz(p):
        a, b = p
        lhs = differential(a * b)
        rhs = differential(a) * b + (a * differential(b)) * E.q ** degree(a)
        return None if lhs == rhs else f"xi={a}, eta={b}"

    hom = [(random_homogeneous(E, rng), random_homogeneous(E, rng)) for _ in range(samples)]
    checks.append(forall("extension: graded q-Leibniz", hom, leibniz))
    checks.append(forall("extension: d^N = 0", xis,
                         lambda xi: None if d_power(xi, N).is_zero() else str(xi)))

    def raises_degree(xi):
        k = degree(xi)
        dxi = differential(xi)
        return None if dxi.is_zero() or degree(dxi) == (k + 1) % N else str(xi)

    checks.append(forall("extension: d raises degree by 1 mod N", (h[0] for h in hom), raises_degree))

    def closed_form(p):
        v, u = p
        brute = u
        for _ in range(N):
            brute = inner_derivation(v, brute)
        vN = v ** N
        return None if brute == vN * u - u * vN else f"v={v}, u={u}"

    vs = [E.from_base(random_base(E.base, rng), 1) for _ in range(max(1, samples // 5))]
    vs = [v for v in vs if not v.is_zero()] or [tau]
    pairs = [(v, E.from_base(random_base(E.base, rng))) for v in vs]
    checks.append(forall("extension: d_v^N(u) = v^N u - u v^N", pairs, closed_form))

    witnesses = [("t", tau)]
    if coord is not None:
        witnesses.append((f"t*({coord.x})", tau * E.from_base(coord.x)))
    for label, v in witnesses:
        r = check_theorem_2_1(v)
        if label == "t":
            ok = r.is_pm_one and r.d_N_vanishes
            name = "extension: v = t has v^N = +-1 and d_v^N = 0"
        else:
            ok = r.d_N_vanishes or not r.is_pm_one
            name = f"extension: v = {label}: v^N = +-1 implies d_v^N = 0"
        checks.append(expect(name, ok and r.closed_form_holds, f"v^N = {r.v_pow_N}",
                             f"witness {r.witness} -> {r.witness_value}"))
    return checks


def _random_coordinate(ext: ExtAlgebra, rng: random.Random, tries: int = 20) -> Coordinate | None:
    for _ in range(tries):
        try:
            return make_coordinate(ext, random_base(ext.base, rng))
        except NotInvertible:
            continue
    return None


def calculus_checks(ext: ExtAlgebra, c: Coordinate, rng: random.Random, samples: int = 50) -> list[Check]:
    E, A, N, F = ext, ext.base, ext.n, ext.field
    checks = []
    pairs = [(random_base(A, rng), random_base(A, rng)) for _ in range(samples)]
    dx = c.dx()

    checks.append(forall("calculus: Delta(uv) = Delta(u) v + u_t Delta(v)", pairs,
                         lambda p: None if delta(p[0] * p[1]) == delta(p[0]) * p[1] + twist(p[0]) * delta(p[1])
                         else f"u={p[0]}, v={p[1]}"))
    checks.append(forall("calculus: du = dx * du/dx", (p[0] for p in pairs),
                         lambda u: None if differential(E.from_base(u)) == dx * E.from_base(derivative(u, c))
                         else f"u={u}"))
    checks.append(forall("calculus: (uv)' = u' v + phi_dx(u) v'", pairs,
                         lambda p: None if derivative(p[0] * p[1], c)
                         == derivative(p[0], c) * p[1] + phi_dx(p[0], c) * derivative(p[1], c)
                         else f"u={p[0]}, v={p[1]}"))

    if is_q_eigen_coordinate(c):
        def power_rule(m):
            lhs = derivative(c.x ** m, c)
            rhs = (c.x ** (m - 1) if m else A.zero()) * F.q_integer(m)
            return None if lhs == rhs else f"m={m}: {lhs} != {rhs}"

        checks.append(forall("calculus: (x^m)' = [m]_q x^(m-1)", range(N), power_rule, f"m = 0..{N - 1}"))
    else:
        checks.append(Check("calculus: (x^m)' = [m]_q x^(m-1)", SKIP, "coordinate is not a twist eigenvector"))

    ys = [c] + [y for y in (_random_coordinate(E, rng) for _ in range(max(1, samples // 10))) if y]

    def chain(y):
        cv = change_of_variable(c, y)
        one = A.one()
        if cv.y_prime_x * cv.x_prime_y != one:
            return f"y={y.x}: y'_x x'_y != 1"
        if differential(E.from_base(y.x)) != dx * E.from_base(cv.y_prime_x):
            return f"y={y.x}: dy != dx y'_x"
        for u in (p[0] for p in pairs[:5]):
            if derivative(u, c) != cv.y_prime_x * derivative(u, y):
                return f"y={y.x}, u={u}"
        return None

    checks.append(forall("calculus: change of variable", ys, chain))

    def q_identities(k):
        if poly_Q(k, c) != poly_Q_product(k, c):
            return f"k={k}: recurrence != product"
        inv = poly_Q_inverse(k, c)
        if inv * poly_Q(k, c) != A.one() or poly_Q(k, c) * inv != A.one():
            return f"k={k}: inverse formula"
        if k < N and dx ** k != E.from_base(poly_Q(k, c), k):
            return f"k={k}: (dx)^k != t^k Q_k"
        return None

    checks.append(forall("calculus: Q_k recurrence, product, inverse, (dx)^k = t^k Q_k", range(1, N + 1), q_identities))
    xe = E.from_base(c.x)
    checks.append(forall("calculus: d^k x = t^k P_k", range(1, N + 1),
                         lambda k: None if d_power(xe, k) == E.from_base(poly_P(k, c), k) else f"k={k}"))
    checks.append(expect("calculus: P_N = 0", poly_P(N, c).is_zero(), "", str(poly_P(N, c))))
    ts = poly_P_twisted_sum(c)
    checks.append(expect("calculus: sum_j twist^j(P_(N-1)) = 0", ts.is_zero(), "", str(ts)))
    q = E.q
    x1, x2, x3 = twist(c.x, 1), twist(c.x, 2), twist(c.x, 3)
    p2 = c.x - x1 * (1 + q) + x2 * q
    checks.append(expect("calculus: P_2 = x - (1+q) x_t + q x_t2", poly_P(2, c) == p2, "", str(poly_P(2, c))))
    if N >= 3:
        p3 = c.x - x1 * (1 + q + q ** 2) + x2 * (q + q ** 2 + q ** 3) - x3 * q ** 3
        checks.append(expect("calculus: P_3 = x - (1+q+q^2) x_t + (q+q^2+q^3) x_t2 - q^3 x_t3",
                             poly_P(3, c) == p3, "", str(poly_P(3, c))))

    def phi_defining(k):
        lhs = differential(dx ** k)
        rhs = dx ** (k + 1) * E.from_base(poly_Phi(k, c))
        return None if lhs == rhs else f"k={k}"

    checks.append(forall("calculus: d((dx)^k) = (dx)^(k+1) Phi_k", range(1, N), phi_defining))
    checks.append(expect("calculus: Phi_1 = Q_2^-1 P_2", phi_1_closed_form(c) == poly_Phi(1, c)))

    def two_paths(w):
        direct = form_from_ext(differential(form_to_ext(w, c)), c, Basis.DX)
        via = form_differential(w, c)
        if direct.coeff != via.coeff or direct.degree != via.degree:
            # zero forms report degree 0, compare coefficients only
            if not (direct.coeff.is_zero() and via.coeff.is_zero()):
                return f"k={w.degree}, u={w.coeff}"
        return None

    forms = [KForm(k, Basis.DX, random_base(A, rng)) for k in range(N - 1) for _ in range(max(1, samples // 5))]
    checks.append(forall("calculus: d((dx)^k u) = (dx)^(k+1) D^(k) u", forms, two_paths))
    checks.append(forall("calculus: D^(1) = D", (p[0] for p in pairs),
                         lambda u: None if covariant_Dk(u, c, 1) == covariant_D(u, c) else f"u={u}"))

    def d2_via_D(v):
        lhs = d_power(E.from_base(v), 2)
        rhs = dx ** 2 * E.from_base(covariant_D(derivative(v, c), c))
        return None if lhs == rhs else f"v={v}"

    checks.append(forall("calculus: d^2 v = (dx)^2 D(v')", (p[1] for p in pairs), d2_via_D))

    if N == 2:
        checks.append(forall("calculus: u'' = 0 for N = 2", (p[0] for p in pairs),
                             lambda u: None if linearity_check(c, u).is_zero else f"u={u}"))

    if N >= 3:
        rep = phi_recurrence_report(c)
        summary = "; ".join(
            f"k={k}: " + (", ".join(name for name, hit in row.items() if hit) or "none")
            for k, row in rep.items()
        )
        ok = all(phi_defining(k) is None for k in range(1, N))
        checks.append(expect("calculus: Phi_(k+1) recurrence readings matching oracle Phi", ok, summary))

    if A.name == "gaussian":
        checks.extend(quaternion_checks(ext, rng, samples))
    return checks


def quaternion_checks(ext: ExtAlgebra, rng: random.Random, samples: int = 50) -> list[Check]:
    """The worked quaternion example: x = a + b j, d of a general quaternion, linearity."""
    A = ext.base
    one, j = A.one(), A.basis_element("j")
    checks = []

    def delta_x(ab):
        a, b = ab
        x = one * a + j * b
        return None if delta(x) == j * (2 * b) else f"a={a}, b={b}"

    abs_ = []
    while len(abs_) < samples:
        a, b = random_cyc(A.field, rng), random_cyc(A.field, rng, nonzero=True)
        abs_.append((a, b))
    checks.append(forall("quaternion: Delta(a + b j) = 2 b j", abs_, delta_x))
    qs = [random_ext(ext, rng, 1.0) for _ in range(samples)]
    checks.append(forall("quaternion: d^2 q = 0", qs, lambda h: None if d_power(h, 2).is_zero() else str(h)))

    def printed(h):
        z0, z1 = h.parts
        dq = differential(h)
        if dq.parts[0] != -(twist(z1) + z1):
            return f"degree-0 part of d({h}) is {dq.parts[0]}"
        if dq.parts[1] != z0 - twist(z0):
            return f"degree-1 part of d({h}) is {dq.parts[1]}"
        return None

    checks.append(forall("quaternion: d(z0 + i z1) = i(z0 - conj z0) - (conj z1 + z1)", qs, printed,
                         "degree-0 part matches the printed -(conj z1 + z1); degree-1 part i(z0 - conj z0) is extra"))

    def linear(ab):
        a, b = ab
        c = make_coordinate(ext, one * a + j * b)
        u = random_base(A, rng)
        return None if linearity_check(c, u).is_zero else f"x={one * a + j * b}, u={u}"

    checks.append(forall("quaternion: u''_x = 0 for x = a + b j", abs_, linear))
    return checks


def run_suite(suite: str, ext: ExtAlgebra, coord: Coordinate | None = None, seed: int = 0,
              samples: int = 50) -> Report:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    from .oracle import oracle_suite  # imported lazily: oracle depends on this module's helpers
    rng = random.Random(seed)
    report = Report(suite, ext.name or ext.base.name, seed)
    parts = SUITES[:-1] if suite == "all" else (suite,)
    for name in parts:
        if name == "field":
            report.checks += field_checks(ext, rng, samples)
        elif name == "base":
            report.checks += base_checks(ext, rng, samples)
        elif name == "extension":
            report.checks += extension_checks(ext, rng, samples, coord)
        elif name == "calculus":
            if coord is None:
                report.checks.append(Check("calculus", FAIL, "no coordinate with invertible Delta"))
            else:
                report.checks += calculus_checks(ext, coord, rng, samples)
        elif name == "oracle":
            report.checks += oracle_suite(ext, coord, rng, samples)
    return report
