"""Differential calculus over a coordinate x of the base algebra.

First order: Delta, the right derivative, the dx-twist and change of
variable.  Higher order: the Q_k, P_k, Phi_k sequences and k-forms written
in either the t^k or the (dx)^k basis.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .basealg import BaseElement, NotInvertible, base_inverse, twist
from .extension import ExtAlgebra, ExtElement, degree, differential


@dataclass(frozen=True, eq=False)
class Coordinate:
    ext: ExtAlgebra
    x: BaseElement
    delta_x: BaseElement
    delta_x_inv: BaseElement
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def base(self):
        return self.ext.base

    @property
    def n(self) -> int:
        return self.ext.n

    @property
    def q(self):
        return self.ext.q

    def dx(self) -> ExtElement:
        return self.ext.from_base(self.delta_x, 1)


def delta(u: BaseElement) -> BaseElement:
    return u - twist(u, 1)


def make_coordinate(ext: ExtAlgebra, x: BaseElement) -> Coordinate:
    dx = delta(x)
    try:
        inv = base_inverse(dx)
    except NotInvertible:
        raise NotInvertible(f"Delta({x}) = {dx} is not invertible; {x} cannot be a coordinate") from None
    return Coordinate(ext, x, dx, inv)


def derivative(u: BaseElement, c: Coordinate) -> BaseElement:
    """Right derivative du/dx = Delta(x)^-1 Delta(u)."""
    return c.delta_x_inv * delta(u)


def phi_dx(u: BaseElement, c: Coordinate) -> BaseElement:
    return c.delta_x_inv * twist(u, 1) * c.delta_x


@dataclass
class ChangeOfVariable:
    y_prime_x: BaseElement
    x_prime_y: BaseElement


def change_of_variable(c_x: Coordinate, c_y: Coordinate) -> ChangeOfVariable:
    y_x = c_x.delta_x_inv * c_y.delta_x
    x_y = c_y.delta_x_inv * c_x.delta_x
    one = c_x.base.one()
    if y_x * x_y != one or x_y * y_x != one:
        raise ArithmeticError("derivatives of the two coordinates are not mutually inverse")
    return ChangeOfVariable(y_x, x_y)


def _check_k(k: int, lo: int, hi: int, what: str):
    if not lo <= k <= hi:
        raise ValueError(f"{what} needs {lo} <= k <= {hi}, got {k}")


def poly_Q(k: int, c: Coordinate) -> BaseElement:
    """Q_1 = Delta x, Q_(k+1) = twist(Q_k) Delta x."""
    _check_k(k, 1, c.n, "Q_k")
    key = ("Q", k)
    if key not in c._cache:
        c._cache[key] = c.delta_x if k == 1 else twist(poly_Q(k - 1, c), 1) * c.delta_x
    return c._cache[key]


def poly_Q_product(k: int, c: Coordinate) -> BaseElement:
    """Explicit product Delta x_(t^(k-1)) ... Delta x_t Delta x."""
    _check_k(k, 1, c.n, "Q_k")
    out = c.base.one()
    for j in range(k - 1, -1, -1):
        out = out * twist(c.delta_x, j)
    return out


def poly_Q_inverse(k: int, c: Coordinate) -> BaseElement:
    """Delta x^-1 Delta x_t^-1 ... Delta x_(t^(k-1))^-1."""
    _check_k(k, 1, c.n, "Q_k")
    out = c.base.one()
    for j in range(k):
        out = out * twist(c.delta_x_inv, j)
    return out


def poly_P(k: int, c: Coordinate) -> BaseElement:
    """P_1 = Delta x, P_(k+1) = P_k - q^k twist(P_k)."""
    _check_k(k, 1, c.n, "P_k")
    key = ("P", k)
    if key not in c._cache:
        if k == 1:
            c._cache[key] = c.delta_x
        else:
            prev = poly_P(k - 1, c)
            c._cache[key] = prev - twist(prev, 1) * c.ext.field.q_power(k - 1)
    return c._cache[key]


def poly_P_twisted_sum(c: Coordinate) -> BaseElement:
    p = poly_P(c.n - 1, c)
    total = c.base.zero()
    for j in range(c.n):
        total = total + twist(p, j)
    return total


def poly_Phi(k: int, c: Coordinate) -> BaseElement:
    """Phi_k solved from d((dx)^k) = (dx)^(k+1) Phi_k in A[t].

    Both sides are homogeneous of degree k+1 (mod N), so Phi_k is the inverse
    of the (dx)^(k+1) coefficient times the d((dx)^k) coefficient.
    """
    _check_k(k, 1, c.n - 1, "Phi_k")
    key = ("Phi", k)
    if key not in c._cache:
        dx = c.dx()
        lhs = differential(dx ** k)
        rhs_basis = dx ** (k + 1)
        g = (k + 1) % c.n
        c._cache[key] = base_inverse(rhs_basis.parts[g]) * lhs.parts[g]
    return c._cache[key]


def phi_1_closed_form(c: Coordinate) -> BaseElement:
    """Q_2^-1 P_2."""
    return base_inverse(poly_Q(2, c)) * poly_P(2, c)


PHI_RECURRENCE_READINGS = {
    "plain, q^(k-1)": (False, -1),
    "plain, q^k": (False, 0),
    "twisted, q^(k-1)": (True, -1),
    "twisted, q^k": (True, 0),
}


def phi_recurrence_report(c: Coordinate) -> dict[int, dict[str, bool]]:
    """For each k, which reading of Phi_(k+1) = Ad(Phi_k) + q^e Phi_1 matches Phi_(k+1).

    "plain" conjugates Phi_k by Delta x; "twisted" conjugates twist(Phi_k),
    as in the dx-twist u -> Delta x^-1 u_t Delta x.
    """
    out: dict[int, dict[str, bool]] = {}
    phi1 = poly_Phi(1, c)
    F = c.ext.field
    for k in range(1, c.n - 1):
        target = poly_Phi(k + 1, c)
        cur = poly_Phi(k, c)
        row = {}
        for name, (twisted, shift) in PHI_RECURRENCE_READINGS.items():
            inner = twist(cur, 1) if twisted else cur
            guess = c.delta_x_inv * inner * c.delta_x + phi1 * F.q_power(k + shift)
            row[name] = guess == target
        out[k] = row
    return out


# -- forms ---------------------------------------------------------------------

class Basis(str, Enum):
    TAU = "tau"
    DX = "dx"


@dataclass(frozen=True)
class KForm:
    degree: int
    basis: Basis
    coeff: BaseElement

    def to_json(self) -> dict:
        return {"degree": self.degree, "basis": self.basis.value, "coeff": self.coeff.to_json()}

    @classmethod
    def from_json(cls, algebra, data: dict) -> KForm:
        return cls(int(data["degree"]), Basis(data["basis"]), BaseElement.from_json(algebra, data["coeff"]))

    def __str__(self):
        b = "t" if self.basis is Basis.TAU else "dx"
        if self.degree == 0:
            return str(self.coeff)
        head = b if self.degree == 1 else (f"{b}^{self.degree}" if b == "t" else f"(dx)^{self.degree}")
        return f"{head}*({self.coeff})"


def _q_k(k: int, c: Coordinate) -> BaseElement:
    return c.base.one() if k == 0 else poly_Q(k, c)


def form_to_dx_basis(w: KForm, c: Coordinate) -> KForm:
    if w.basis is Basis.DX:
        return w
    return KForm(w.degree, Basis.DX, base_inverse(_q_k(w.degree, c)) * w.coeff)


def form_to_tau_basis(w: KForm, c: Coordinate) -> KForm:
    if w.basis is Basis.TAU:
        return w
    return KForm(w.degree, Basis.TAU, _q_k(w.degree, c) * w.coeff)


def form_to_ext(w: KForm, c: Coordinate) -> ExtElement:
    t = form_to_tau_basis(w, c)
    return c.ext.from_base(t.coeff, t.degree)


def form_from_ext(xi: ExtElement, c: Coordinate, basis: Basis = Basis.DX) -> KForm:
    k = degree(xi)
    w = KForm(k, Basis.TAU, xi.parts[k])
    return form_to_dx_basis(w, c) if basis is Basis.DX else w


def covariant_D(u: BaseElement, c: Coordinate) -> BaseElement:
    """D u = q u'_x + Q_2^-1 P_2 u."""
    return derivative(u, c) * c.q + phi_1_closed_form(c) * u


def covariant_Dk(u: BaseElement, c: Coordinate, k: int) -> BaseElement:
    """D^(k) u = q^k u'_x + Phi_k u."""
    return derivative(u, c) * c.ext.field.q_power(k) + poly_Phi(k, c) * u


def form_differential(w: KForm, c: Coordinate) -> KForm:
    """d((dx)^k u) = (dx)^(k+1) (q^k u'_x + Phi_k u), for k <= N-2."""
    w = form_to_dx_basis(w, c)
    k = w.degree
    if k > c.n - 2:
        raise ValueError(f"no differential for {k}-forms: degree {k + 1} would wrap mod N={c.n}")
    coeff = derivative(w.coeff, c) if k == 0 else covariant_Dk(w.coeff, c, k)
    return KForm(k + 1, Basis.DX, coeff)


@dataclass
class LinearityCheck:
    second_derivative: BaseElement
    is_zero: bool


def linearity_check(c: Coordinate, u: BaseElement) -> LinearityCheck:
    if c.n != 2:
        raise ValueError(f"linearity holds for N = 2 only, this extension has N = {c.n}")
    second = derivative(derivative(u, c), c)
    return LinearityCheck(second, second.is_zero())


def is_q_eigen_coordinate(c: Coordinate) -> bool:
    """True when twist(x) = q x, the setting of the q-power rule."""
    return twist(c.x, 1) == c.x * c.q
