"""Finite-dimensional unital associative algebras over Q(zeta_N) with a twist.

An algebra is given by structure constants ``e_i * e_j = sum_k c[i][j][k] e_k``
and a twist automorphism whose matrix is stored row-wise: row ``i`` holds the
coordinates of ``twist(e_i)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .exactnum import (
    CyclotomicField,
    CyclotomicNumber,
    cyclotomic_field,
    parse_fraction,
)


class NotInvertible(ArithmeticError):
    """Raised when an element has no two-sided inverse."""


class AlgebraMismatch(ValueError):
    pass


def solve_linear(matrix: Sequence[Sequence[CyclotomicNumber]], rhs: Sequence[CyclotomicNumber]):
    """Solve ``matrix @ x = rhs`` exactly; returns None if singular."""
    n = len(matrix)
    a = [list(row) + [rhs[i]] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if not a[r][col].is_zero()), None)
        if pivot is None:
            return None
        a[col], a[pivot] = a[pivot], a[col]
        inv = a[col][col].inverse()
        a[col] = [v * inv for v in a[col]]
        for r in range(n):
            if r != col and not a[r][col].is_zero():
                f = a[r][col]
                a[r] = [v - f * w for v, w in zip(a[r], a[col])]
    return [a[r][n] for r in range(n)]


@dataclass(frozen=True, eq=False)
class BaseAlgebra:
    field: CyclotomicField
    basis_names: tuple[str, ...]
    structure: tuple[tuple[tuple[CyclotomicNumber, ...], ...], ...] = field(repr=False)
    unit: tuple[CyclotomicNumber, ...] = field(repr=False)
    twist_matrix: tuple[tuple[CyclotomicNumber, ...], ...] = field(repr=False)
    name: str = "custom"
    # sparse copies for fast contraction, filled in __post_init__
    _table: tuple = field(init=False, repr=False)
    _twists: tuple = field(init=False, repr=False)

    def __post_init__(self):
        dim = self.dim
        table = tuple(
            tuple(
                tuple((k, c) for k, c in enumerate(self.structure[i][j]) if not c.is_zero())
                for j in range(dim)
            )
            for i in range(dim)
        )
        object.__setattr__(self, "_table", table)
        # _twists[k][i] = sparse coords of twist^k(e_i), k = 0..N-1
        powers = []
        cur = [tuple((r, self.field.one) for r in [i]) for i in range(dim)]
        for _ in range(self.n):
            powers.append(tuple(cur))
            nxt = []
            for i in range(dim):
                acc = [self.field.zero] * dim
                for r, c in cur[i]:
                    for t, m in enumerate(self.twist_matrix[r]):
                        if not m.is_zero():
                            acc[t] = acc[t] + c * m
                nxt.append(tuple((t, v) for t, v in enumerate(acc) if not v.is_zero()))
            cur = nxt
        object.__setattr__(self, "_twists", tuple(powers))

    @property
    def n(self) -> int:
        return self.field.n

    @property
    def dim(self) -> int:
        return len(self.basis_names)

    def element(self, coords: Sequence) -> BaseElement:
        return BaseElement(self, tuple(self.field(c) for c in coords))

    def basis(self, i: int) -> BaseElement:
        coords = [self.field.zero] * self.dim
        coords[i] = self.field.one
        return BaseElement(self, tuple(coords))

    def basis_element(self, name: str) -> BaseElement:
        return self.basis(self.basis_names.index(name))

    def zero(self) -> BaseElement:
        return BaseElement(self, (self.field.zero,) * self.dim)

    def one(self) -> BaseElement:
        return BaseElement(self, self.unit)

    def scalar(self, c) -> BaseElement:
        return self.one() * self.field(c)

    def to_json(self, sign: int = 1) -> dict:
        def arr(c):
            return c.to_json()["coords"]

        return {
            "n": self.n,
            "sign": sign,
            "dim": self.dim,
            "basis": list(self.basis_names),
            "structure": [[[arr(c) for c in cell] for cell in row] for row in self.structure],
            "unit": [arr(c) for c in self.unit],
            "twist": [[arr(c) for c in row] for row in self.twist_matrix],
        }

    @classmethod
    def from_json(cls, data: dict, name: str = "custom") -> BaseAlgebra:
        n = int(data["n"])
        if n < 2:
            raise ValueError("algebra files need n >= 2")
        F = cyclotomic_field(n)
        dim = int(data["dim"])

        def num(arr):
            if isinstance(arr, (str, int)):
                arr = [arr] + ["0"] * (F.degree - 1)
            return CyclotomicNumber(F, [parse_fraction(c) for c in arr])

        basis = tuple(data.get("basis") or [f"e{i}" for i in range(dim)])
        structure = tuple(
            tuple(tuple(num(c) for c in cell) for cell in row) for row in data["structure"]
        )
        unit = tuple(num(c) for c in data["unit"])
        twist = tuple(tuple(num(c) for c in row) for row in data["twist"])
        if len(basis) != dim or len(unit) != dim or len(twist) != dim:
            raise ValueError("basis/unit/twist lengths must equal dim")
        if len(structure) != dim or any(
            len(row) != dim or any(len(cell) != dim for cell in row) for row in structure
        ):
            raise ValueError("structure must be a dim x dim x dim table")
        if any(len(row) != dim for row in twist):
            raise ValueError("twist must be dim x dim")
        return cls(F, basis, structure, unit, twist, name=name)


class BaseElement:
    __slots__ = ("algebra", "coords")

    def __init__(self, algebra: BaseAlgebra, coords: tuple[CyclotomicNumber, ...]):
        if len(coords) != algebra.dim:
            raise ValueError(f"expected {algebra.dim} coords, got {len(coords)}")
        self.algebra = algebra
        self.coords = coords

    def _check(self, other: BaseElement):
        if other.algebra is not self.algebra:
            raise AlgebraMismatch("elements belong to different algebras")

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coords)

    def __add__(self, other):
        if not isinstance(other, BaseElement):
            if isinstance(other, (int, Fraction, CyclotomicNumber)):
                other = self.algebra.scalar(other)
            else:
                return NotImplemented
        self._check(other)
        return BaseElement(self.algebra, tuple(a + b for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self):
        return BaseElement(self.algebra, tuple(-c for c in self.coords))

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, BaseElement):
            return base_mul(self, other)
        if isinstance(other, (int, Fraction, CyclotomicNumber)):
            c = self.algebra.field(other)
            return BaseElement(self.algebra, tuple(a * c for a in self.coords))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, CyclotomicNumber)):
            return self * other
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else base_inverse(self)
        k = abs(k)
        result = self.algebra.one()
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, BaseElement):
            return NotImplemented
        return self.algebra is other.algebra and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return f"BaseElement({format_base(self)})"

    def __str__(self):
        return format_base(self)

    def to_json(self) -> dict:
        return {"coords": [c.to_json() for c in self.coords]}

    @classmethod
    def from_json(cls, algebra: BaseAlgebra, data: dict) -> BaseElement:
        coords = tuple(algebra.field(CyclotomicNumber.from_json(c)) for c in data["coords"])
        return cls(algebra, coords)


def format_base(u: BaseElement) -> str:
    terms = []
    for c, name in zip(u.coords, u.algebra.basis_names):
        if c.is_zero():
            continue
        cs = str(c)
        multi = (" + " in cs or " - " in cs)
        if name == "1":
            terms.append(f"({cs})" if multi else cs)
        elif c.is_one():
            terms.append(name)
        elif c == -1:
            terms.append("-" + name)
        else:
            terms.append(f"({cs})*{name}" if multi else f"{cs}*{name}")
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        out += " - " + t[1:] if t.startswith("-") else " + " + t
    return out


def base_mul(u: BaseElement, v: BaseElement) -> BaseElement:
    u._check(v)
    A = u.algebra
    F = A.field
    acc = [F.zero] * A.dim
    table = A._table
    for i, a in enumerate(u.coords):
        if a.is_zero():
            continue
        row = table[i]
        for j, b in enumerate(v.coords):
            if b.is_zero():
                continue
            ab = a * b
            for k, c in row[j]:
                acc[k] = acc[k] + (ab if c.is_one() else ab * c)
    return BaseElement(A, tuple(acc))


def twist(u: BaseElement, k: int = 1) -> BaseElement:
    """Apply the twist automorphism k times (k taken mod N)."""
    A = u.algebra
    k %= A.n
    if k == 0:
        return u
    acc = [A.field.zero] * A.dim
    images = A._twists[k]
    for i, c in enumerate(u.coords):
        if c.is_zero():
            continue
        for t, m in images[i]:
            acc[t] = acc[t] + (c if m.is_one() else c * m)
    return BaseElement(A, tuple(acc))


def left_mul_matrix(u: BaseElement) -> list[list[CyclotomicNumber]]:
    """Matrix M with (u*w)_k = sum_j M[k][j] w_j."""
    A = u.algebra
    M = [[A.field.zero] * A.dim for _ in range(A.dim)]
    for i, a in enumerate(u.coords):
        if a.is_zero():
            continue
        for j in range(A.dim):
            for k, c in A._table[i][j]:
                M[k][j] = M[k][j] + a * c
    return M


def base_inverse(u: BaseElement) -> BaseElement:
    A = u.algebra
    sol = solve_linear(left_mul_matrix(u), A.unit)
    if sol is None:
        raise NotInvertible(f"{u} is not invertible")
    w = BaseElement(A, tuple(sol))
    if w * u != A.one():
        raise NotInvertible(f"{u} has a right inverse but no left inverse")
    return w


# -- built-in instances --------------------------------------------------------

def make_cyclic_coordinate_algebra(N: int) -> BaseAlgebra:
    """span{1, x, ..., x^(N-1)} with x^N = 1 and twist x -> q x."""
    if N < 2:
        raise ValueError(f"N must be >= 2, got {N}")
    F = cyclotomic_field(N)
    zero, one = F.zero, F.one
    structure = tuple(
        tuple(tuple(one if k == (i + j) % N else zero for k in range(N)) for j in range(N))
        for i in range(N)
    )
    unit = (one,) + (zero,) * (N - 1)
    twist_m = tuple(
        tuple(F.q_power(i) if j == i else zero for j in range(N)) for i in range(N)
    )
    names = ("1", "x") + tuple(f"x^{i}" for i in range(2, N))
    return BaseAlgebra(F, names, structure, unit, twist_m, name=f"cyclic:{N}")


def make_gaussian_base() -> BaseAlgebra:
    """span{1, j} over Q with j^2 = -1 and twist a + b j -> a - b j."""
    F = cyclotomic_field(2)
    z, o = F.zero, F.one
    structure = (
        ((o, z), (z, o)),
        ((z, o), (-o, z)),
    )
    return BaseAlgebra(F, ("1", "j"), structure, (o, z), ((o, z), (z, -o)), name="gaussian")


# -- validation -----------------------------------------------------------------

@dataclass
class LawFailure:
    law: str
    witness: tuple
    detail: str = ""

    def __str__(self):
        return f"{self.law} fails at {self.witness}: {self.detail}".rstrip(": ")


@dataclass
class ValidationReport:
    failures: list[LawFailure]

    @property
    def ok(self) -> bool:
        return not self.failures


def validate(A: BaseAlgebra) -> ValidationReport:
    """Check associativity, unit laws, twist multiplicativity and twist^N = id."""
    failures: list[LawFailure] = []
    basis = [A.basis(i) for i in range(A.dim)]
    names = A.basis_names
    one = A.one()
    for i, e in enumerate(basis):
        if one * e != e:
            failures.append(LawFailure("left unit", (names[i],), f"1*{names[i]} = {one * e}"))
        if e * one != e:
            failures.append(LawFailure("right unit", (names[i],), f"{names[i]}*1 = {e * one}"))
    products = [[basis[i] * basis[j] for j in range(A.dim)] for i in range(A.dim)]
    for i in range(A.dim):
        for j in range(A.dim):
            for k in range(A.dim):
                lhs = products[i][j] * basis[k]
                rhs = basis[i] * products[j][k]
                if lhs != rhs:
                    failures.append(
                        LawFailure("associativity", (names[i], names[j], names[k]), f"{lhs} != {rhs}")
                    )
    for i in range(A.dim):
        for j in range(A.dim):
            lhs = twist(products[i][j])
            rhs = twist(basis[i]) * twist(basis[j])
            if lhs != rhs:
                failures.append(
                    LawFailure("twist homomorphism", (names[i], names[j]), f"{lhs} != {rhs}")
                )
    if twist(one) != one:
        failures.append(LawFailure("twist fixes unit", ("1",), str(twist(one))))
    for i, e in enumerate(basis):
        # explicit N-fold application; twist(e, N) short-circuits mod N
        cur = e
        for _ in range(A.n):
            cur = twist(cur, 1)
        if cur != e:
            failures.append(LawFailure("twist^N = id", (names[i],), str(cur)))
    return ValidationReport(failures)
