"""Explicit matrix realizations of the built-in extensions.

Used as an independent check: identities computed in A[t] must survive the
map to matrices, where every product is ordinary matrix multiplication and
the twist is conjugation by the image of t.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .basealg import BaseElement, solve_linear
from .exactnum import CyclotomicField, CyclotomicNumber, cyclotomic_field, embed
from .extension import ExtAlgebra, ExtElement

Matrix = tuple[tuple[CyclotomicNumber, ...], ...]


# -- small exact matrix kit ---------------------------------------------------------

def mat_zero(F: CyclotomicField, n: int) -> Matrix:
    return tuple((F.zero,) * n for _ in range(n))


def mat_identity(F: CyclotomicField, n: int) -> Matrix:
    return tuple(tuple(F.one if i == j else F.zero for j in range(n)) for i in range(n))


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(a: Matrix, c: CyclotomicNumber) -> Matrix:
    return tuple(tuple(x * c for x in row) for row in a)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n, m = len(a), len(b[0])
    F = (a[0][0]).field
    out = []
    for i in range(n):
        row = [F.zero] * m
        for k, aik in enumerate(a[i]):
            if aik.is_zero():
                continue
            bk = b[k]
            for j in range(m):
                if not bk[j].is_zero():
                    row[j] = row[j] + aik * bk[j]
        out.append(tuple(row))
    return tuple(out)


def mat_pow(a: Matrix, k: int) -> Matrix:
    out = mat_identity(a[0][0].field, len(a))
    for _ in range(k):
        out = mat_mul(out, a)
    return out


def mat_inverse(a: Matrix) -> Matrix:
    F = a[0][0].field
    n = len(a)
    cols = []
    for j in range(n):
        e = [F.one if i == j else F.zero for i in range(n)]
        col = solve_linear(a, e)
        if col is None:
            raise ArithmeticError("singular matrix")
        cols.append(col)
    return tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))


def mat_is_zero(a: Matrix) -> bool:
    return all(x.is_zero() for row in a for x in row)


def format_matrix(a: Matrix) -> str:
    return "[" + "; ".join(", ".join(str(x) for x in row) for row in a) + "]"


# -- representations -------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class MatrixRep:
    ext: ExtAlgebra
    field: CyclotomicField
    dim: int
    images: dict[str, Matrix]
    # images of the base basis, in basis order
    base_images: tuple[Matrix, ...] = field(repr=False)
    _products: tuple = field(init=False, repr=False)

    def __post_init__(self):
        # _products[k][i] = image of t^k e_i
        T = self.images["t"]
        powers = [mat_identity(self.field, self.dim)]
        for _ in range(self.ext.n - 1):
            powers.append(mat_mul(powers[-1], T))
        prods = tuple(tuple(mat_mul(P, B) for B in self.base_images) for P in powers)
        object.__setattr__(self, "_products", prods)

    @property
    def tau(self) -> Matrix:
        return self.images["t"]

    def scalar(self, c: CyclotomicNumber) -> CyclotomicNumber:
        return embed(c, self.field)

    def identity(self) -> Matrix:
        return mat_identity(self.field, self.dim)

    def zero(self) -> Matrix:
        return mat_zero(self.field, self.dim)


def quantum_plane_rep(N: int, ext: ExtAlgebra | None = None) -> MatrixRep:
    """x -> diag(1, q, ..., q^(N-1)), t = y -> cyclic shift e_i -> e_(i+1)."""
    if ext is None:
        from .instances import quantum_plane
        ext = quantum_plane(N)
    F = cyclotomic_field(N)
    X = tuple(tuple(F.q_power(i) if i == j else F.zero for j in range(N)) for i in range(N))
    # column i of Y is e_(i+1): Y[r][c] = 1 iff r = c + 1 mod N; then X Y = q Y X
    Y = tuple(tuple(F.one if r == (c + 1) % N else F.zero for c in range(N)) for r in range(N))
    base_images = tuple(mat_pow(X, i) for i in range(N))
    return MatrixRep(ext, F, N, {"t": Y, "y": Y, "x": X}, base_images)


def quaternion_rep(ext: ExtAlgebra | None = None) -> MatrixRep:
    """2x2 matrices over Q(zeta_4): i -> diag(z, -z), j -> [[0, 1], [-1, 0]]."""
    if ext is None:
        from .instances import quaternions
        ext = quaternions()
    F = cyclotomic_field(4)
    z, o, zero = F.q_root(), F.one, F.zero
    I = ((z, zero), (zero, -z))
    J = ((zero, o), (-o, zero))
    K = mat_mul(I, J)
    return MatrixRep(ext, F, 2, {"t": I, "i": I, "j": J, "k": K, "1": mat_identity(F, 2)},
                     (mat_identity(F, 2), J))


def represent_base(u: BaseElement, R: MatrixRep) -> Matrix:
    return represent(R.ext.from_base(u), R)


def represent(xi: ExtElement, R: MatrixRep) -> Matrix:
    if xi.algebra is not R.ext:
        raise ValueError("representation built for a different algebra")
    out = R.zero()
    for k, u in enumerate(xi.parts):
        for i, c in enumerate(u.coords):
            if not c.is_zero():
                out = mat_add(out, mat_scale(R._products[k][i], R.scalar(c)))
    return out


def is_faithful_on_basis(R: MatrixRep) -> bool:
    """Images of the basis t^k e_i are linearly independent."""
    vecs = [tuple(x for row in M for x in row) for layer in R._products for M in layer]
    return _rank(vecs) == len(vecs)


def _rank(vectors) -> int:
    rows = [list(v) for v in vectors]
    rank, col = 0, 0
    ncols = len(rows[0]) if rows else 0
    while rank < len(rows) and col < ncols:
        pivot = next((r for r in range(rank, len(rows)) if not rows[r][col].is_zero()), None)
        if pivot is None:
            col += 1
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = rows[rank][col].inverse()
        rows[rank] = [v * inv for v in rows[rank]]
        for r in range(len(rows)):
            if r != rank and not rows[r][col].is_zero():
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
        col += 1
    return rank


def rep_for(ext: ExtAlgebra) -> MatrixRep | None:
    """Matrix realization of a built-in extension, or None for custom algebras."""
    name = ext.base.name
    if name.startswith("cyclic:") and ext.sign == 1:
        return quantum_plane_rep(ext.n, ext)
    if name == "gaussian" and ext.sign == -1:
        return quaternion_rep(ext)
    return None
