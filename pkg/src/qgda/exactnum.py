"""Exact arithmetic in the cyclotomic field Q(zeta_n).

Elements are stored as integer numerators over one positive common
denominator, reduced modulo the n-th cyclotomic polynomial, so equality is
plain coordinate comparison.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence, Union

Rational = Fraction
Scalar = Union[int, Fraction, "CyclotomicNumber"]


class FieldMismatch(ValueError):
    pass


# -- polynomial helpers (coefficient lists, lowest degree first) -------------

def _trim(p: list) -> list:
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _poly_mul(a: Sequence, b: Sequence) -> list:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _poly_divmod(a: Sequence[Fraction], b: Sequence[Fraction]) -> tuple[list, list]:
    a = [Fraction(c) for c in a]
    b = _trim([Fraction(c) for c in b])
    if b == [0]:
        raise ZeroDivisionError("polynomial division by zero")
    quot = [Fraction(0)] * max(1, len(a) - len(b) + 1)
    rem = _trim(list(a))
    while len(rem) >= len(b) and rem != [0]:
        shift = len(rem) - len(b)
        c = rem[-1] / b[-1]
        quot[shift] = c
        for i, bi in enumerate(b):
            rem[i + shift] -= c * bi
        rem.pop()
        _trim(rem)
    return _trim(quot), rem


def cyclotomic_minimal_poly(n: int) -> list[Fraction]:
    """Coefficients of the monic cyclotomic polynomial Phi_n, constant term first."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return [Fraction(c) for c in _cyclotomic_int(n)]


@lru_cache(maxsize=None)
def _cyclotomic_int(n: int) -> tuple[int, ...]:
    num = [Fraction(-1)] + [Fraction(0)] * (n - 1) + [Fraction(1)]
    for d in range(1, n):
        if n % d == 0:
            num, rem = _poly_divmod(num, _cyclotomic_int(d))
            assert rem == [0]
    assert all(c.denominator == 1 for c in num)
    return tuple(int(c) for c in num)


def euler_phi(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


# -- the field ---------------------------------------------------------------

@dataclass(frozen=True)
class CyclotomicField:
    n: int
    minimal_poly: tuple[Fraction, ...] = field(repr=False)
    degree: int = field(repr=False)
    # _reduce[m] = integer coords of z^m mod Phi_n, for 0 <= m < 2*degree - 1
    _reduce: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)

    def __reduce__(self):
        return (cyclotomic_field, (self.n,))

    @property
    def zero(self) -> CyclotomicNumber:
        return CyclotomicNumber._raw(self, (0,) * self.degree, 1)

    @property
    def one(self) -> CyclotomicNumber:
        return self.q_power(0)

    def __call__(self, value: Scalar | Sequence) -> CyclotomicNumber:
        """Coerce an int, Fraction, coordinate sequence or field element."""
        if isinstance(value, CyclotomicNumber):
            if value.field is not self:
                return embed(value, self)
            return value
        if isinstance(value, (int, Fraction)):
            v = Fraction(value)
            nums = [0] * self.degree
            nums[0] = v.numerator
            return CyclotomicNumber._make(self, nums, v.denominator)
        return CyclotomicNumber(self, value)

    def q_root(self) -> CyclotomicNumber:
        return self.q_power(1)

    def q_power(self, k: int) -> CyclotomicNumber:
        return _q_power(self.n, k % self.n)

    def q_integer(self, m: int) -> CyclotomicNumber:
        """[m]_q = 1 + q + ... + q^(m-1)."""
        total = self.zero
        for i in range(m):
            total = total + self.q_power(i)
        return total


@lru_cache(maxsize=None)
def cyclotomic_field(n: int) -> CyclotomicField:
    """The (cached, hence identity-comparable) field Q(zeta_n)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    phi = _cyclotomic_int(n)
    deg = len(phi) - 1
    table = []
    cur = [0] * deg
    cur[0] = 1
    for _ in range(max(1, 2 * deg - 1)):
        table.append(tuple(cur))
        # multiply by z and reduce using z^deg = -(phi_0 + ... + phi_{deg-1} z^{deg-1})
        top = cur[-1]
        cur = [0] + cur[:-1]
        for i in range(deg):
            cur[i] -= top * phi[i]
    return CyclotomicField(n, tuple(Fraction(c) for c in phi), deg, tuple(table))


@lru_cache(maxsize=None)
def _q_power(n: int, k: int) -> CyclotomicNumber:
    F = cyclotomic_field(n)
    if k == 0:
        nums = [0] * F.degree
        nums[0] = 1
        return CyclotomicNumber._raw(F, tuple(nums), 1)
    return _q_power(n, k - 1) * _q_power(n, 1) if k > 1 else _z(F)


def _z(F: CyclotomicField) -> CyclotomicNumber:
    if F.degree == 1:
        return CyclotomicNumber._raw(F, (-int(F.minimal_poly[0]),), 1)
    nums = [0] * F.degree
    nums[1] = 1
    return CyclotomicNumber._raw(F, tuple(nums), 1)


def q_root(F: CyclotomicField) -> CyclotomicNumber:
    return F.q_root()


def q_power(F: CyclotomicField, k: int) -> CyclotomicNumber:
    return F.q_power(k)


# -- elements ----------------------------------------------------------------

class CyclotomicNumber:
    """An element of Q(zeta_n) in the power basis 1, zeta, ..., zeta^(deg-1)."""

    __slots__ = ("field", "num", "den", "_hash")

    def __init__(self, field: CyclotomicField, coords: Iterable):
        fr = [Fraction(c) for c in coords]
        if len(fr) != field.degree:
            raise ValueError(f"expected {field.degree} coords, got {len(fr)}")
        den = 1
        for c in fr:
            den = den * c.denominator // gcd(den, c.denominator)
        nums = [c.numerator * (den // c.denominator) for c in fr]
        self._init(field, nums, den)

    def _init(self, field, nums, den):
        g = den
        for c in nums:
            if c:
                g = gcd(g, c)
                if g == 1:
                    break
        if not any(nums):
            den, g = 1, 1
        if g != 1:
            nums = [c // g for c in nums]
            den //= g
        self.field = field
        self.num = tuple(nums)
        self.den = den
        self._hash = None

    @classmethod
    def _make(cls, field, nums, den) -> CyclotomicNumber:
        obj = cls.__new__(cls)
        if den < 0:
            nums, den = [-c for c in nums], -den
        obj._init(field, nums, den)
        return obj

    @classmethod
    def _raw(cls, field, nums, den) -> CyclotomicNumber:
        obj = cls.__new__(cls)
        obj.field, obj.num, obj.den, obj._hash = field, nums, den, None
        return obj

    @property
    def coords(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self.den) for c in self.num)

    def is_zero(self) -> bool:
        return not any(self.num)

    def is_one(self) -> bool:
        return self.den == 1 and self.num[0] == 1 and not any(self.num[1:])

    def _coerce(self, other) -> CyclotomicNumber:
        if isinstance(other, CyclotomicNumber):
            if other.field is not self.field:
                raise FieldMismatch(f"Q(zeta_{self.field.n}) vs Q(zeta_{other.field.n})")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if self.den == other.den:
            return CyclotomicNumber._make(self.field, [a + b for a, b in zip(self.num, other.num)], self.den)
        d = self.den * other.den
        return CyclotomicNumber._make(
            self.field,
            [a * other.den + b * self.den for a, b in zip(self.num, other.num)],
            d,
        )

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber._raw(self.field, tuple(-c for c in self.num), self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return self.field.zero
        if self.is_one():
            return other
        if other.is_one():
            return self
        F = self.field
        deg = F.degree
        out = [0] * deg
        table = F._reduce
        for i, a in enumerate(self.num):
            if not a:
                continue
            for j, b in enumerate(other.num):
                if not b:
                    continue
                ab = a * b
                row = table[i + j]
                for t in range(deg):
                    if row[t]:
                        out[t] += ab * row[t]
        return CyclotomicNumber._make(F, out, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> CyclotomicNumber:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in cyclotomic field")
        F = self.field
        # extended Euclid: s*a + t*Phi = g, g a nonzero constant
        r0, r1 = list(F.minimal_poly), _trim(list(self.coords))
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while len(r1) > 1 or r1[0] == 0:
            if r1 == [0]:
                raise ZeroDivisionError("non-invertible element")  # cannot happen in a field
            quo, rem = _poly_divmod(r0, r1)
            prod = _poly_mul(quo, s1)
            s_next = [
                (s0[i] if i < len(s0) else 0) - (prod[i] if i < len(prod) else 0)
                for i in range(max(len(s0), len(prod)))
            ]
            r0, r1 = r1, rem
            s0, s1 = s1, _trim(s_next)
        c = r1[0]
        _, s = _poly_divmod([x / c for x in s1], F.minimal_poly)
        s = s + [Fraction(0)] * (F.degree - len(s))
        return CyclotomicNumber(F, s[: F.degree])

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = self.field.one
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field(other)
        if not isinstance(other, CyclotomicNumber):
            return NotImplemented
        return self.field.n == other.field.n and self.den == other.den and self.num == other.num

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field.n, self.num, self.den))
        return self._hash

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"CyclotomicNumber(n={self.field.n}, {format_cyc(self)})"

    def __str__(self):
        return format_cyc(self)

    def to_json(self) -> dict:
        return {"n": self.field.n, "coords": [_frac_str(c) for c in self.coords]}

    @classmethod
    def from_json(cls, data: dict) -> CyclotomicNumber:
        F = cyclotomic_field(int(data["n"]))
        return cls(F, [parse_fraction(c) for c in data["coords"]])


def _frac_str(c: Fraction) -> str:
    return f"{c.numerator}/{c.denominator}"


def parse_fraction(s) -> Fraction:
    if isinstance(s, int):
        return Fraction(s)
    if not isinstance(s, str):
        raise ValueError(f"expected fraction string, got {s!r}")
    return Fraction(s.strip())


def format_cyc(a: CyclotomicNumber, symbol: str = "q") -> str:
    terms = []
    for i, c in enumerate(a.coords):
        if c == 0:
            continue
        mono = "" if i == 0 else (symbol if i == 1 else f"{symbol}^{i}")
        if not mono:
            terms.append(str(c))
        elif c == 1:
            terms.append(mono)
        elif c == -1:
            terms.append("-" + mono)
        else:
            terms.append(f"{c}*{mono}")
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        out += " - " + t[1:] if t.startswith("-") else " + " + t
    return out


def embed(a: CyclotomicNumber, target: CyclotomicField) -> CyclotomicNumber:
    """Map Q(zeta_n) into Q(zeta_m) for n | m, sending zeta_n to zeta_m^(m/n)."""
    n, m = a.field.n, target.n
    if n == m:
        return a
    if m % n:
        raise FieldMismatch(f"Q(zeta_{n}) does not embed in Q(zeta_{m})")
    step = m // n
    out = target.zero
    for i, c in enumerate(a.coords):
        if c:
            out = out + target.q_power(i * step) * c
    return out


# functional aliases
def cyc_add(a: CyclotomicNumber, b: CyclotomicNumber) -> CyclotomicNumber:
    return a + a._coerce(b)


def cyc_mul(a: CyclotomicNumber, b: CyclotomicNumber) -> CyclotomicNumber:
    return a * a._coerce(b)


def cyc_neg(a: CyclotomicNumber) -> CyclotomicNumber:
    return -a


def cyc_inv(a: CyclotomicNumber) -> CyclotomicNumber:
    return a.inverse()
