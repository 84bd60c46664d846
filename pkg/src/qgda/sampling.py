"""Random exact elements with small coefficients (|num| <= 9, den <= 4)."""
from __future__ import annotations

import random
from fractions import Fraction

from .basealg import BaseAlgebra, BaseElement
from .exactnum import CyclotomicField, CyclotomicNumber
from .extension import ExtAlgebra, ExtElement


def random_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-9, 9), rng.randint(1, 4))


def random_cyc(F: CyclotomicField, rng: random.Random, nonzero: bool = False) -> CyclotomicNumber:
    while True:
        c = CyclotomicNumber(F, [random_rational(rng) for _ in range(F.degree)])
        if not (nonzero and c.is_zero()):
            return c


def random_base(A: BaseAlgebra, rng: random.Random, density: float = 0.7) -> BaseElement:
    F = A.field
    return BaseElement(
        A, tuple(random_cyc(F, rng) if rng.random() < density else F.zero for _ in range(A.dim))
    )


def random_ext(E: ExtAlgebra, rng: random.Random, density: float = 0.7) -> ExtElement:
    return ExtElement(E, tuple(random_base(E.base, rng, density) for _ in range(E.n)))


def random_homogeneous(E: ExtAlgebra, rng: random.Random, k: int | None = None) -> ExtElement:
    if k is None:
        k = rng.randrange(E.n)
    return E.from_base(random_base(E.base, rng), k)
