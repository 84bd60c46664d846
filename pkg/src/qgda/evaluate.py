"""Evaluation of parsed expressions in a session (algebra + coordinate)."""
from __future__ import annotations

from dataclasses import dataclass, field

from .basealg import BaseElement, NotInvertible, base_inverse, twist
from .calculus import (
    Basis,
    Coordinate,
    KForm,
    delta,
    derivative,
    form_from_ext,
    make_coordinate,
    poly_P,
    poly_Phi,
    poly_Q,
)
from .extension import ExtAlgebra, ExtElement, NotHomogeneous, differential
from .instances import default_coordinate, generator_symbols
from .parser import Call, Diff, Expr, Neg, Num, Pow, Prod, QScalar, Sum, Sym, parse

MAX_EXPONENT = 4096


class EvalError(Exception):
    pass


@dataclass
class Session:
    ext: ExtAlgebra
    coordinate: Coordinate | None = None
    fmt: str = "text"
    basis: Basis = Basis.TAU
    _symbols: dict = field(default_factory=dict, repr=False)
    _coords: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self._symbols = generator_symbols(self.ext)

    @classmethod
    def open(cls, ext: ExtAlgebra, coordinate: str | None = None, fmt: str = "text",
             basis: Basis = Basis.TAU) -> Session:
        s = cls(ext, None, fmt, basis)
        if coordinate is None:
            try:
                s.coordinate = default_coordinate(ext)
            except NotInvertible:
                s.coordinate = None
        else:
            x = s.base_value(evaluate(parse(coordinate), s), "coordinate")
            s.coordinate = s.coordinate_for(x)
        return s

    def symbol(self, name: str) -> ExtElement:
        if name not in self._symbols:
            known = ", ".join(sorted(self._symbols))
            raise EvalError(f"unknown symbol {name!r} (known: q, {known})")
        return self._symbols[name]

    def coordinate_for(self, x: BaseElement) -> Coordinate:
        key = x.coords
        if key not in self._coords:
            try:
                self._coords[key] = make_coordinate(self.ext, x)
            except NotInvertible as exc:
                raise EvalError(str(exc)) from None
        return self._coords[key]

    def require_coordinate(self) -> Coordinate:
        if self.coordinate is None:
            raise EvalError("no coordinate: pass -x with an element whose Delta is invertible")
        return self.coordinate

    def base_value(self, xi: ExtElement, what: str) -> BaseElement:
        if any(not p.is_zero() for p in xi.parts[1:]):
            raise EvalError(f"{what} must be an element of the base algebra (degree 0), got {xi}")
        return xi.parts[0]


def _int_arg(e: Expr, fname: str) -> int:
    if isinstance(e, Num) and e.value.denominator == 1:
        return int(e.value)
    if isinstance(e, Neg) and isinstance(e.operand, Num) and e.operand.value.denominator == 1:
        return -int(e.operand.value)
    raise EvalError(f"{fname} expects an integer literal argument")


_ARITY = {"d": 1, "Delta": 1, "phi": 2, "der": 2, "P": 1, "Q": 1, "Phi": 1}


def _call(e: Call, s: Session) -> ExtElement:
    E = s.ext
    if e.name not in _ARITY:
        raise EvalError(f"unknown function {e.name!r} (known: {', '.join(_ARITY)})")
    if len(e.args) != _ARITY[e.name]:
        raise EvalError(f"{e.name} takes {_ARITY[e.name]} argument(s), got {len(e.args)}")
    if e.name == "d":
        return differential(evaluate(e.args[0], s))
    if e.name == "Delta":
        return E.from_base(delta(s.base_value(evaluate(e.args[0], s), "argument of Delta")))
    if e.name == "phi":
        u = s.base_value(evaluate(e.args[0], s), "argument of phi")
        return E.from_base(twist(u, _int_arg(e.args[1], "phi")))
    if e.name == "der":
        u = s.base_value(evaluate(e.args[0], s), "argument of der")
        c = s.coordinate_for(s.base_value(evaluate(e.args[1], s), "coordinate of der"))
        return E.from_base(derivative(u, c))
    k = _int_arg(e.args[0], e.name)
    c = s.require_coordinate()
    fn = {"P": poly_P, "Q": poly_Q, "Phi": poly_Phi}[e.name]
    try:
        return E.from_base(fn(k, c))
    except ValueError as exc:
        raise EvalError(str(exc)) from None


def evaluate(e: Expr, s: Session) -> ExtElement:
    E = s.ext
    try:
        if isinstance(e, Num):
            return E.one() * e.value
        if isinstance(e, QScalar):
            return E.one() * E.q
        if isinstance(e, Sym):
            return s.symbol(e.name)
        if isinstance(e, Sum):
            return evaluate(e.left, s) + evaluate(e.right, s)
        if isinstance(e, Diff):
            return evaluate(e.left, s) - evaluate(e.right, s)
        if isinstance(e, Prod):
            return evaluate(e.left, s) * evaluate(e.right, s)
        if isinstance(e, Neg):
            return -evaluate(e.operand, s)
        if isinstance(e, Pow):
            if abs(e.exponent) > MAX_EXPONENT:
                raise EvalError(f"exponent {e.exponent} exceeds {MAX_EXPONENT}")
            base = evaluate(e.base, s)
            if e.exponent >= 0:
                return base ** e.exponent
            u = s.base_value(base, "base of a negative power")
            return E.from_base(base_inverse(u) ** -e.exponent)
        if isinstance(e, Call):
            return _call(e, s)
    except (NotInvertible, NotHomogeneous, ZeroDivisionError) as exc:
        raise EvalError(str(exc)) from None
    raise EvalError(f"cannot evaluate {e!r}")


def evaluate_source(src: str, s: Session) -> ExtElement | KForm:
    """Parse and evaluate; in dx-basis sessions homogeneous results come back as KForms."""
    xi = evaluate(parse(src), s)
    if s.basis is Basis.DX:
        try:
            return form_from_ext(xi, s.require_coordinate(), Basis.DX)
        except NotHomogeneous:
            return xi
    return xi
