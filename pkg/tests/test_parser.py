from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qgda.parser import (
    Call,
    Neg,
    Num,
    ParseError,
    Pow,
    Prod,
    QScalar,
    Sum,
    Sym,
    normalize,
    parse,
    pretty,
)

CORPUS = [
    "x", "q", "t", "1", "3/4", "x^2", "x^-1", "-x", "--x", "-x^2",
    "x + y", "x - y", "x - (y - z)", "(x - y) - z", "x*y*z", "x*(y*z)", "(x + 1)*(x - 1)",
    "q*t", "d(x^2) + q*t", "d(d(x))", "d(x)*d(x)", "Delta(x)", "Delta(x^2) - (1 - q)*x",
    "phi(x, 1)", "phi(x^2, 2)", "phi(x, -1)", "der(x^2, x)", "der(x^2, x^2)", "der(x, 2*x)",
    "P(2)", "Q(3)", "Phi(1)", "P(3) - 0", "(x)", "((x))", "2*(3*x)", "(2*3)*x",
    "-(x + y)", "-(x*y)", "(-x)^2", "(x^2)^3", "x^0", "t^3 - 1", "t*x - q*x*t",
    "1/2*x + 3/2", "(1 + q + q^2)*x", "d(t*x)^2", "der(x, x)*x", "q^2 + q + 1",
    "j*j + 1", "i*j - k",
]


def test_corpus_size():
    assert len(CORPUS) >= 50


def test_example_tree():
    assert parse("d(x^2) + q*t") == Sum(Call("d", (Pow(Sym("x"), 2),)), Prod(QScalar(), Sym("t")))


def test_precedence():
    assert parse("-x^2") == Neg(Pow(Sym("x"), 2))
    assert parse("1 + 2*3") == Sum(Num(Fraction(1)), Prod(Num(Fraction(2)), Num(Fraction(3))))
    assert parse("x^-2") == Pow(Sym("x"), -2)


@pytest.mark.parametrize("src", CORPUS)
def test_round_trip(src):
    tree = parse(src)
    assert parse(pretty(tree)) == tree
    assert normalize(pretty(tree)) == normalize(src) == pretty(tree)


@pytest.mark.parametrize("src, pos", [
    ("x^", 2),
    ("", 0),
    ("x +", 3),
    ("(x", 2),
    ("x y", 2),
    ("d(x", 3),
    ("x^1/2", 2),
    ("x $ y", 2),
    ("1/0", 0),
    ("f(,)", 2),
])
def test_errors_carry_position(src, pos):
    with pytest.raises(ParseError) as info:
        parse(src)
    assert info.value.position == pos


def test_error_expected_set():
    with pytest.raises(ParseError) as info:
        parse("x^")
    assert "integer" in info.value.expected


def test_deep_nesting_is_an_error_not_a_crash():
    with pytest.raises(ParseError):
        parse("(" * 5000 + "x" + ")" * 5000)
    with pytest.raises(ParseError):
        parse("-" * 5000 + "x")


def test_huge_literal_rejected():
    with pytest.raises(ParseError):
        parse("9" * 5000)


@given(st.text(alphabet="xqtd()+-*^/,0123456789 PQ", max_size=40))
def test_parse_is_total(src):
    try:
        tree = parse(src)
    except ParseError as exc:
        assert 0 <= exc.position <= len(src)
    else:
        assert parse(pretty(tree)) == tree
