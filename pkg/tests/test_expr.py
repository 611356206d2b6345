"""Expression parsing, evaluation and round-tripping."""

import pytest
from hypothesis import given, settings, strategies as st

from symhecke import coxeter as cx
from symhecke.expr import FusedAlgebra, HeckeAlgebra, ParseError, evaluate, parse, serialize
from symhecke.fused import FusedContext
from symhecke.hecke import Ambient, HeckeElement, basis_element, gen, one, quasi_idempotent, X_Q
from symhecke.quotient import build_context, spec_A
from symhecke.ring import a1, a2, inverse, mono, q


B2 = Ambient("B", 2)


@pytest.mark.parametrize("src,pos", [
    ("g0 + * g1", 5),
    ("g0 +", 4),
    ("(g0", 3),
    ("g0 $ g1", 3),
    ("E(2, q)", 0),
    ("g7", 0),
    ("g0^-1", 2),
    ("g0 / g1", 3),
    ("foo(1)", 0),
])
def test_parse_errors_report_positions(src, pos):
    with pytest.raises(ParseError) as info:
        evaluate(src, HeckeAlgebra(B2))
    assert info.value.pos == pos
    assert f"at position {pos}" in str(info.value)


def test_arithmetic_matches_direct_construction():
    alg = HeckeAlgebra(B2)
    g0, g1 = gen(B2, 0), gen(B2, 1)
    assert evaluate("g0*g1 - 2*g1*g0 + q^-1", alg) == g0 * g1 - g1 * g0 * 2 + one(B2) * inverse(q)
    assert evaluate("(g0 + a1)^2", alg) == (g0 + one(B2) * a1) * (g0 + one(B2) * a1)
    assert evaluate("g1/(q + q^-1)", alg) == g1 * inverse(q + inverse(q))
    assert evaluate("E(2, q, 1)", alg) == quasi_idempotent(B2, 2, X_Q, 1)
    assert evaluate("-g0", alg) == -g0
    assert evaluate("e1", alg) == one(B2) * q - g1
    assert evaluate("e0", alg) == one(B2) * a2 - g0
    assert evaluate("a1*a2", alg) == one(B2) * (a1 * a2)


def test_quotient_evaluation():
    ctx = build_context(spec_A(2))
    alg = HeckeAlgebra(B2, ctx)
    assert evaluate("E(2, -q^-1, 2)", alg) == HeckeElement(B2, {})


def test_fused_evaluation():
    ctx = FusedContext(2, 1)
    alg = FusedAlgebra(ctx)
    assert evaluate("T", alg) == ctx.T()
    assert evaluate("g0", alg) == ctx.S(0)
    assert evaluate("S0 - P(2)", alg) == ctx.S(0) - ctx.P()
    assert evaluate("1", alg) == ctx.P()
    with pytest.raises(ParseError):
        evaluate("P(3)", alg)


@st.composite
def hecke_elements(draw):
    n = draw(st.integers(1, 3))
    amb = Ambient("B", n)
    ws = cx.enumerate_signed(n)
    e = HeckeElement(amb, {})
    for _ in range(draw(st.integers(0, 4))):
        w = draw(st.sampled_from(ws))
        c = mono(draw(st.integers(-3, 3)), draw(st.integers(-2, 2)), draw(st.integers(-2, 2)),
                 draw(st.integers(-5, 5)))
        if draw(st.booleans()):
            c = c * inverse(1 + q * q)
        e = e + basis_element(amb, w) * c
    return e


@given(hecke_elements())
@settings(max_examples=60, deadline=None)
def test_hecke_round_trip(e):
    assert evaluate(serialize(e), HeckeAlgebra(e.ambient)) == e


@pytest.mark.parametrize("k,n", [(1, 1), (2, 1), (2, 2), (3, 2)])
def test_fused_round_trip(k, n):
    ctx = FusedContext(k, n)
    alg = FusedAlgebra(ctx)
    x = ctx.T() * ctx.T() + ctx.P() * q
    if n >= 2:
        x = x * ctx.S(1) + ctx.S(0) * ctx.S(1) * ctx.S(0)
    assert evaluate(serialize(x), alg) == x


def test_parse_tree():
    node = parse("2*g0 + q^-1")
    assert node.kind == "add"
