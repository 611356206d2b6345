"""Quotients of H(n): dimensions, bases, identities, characters, caching."""

import random

import pytest

from symhecke import coxeter as cx
from symhecke import quotient as qt
from symhecke.combinat import bratteli, closed_form_dim
from symhecke.coxeter import ell0, length
from symhecke.hecke import Ambient, X_MQ, X_Q, gen, one, quasi_idempotent, symmetriser, tilde_E, e_gen
from symhecke.ring import CQ, MOD_P, R_FULL, a1, a2, ck_q, eval_mod_p, mono, specialise
from symhecke.ring import q as q_

Q0 = 918273645  # generic evaluation point for q


def _ctx(spec):
    return qt.build_context(spec)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_A_dims_and_basis(n):
    ctx = _ctx(qt.spec_A(n))
    assert ctx.dim == closed_form_dim("A", n) == len(cx.enumerate_signed(n, cx.Pattern.ONEBAR_TWOBAR))
    assert ctx.pivots_disjoint


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_C2_dims_and_basis(n):
    for spec in (qt.spec_C(n, 2), qt.spec_C2_presentation(n)):
        ctx = _ctx(spec)
        assert ctx.dim == closed_form_dim("C2", n) == closed_form_dim("C", n, N=2)
        assert ctx.pivots_disjoint


def test_C3_dimension_without_basis_claim():
    # only the dimension is predicted for N = 3; collisions are expected and recorded
    ctx = _ctx(qt.spec_C(3, 3))
    assert ctx.dim == closed_form_dim("C", 3, N=3)
    assert not ctx.spec.claims_basis
    assert ctx.collisions


@pytest.mark.parametrize("k,n", [(1, 2), (1, 3), (2, 2), (2, 3), (3, 3), (2, 4)])
def test_AK_dims(k, n):
    ctx = _ctx(qt.spec_AK(n, k))
    assert ctx.dim == closed_form_dim("fused", n, k=k)
    assert ctx.pivots_disjoint


@pytest.mark.parametrize("k,n", [(1, 2), (1, 3), (2, 3), (2, 4)])
def test_CK_dims(k, n):
    for variant in ("tilde", "eprime"):
        ctx = _ctx(qt.spec_CK(n, 2, k, variant))
        assert ctx.dim == closed_form_dim("seam", n, k=k)
        assert ctx.pivots_disjoint


def test_quotient_identities():
    ctx = _ctx(qt.spec_C(3, 2))
    amb = ctx.ambient
    # killed generators reduce to zero
    assert qt.verify_identity_in_quotient(ctx, quasi_idempotent(Ambient("B", 2), 2, X_MQ, 2).embed(amb), 0)[0]
    assert qt.verify_identity_in_quotient(ctx, tilde_E("A_minusq_alpha1", Ambient("B", 2), 2).embed(amb), 0)[0]
    # the redundant Lambda_3 generator is implied by the others
    assert qt.verify_identity_in_quotient(ctx, symmetriser(amb, X_MQ, 1, 2), 0)[0]
    # the top quasi-idempotents survive
    for b in (1, 2):
        ok, wit = qt.verify_identity_in_quotient(ctx, quasi_idempotent(amb, 3, X_Q, b), 0)
        assert not ok and wit.terms
    # and the presentation relation holds
    g0, g1 = gen(amb, 0), gen(amb, 1)
    rhs = (one(amb) * q_ - g1) * (q_ * (a1 + a2)) - g0 * (q_ * q_) + (g0 * g1 + g1 * g0) * q_
    assert qt.verify_identity_in_quotient(ctx, g1 * g0 * g1, rhs)[0]


@pytest.mark.parametrize("spec", [qt.spec_A(3), qt.spec_C(3, 2), qt.spec_AK(3, 2), qt.spec_CK(3, 2, 1)],
                         ids=lambda s: s.name)
def test_structure_constants(spec):
    ctx = _ctx(spec)
    sc = qt.structure_constants(ctx)
    assert qt.coefficients_in(sc, spec.domain)
    rng = random.Random(1)
    basis = ctx.basis
    triples = [tuple(rng.choice(basis) for _ in range(3)) for _ in range(40)]
    assert qt.check_associativity(ctx, sc, triples)
    e = cx.identity(spec.n)
    assert all(sc[(e, v)] == {v: 1} for v in basis)


def test_structure_constants_integral_over_R():
    ctx = _ctx(qt.spec_A(3))
    assert ctx.spec.domain is R_FULL
    assert qt.coefficients_in(qt.structure_constants(ctx), R_FULL)


def test_cache_round_trip(tmp_path):
    spec = qt.spec_AK(3, 1)
    first = qt.build_context(spec, cache_dir=str(tmp_path))
    assert list(tmp_path.iterdir())
    second = qt.build_context(spec, cache_dir=str(tmp_path))
    assert second.closed and second.basis == first.basis
    assert second.eb.rows == first.eb.rows
    # a different spec does not pick up the cached rows
    other = qt.QuotientContext(qt.spec_AK(3, 2))
    assert not other.load(next(tmp_path.iterdir()))


# one-dimensional characters: g0 -> a, g_i -> x kills the ideal iff it vanishes on every row

def _char_kills(ctx, a, x):
    k = ctx.ambient.k
    av = eval_mod_p(specialise(a, k), (Q0, 0, 0))
    xv = eval_mod_p(x, (Q0, 0, 0))
    for row in ctx.eb.rows.values():
        tot = 0
        for w, c in row.items():
            l0 = ell0(w)
            tot += eval_mod_p(c, (Q0, 0, 0)) * pow(av, l0, MOD_P) * pow(xv, length(w) - l0, MOD_P)
        if tot % MOD_P:
            return False
    return True


@pytest.mark.parametrize("k,n", [(2, 2), (3, 2), (3, 3), (1, 2), (1, 3), (2, 3), (2, 4)])
def test_one_dimensional_characters(k, n):
    ctx = _ctx(qt.spec_AK(n, k))
    alive = {(name_a, name_x) for name_a, a in (("a1", a1), ("a2", a2))
             for name_x, x in (("q", X_Q), ("-q^-1", X_MQ)) if _char_kills(ctx, a, x)}
    expected = {("a2", "q"), ("a1", "-q^-1")}
    if n <= k:
        expected.add(("a1", "q"))
    assert alive == expected
    # the count agrees with the one-dimensional nodes of the Bratteli diagram
    d = bratteli("fused", n, k=k)
    assert len(alive) == sum(1 for node in d.levels[n] if d.dims[n][node] == 1)


def test_u_factor_first_case():
    amb = Ambient("B", 1)
    u = qt.u_factor(amb, 0)
    assert u == e_gen(amb, 0) * mono(0, 0, -1)


def test_conjecture_small_k():
    for k in (1, 2):
        assert qt.conjecture_check(k)["status"] == "divisibility-holds"


def test_eprime_domain():
    for k in (1, 2):
        e = qt.eprime(k)
        assert e.in_domain(CQ) and e.in_domain(ck_q(k))
