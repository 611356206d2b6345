"""A closed registry of checkable claims with exact pass/fail reports.

Each claim takes keyword parameters, runs exact computations and returns a
VerificationReport.  A falsified report always names the failing check.

>>> r = run_verification("HB.quasi_idem", {"n": 2})
>>> r.status
'verified'
>>> run_verification("AK.conj", {"k": 1}).status
'divisibility-holds'
"""

from __future__ import annotations

import inspect
import time
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional

from . import coxeter as cx
from .combinat import bratteli, closed_form_dim
from .coxeter import Pattern
from .fused import FusedContext, FusedElement, centraliser_relation_elements, fused_quotient_dim, verify_isomorphism
from .hecke import (
    Ambient,
    E_factored,
    E_recursive,
    E_recursive_field,
    X_MQ,
    X_Q,
    check_central_quasi_idempotent,
    e_gen,
    gen,
    one,
    quasi_idempotent,
    symmetriser,
    tilde_E,
    to_json,
)
from .quotient import (
    DivisibilityError,
    QuotientSpec,
    build_context,
    coefficients_in,
    conjecture_check,
    eprime,
    spec_A,
    spec_AK,
    spec_AK_conj,
    spec_C,
    spec_C2_presentation,
    spec_CK,
    structure_constants,
    u_factor,
    verify_identity_in_quotient,
)
from .ring import CQ, R_FULL, a1, a2, inverse, mono, q, quantum_factorial, quantum_int

__all__ = [
    "CLAIMS",
    "VerificationReport",
    "BoundsError",
    "run_verification",
    "default_params",
]

MAX_N = 4
MAX_K = 3
MAX_KN = 6


class BoundsError(ValueError):
    pass


@dataclass
class VerificationReport:
    claim: str
    params: Dict[str, object]
    status: str
    witness: Optional[str] = None
    seconds: float = 0.0
    details: Dict[str, object] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.status in ("verified", "divisibility-holds", "divisibility-fails")

    def to_json(self) -> dict:
        return {
            "claim": self.claim,
            "params": self.params,
            "status": self.status,
            "witness": self.witness,
            "seconds": round(self.seconds, 3),
            "details": self.details,
        }


class _Checks:
    """Named boolean checks; the first failure becomes the witness."""

    def __init__(self):
        self.results: Dict[str, bool] = {}
        self.witness: Optional[str] = None

    def add(self, name: str, ok: bool, witness: object = None):
        self.results[name] = bool(ok)
        if not ok and self.witness is None:
            self.witness = name if witness is None else f"{name}: {witness}"

    @property
    def ok(self) -> bool:
        return all(self.results.values())


def _bound(name: str, value: int, lo: int, hi: int):
    if not lo <= value <= hi:
        raise BoundsError(f"{name}={value} outside [{lo}, {hi}]")


def _bound_kn(k: int, n: int, max_n: int = MAX_N):
    _bound("k", k, 1, MAX_K)
    _bound("n", n, 0, max_n)
    if k + n > MAX_KN:
        raise BoundsError(f"k+n={k + n} exceeds {MAX_KN}")


_PAIRS = ((X_Q, 1), (X_Q, 2), (X_MQ, 1), (X_MQ, 2))


def _xname(x) -> str:
    return "q" if x == X_Q else "-q^-1"


# ----------------------------------------------------------------------
# H(n)


def _hb_quasi_idem(ch: _Checks, n: int):
    _bound("n", n, 1, MAX_N)
    amb = Ambient("B", n)
    for x, b in _PAIRS:
        E = quasi_idempotent(amb, n, x, b)
        for name, ok in check_central_quasi_idempotent(E, x, b, n).items():
            ch.add(f"E_{n}^({_xname(x)},a{b}): {name}", ok)


def _hb_consistency(ch: _Checks, n: int):
    _bound("n", n, 1, MAX_N)
    amb = Ambient("B", n)
    for x, b in _PAIRS:
        E = quasi_idempotent(amb, n, x, b)
        tag = f"({_xname(x)},a{b})"
        ch.add(f"sum = coset recursion {tag}", E == E_recursive(amb, n, x, b))
        ch.add(f"sum = symmetriser product {tag}", E == E_factored(amb, n, x, b))
        if n <= 3:
            ch.add(f"sum = field recursion {tag}", E == E_recursive_field(amb, n, x, b))


# ----------------------------------------------------------------------
# A_n and C_{n,2}


def _quotient_basis_checks(ch: _Checks, ctx, integrality: bool, dom=R_FULL):
    spec = ctx.spec
    ch.add("dimension", ctx.dim == spec.expected_dim, f"{ctx.dim} != {spec.expected_dim}")
    if spec.claims_basis:
        ch.add("pattern-avoiding elements form the basis", ctx.pivots_disjoint,
               f"collisions {[cx.window_str(w) for w in ctx.collisions[:3]]}")
    if integrality:
        sc = structure_constants(ctx)
        ch.add(f"structure constants in {dom}", coefficients_in(sc, dom))


def _a_basis(ch: _Checks, n: int):
    _bound("n", n, 0, MAX_N)
    ctx = build_context(spec_A(n))
    _quotient_basis_checks(ch, ctx, integrality=n <= 3)
    if n >= 2:
        amb = ctx.ambient
        g0, g1 = gen(amb, 0), gen(amb, 1)
        rhs = (one(amb) * (-(q * q) * a1 * a1) + g1 * (q * a1 * a1) + g0 * (q * q * a1)
               - (g1 * g0 + g0 * g1) * (q * a1) + g1 * g0 * g1 * a1 + g0 * g1 * g0 * q)
        ok, w = verify_identity_in_quotient(ctx, g0 * g1 * g0 * g1, rhs)
        ch.add("g0g1g0g1 rewriting rule", ok, w)


def _a_renorm(ch: _Checks, n: int):
    _bound("n", n, 2, MAX_N)
    ctx = build_context(spec_A(n))
    amb = ctx.ambient
    E1 = quasi_idempotent(amb, n, X_MQ, 1)
    c1 = inverse(a2)
    for i in range(n - 1):
        c1 = c1 * (1 - a1 * inverse(a2) * mono(-2 * i))
    ok, w = verify_identity_in_quotient(ctx, E1, tilde_E("A_minusq_alpha1", amb, n) * c1)
    ch.add("E^(-q^-1,a1) renormalisation", ok, w)
    E2 = quasi_idempotent(amb, n, X_Q, 2)
    c2 = mono(n * (n - 1) // 2) * quantum_factorial(n)
    ok, w = verify_identity_in_quotient(ctx, E2, tilde_E("A_q_alpha2", amb, n) * c2)
    ch.add("E^(q,a2) renormalisation", ok, w)
    ok, w = verify_identity_in_quotient(ctx, quasi_idempotent(amb, n, X_MQ, 2), 0)
    ch.add("E^(-q^-1,a2) vanishes", ok, w)


def _c2_basis(ch: _Checks, n: int):
    _bound("n", n, 0, MAX_N)
    ctx = build_context(spec_C(n, 2))
    _quotient_basis_checks(ch, ctx, integrality=n <= 3)


def _c2_presentation(ch: _Checks, n: int):
    _bound("n", n, 0, MAX_N)
    full = build_context(spec_C(n, 2))
    short = build_context(spec_C2_presentation(n))
    ch.add("dimensions agree", full.dim == short.dim == closed_form_dim("C2", n), f"{full.dim}, {short.dim}")
    for i, K in enumerate(short.spec.killed):
        ok, w = verify_identity_in_quotient(full, K, 0)
        ch.add(f"short relation {i} holds in the quotient", ok, w)
    for i, K in enumerate(full.spec.killed):
        ok, w = verify_identity_in_quotient(short, K, 0)
        ch.add(f"defining relation {i} holds in the presented algebra", ok, w)
    # blob algebra relations for e_0 = a2 - g0, e_i = q - g_i
    amb = full.ambient
    e = [e_gen(amb, i) for i in range(n)]
    qq = q + inverse(q)
    for i in range(1, n):
        ch.add(f"e{i}^2", verify_identity_in_quotient(full, e[i] * e[i], e[i] * qq)[0])
    if n >= 1:
        ch.add("e0^2", verify_identity_in_quotient(full, e[0] * e[0], e[0] * (a2 - a1))[0])
    if n >= 2:
        ch.add("e1e0e1", verify_identity_in_quotient(full, e[1] * e[0] * e[1], e[1] * (inverse(q) * a2 - q * a1))[0])
    for i in range(1, n - 1):
        ch.add(f"e{i}e{i + 1}e{i}", verify_identity_in_quotient(full, e[i] * e[i + 1] * e[i], e[i])[0])
        ch.add(f"e{i + 1}e{i}e{i + 1}", verify_identity_in_quotient(full, e[i + 1] * e[i] * e[i + 1], e[i + 1])[0])


def _c2_renorm(ch: _Checks, n: int):
    _bound("n", n, 2, MAX_N)
    ctx = build_context(spec_C(n, 2))
    amb = ctx.ambient
    c = mono(n * (n - 1) // 2) * quantum_factorial(n)
    for b in (1, 2):
        ok, w = verify_identity_in_quotient(ctx, quasi_idempotent(amb, n, X_Q, b),
                                            tilde_E("C2_q_alphab", amb, n, b) * c)
        ch.add(f"E^(q,a{b}) renormalisation", ok, w)
    for b in (1, 2):
        ok, w = verify_identity_in_quotient(ctx, quasi_idempotent(amb, n, X_MQ, b), 0)
        ch.add(f"E^(-q^-1,a{b}) vanishes", ok, w)


# ----------------------------------------------------------------------
# A_n^(k)


def _ak_span(ch: _Checks, n: int):
    _bound("n", n, 1, MAX_N)
    ctx = build_context(spec_A(n))
    E = ctx.reduce(quasi_idempotent(ctx.ambient, n, X_Q, 1))
    top = cx.longest_top(n)
    want = (-1) ** n * inverse(a2) ** n * mono(n * (n - 1)) * quantum_factorial(n)
    got = E.coeff(top)
    ch.add("coefficient of the top basis element", got == want, f"{got} != {want}")
    others = [w for w in E.terms if cx.ell0(w) == n and w != top]
    ch.add("top element is the only one with l0 = n", not others)


def _ak_basis(ch: _Checks, k: int, n: int):
    _bound_kn(k, n)
    ctx = build_context(spec_AK(n, k))
    _quotient_basis_checks(ch, ctx, integrality=False)


def _ak_conj(ch: _Checks, k: int, details: Dict) -> Optional[str]:
    _bound("k", k, 1, MAX_K)
    # the [k+1]_q factor is a theorem; a failure here is a falsification
    try:
        eprime(k)
        ch.add("[k+1]_q divides E_(k+1)^(q,a1)", True)
    except DivisibilityError as exc:
        ch.add("[k+1]_q divides E_(k+1)^(q,a1)", False, exc)
        return None
    res = conjecture_check(k)
    details["divisor"] = f"[{k + 1}]_q!"
    if res["status"] == "divisibility-holds":
        details["element"] = to_json(res["element"])
        # the variant quotient has the predicted dimension when the relation is in force
        ctx = build_context(spec_AK_conj(k + 1, k))
        ch.add("quotient by the divided element has the fused dimension", ctx.dim == ctx.spec.expected_dim,
               f"{ctx.dim} != {ctx.spec.expected_dim}")
    else:
        details["witness_word"] = res["witness"]
        details["coefficient"] = res["coeff"]
    return res["status"]


# ----------------------------------------------------------------------
# H_{k,n}


def _fh_dim(ch: _Checks, k: int, n: int):
    _bound_kn(k, n)
    ctx = FusedContext(k, n)
    want = closed_form_dim("fused", n, k=k)
    count = len(cx.enumerate_signed(n, Pattern.BARS_DESC_LIMIT, k))
    sq = bratteli("fused", n, k=k).level_dim(n)
    ch.add("double cosets", len(ctx.reps) == want, f"{len(ctx.reps)} != {want}")
    ch.add("pattern count", count == want, f"{count} != {want}")
    ch.add("sum of squares", sq == want, f"{sq} != {want}")


def _fh_scalars(k: int):
    return quantum_int(k), inverse(quantum_int(k))


def _fh_S0(ch: _Checks, k: int, n: int):
    _bound_kn(k, n, 2)
    _bound("n", n, 1, 2)
    ctx = FusedContext(k, n)
    S0, P = ctx.S(0), ctx.P()
    zero = FusedElement(ctx, {})
    ch.add("(S0 - q^2k P)(S0 - q^-2 P) = 0", (S0 - P * mono(2 * k)) * (S0 - P * mono(-2)) == zero)
    ch.add("S0 != q^2k P", S0 != P * mono(2 * k))
    ch.add("S0 != q^-2 P", S0 != P * mono(-2))


def _fh_ST(ch: _Checks, k: int, n: int):
    _bound_kn(k, n, 2)
    _bound("n", n, 1, 2)
    ctx = FusedContext(k, n)
    S0, T, P = ctx.S(0), ctx.T(), ctx.P()
    ch.add("S0 = (q-q^-1) q^(k-1) [k] T + P", S0 == T * ((q - inverse(q)) * mono(k - 1) * quantum_int(k)) + P)


def _fh_T(ch: _Checks, k: int, n: int):
    _bound_kn(k, n, 2)
    _bound("n", n, 1, 2)
    ctx = FusedContext(k, n)
    T, P = ctx.T(), ctx.P()
    _, kinv = _fh_scalars(k)
    zero = FusedElement(ctx, {})
    ch.add("(T - qP)(T + q^-k [k]^-1 P) = 0", (T - P * q) * (T + P * (mono(-k) * kinv)) == zero)
    ch.add("T^2 expansion", T * T == P * (mono(1 - k) * kinv) + T * (q - mono(-k) * kinv))


def _fh_TSTS(ch: _Checks, k: int, n: int):
    _bound_kn(k, n, 2)
    _bound("n", n, 2, 2)
    ctx = FusedContext(k, n)
    T, S1, S0, P = ctx.T(), ctx.S(1), ctx.S(0), ctx.P()
    c = mono(1 - k) * inverse(quantum_int(k))
    qi = inverse(q)
    ch.add("TS1TS1 - qTS1T", T * S1 * T * S1 - T * S1 * T * q == (S1 * T - S1 * T * S1 * qi) * c)
    ch.add("S1TS1T - qTS1T", S1 * T * S1 * T - T * S1 * T * q == (T * S1 - S1 * T * S1 * qi) * c)
    rhs = (P * (-mono(-2)) + S1 * mono(-3) + S0 - (S0 * S1 + S1 * S0) * qi
           + S1 * S0 * S1 * mono(-2) + S0 * S1 * S0 * q)
    ch.add("S0S1S0S1 rewriting rule", S0 * S1 * S0 * S1 == rhs)


def _phi_iso(ch: _Checks, k: int, n: int, details: Dict):
    _bound_kn(k, n)
    res = verify_isomorphism(k, n)
    ch.add("dimensions", res["dims_equal"], f"{res['dim_cosets']}, {res['dim_formula']}, {res['dim_designated']}")
    ch.add("generator images", res["phi_generators"])
    for name, ok in res["relations"].items():
        ch.add(f"relation {name}", ok)
    if "kills_E2" in res:
        ch.add("E_2^(-q^-1,a2) maps to 0", res["kills_E2"])
    if "kills_Eprime" in res:
        ch.add("E'_(k+1) maps to 0", res["kills_Eprime"])
    ch.add("images linearly independent", res["independent"], f"rank {res['image_rank']}")
    details["image_rank"] = res["image_rank"]
    details["dim"] = res["dim_formula"]


def _cnk_relations(ch: _Checks, k: int, n: int):
    _bound_kn(k, n)
    _bound("n", n, 2, MAX_N)
    ctx = FusedContext(k, n)
    first, second = centraliser_relation_elements(ctx, 2)
    Et = tilde_E("A_minusq_alpha1", Ambient("B", 2), 2)
    ch.add("phi(tildeE_2^(-q^-1,a1)) = (q^2k - 1) P L3 P", ctx.phi(Et) == first * (mono(2 * k) - 1))
    P, T, S1 = ctx.P(), ctx.T(), ctx.S(1)
    qi = inverse(q)
    expansion = P - T * qi - S1 * qi + (S1 * T + T * S1) * mono(-2) - S1 * T * S1 * mono(-3)
    ch.add("antisymmetriser expansion", first == expansion)
    g = ctx.S(0)
    t = (g - P) * inverse(mono(2 * k - 1) - qi)
    ch.add("phi(t) = T", t == T)
    if second is not None:
        L3 = symmetriser(Ambient("B", 3), X_MQ, 1, 2)
        ch.add("phi(L3(g1,g2)) = P L3(s_k+1, s_k+2) P", ctx.phi(L3) == second)
    dim, _ = fused_quotient_dim(ctx, [first, second])
    want = closed_form_dim("seam", n, k=k)
    ch.add("fused quotient dimension", dim == want, f"{dim} != {want}")
    if n <= 3:
        qctx = build_context(spec_CK(n, 2, k, "eprime"))
        ch.add("algebraic quotient dimension", qctx.dim == want, f"{qctx.dim} != {want}")


# ----------------------------------------------------------------------
# boundary seam algebra


def _u_product(amb: Ambient, k: int):
    out = one(amb)
    for m in range(k + 1):
        out = out * u_factor(amb, m)
    return out


def _seam_u(ch: _Checks, k: int):
    _bound("k", k, 1, 2)
    n = k + 1
    gen_ctx = build_context(spec_C(n, 2))
    amb = gen_ctx.ambient
    for m in range(1, n):
        lhs = tilde_E("C2_q_alphab", amb, m + 1, 1)
        rhs = tilde_E("C2_q_alphab", amb, m, 1) * u_factor(amb, m)
        ok, w = verify_identity_in_quotient(gen_ctx, lhs, rhs)
        ch.add(f"tildeE_{m + 1} = tildeE_{m} u_{m + 1}", ok, w)
    ctx = build_context(spec_C(n, 2, k))
    samb = ctx.ambient
    U = _u_product(samb, k)
    Et = tilde_E("C2_q_alphab", samb, n, 1)
    ok, w = verify_identity_in_quotient(ctx, U, Et)
    ch.add("u_1...u_(k+1) = tildeE_(k+1)", ok, w)
    c = mono(k * (k + 1) // 2) * quantum_factorial(k)
    ok, w = verify_identity_in_quotient(ctx, eprime(k).embed(samb), U * c)
    ch.add("E'_(k+1) = q^(k(k+1)/2) [k]! u_1...u_(k+1)", ok, w)
    # the two relations generate the same ideal
    base = spec_C(n, 2, k)
    with_u = QuotientSpec(f"CU{n}_{k}", n, base.killed + [U], Pattern.FC_TOP_LIMIT, pattern_k=k, k=k, domain=CQ)
    a = build_context(with_u)
    b = build_context(spec_CK(n, 2, k, "tilde"))
    ch.add("same quotient dimension", a.dim == b.dim == closed_form_dim("seam", n, k=k), f"{a.dim}, {b.dim}")
    ch.add("u relation holds in the tildeE quotient", verify_identity_in_quotient(b, U, 0)[0])
    ch.add("tildeE relation holds in the u quotient", verify_identity_in_quotient(a, Et, 0)[0])


def _seam_basis(ch: _Checks, k: int, n: int):
    _bound("k", k, 1, MAX_K)
    _bound("n", n, 0, MAX_N)
    ctx = build_context(spec_CK(n, 2, k, "tilde"))
    _quotient_basis_checks(ch, ctx, integrality=n <= 3, dom=CQ)


# ----------------------------------------------------------------------
# dimensions


_CROSS_FAMILIES = {"hb": "HB", "a": "A", "c2": "C2", "fused": "fused", "seam": "seam"}


def _cross_spec(family: str, n: int, k: Optional[int], N: Optional[int]) -> Optional[QuotientSpec]:
    if family == "A":
        return spec_A(n)
    if family == "C2":
        return spec_C(n, 2)
    if family == "C":
        return spec_C(n, N)
    if family == "fused":
        return spec_AK(n, k)
    if family == "seam":
        return spec_CK(n, 2, k, "tilde")
    return None


_CROSS_PATTERN = {
    "HB": (None, False),
    "A": (Pattern.ONEBAR_TWOBAR, False),
    "C2": (Pattern.FC_TOP, False),
    "fused": (Pattern.BARS_DESC_LIMIT, True),
    "seam": (Pattern.FC_TOP_LIMIT, True),
}


def _dim_cross(ch: _Checks, family: str, depth: int, k: Optional[int], N: Optional[int],
               quotient_depth: int, details: Dict):
    fam = family.lower()
    if fam in _CROSS_FAMILIES:
        fam = _CROSS_FAMILIES[fam]
    elif fam.startswith("c") and fam[1:].isdigit():
        N = int(fam[1:])
        fam = "C2" if N == 2 else "C"
    else:
        raise BoundsError(f"unknown family {family!r}")
    _bound("depth", depth, 0, 8)
    if fam in ("fused", "seam"):
        if k is None:
            raise BoundsError(f"family {fam} needs k")
        _bound("k", k, 1, 4)
    d = bratteli(fam, depth, k=k, N=N)
    series = [d.level_dim(n) for n in range(depth + 1)]
    closed = [closed_form_dim(fam, n, k=k, N=N) for n in range(depth + 1)]
    details["bratteli"] = series
    details["closed_form"] = closed
    ch.add("sum of squares = closed form", series == closed, f"{series} vs {closed}")
    if fam in _CROSS_PATTERN:
        pat, needs_k = _CROSS_PATTERN[fam]
        counts = [len(cx.enumerate_signed(n, pat, k if needs_k else None)) for n in range(min(depth, 6) + 1)]
        details["pattern_count"] = counts
        ch.add("pattern count = closed form", counts == closed[:len(counts)], f"{counts}")
    qd = min(depth, quotient_depth)
    ranks = []
    for n in range(qd + 1):
        spec = _cross_spec(fam, n, k, N)
        if spec is None:
            break
        ranks.append(build_context(spec).dim)
    if ranks:
        details["quotient_rank"] = ranks
        ch.add("quotient rank = closed form", ranks == closed[:len(ranks)], f"{ranks}")


# ----------------------------------------------------------------------
# registry


@dataclass
class _Claim:
    run: Callable
    defaults: Dict[str, object]
    grid: List[Dict[str, object]]


def _grid_kn(max_n: int = MAX_N, min_n: int = 0, fixed_n: Optional[int] = None) -> List[Dict[str, int]]:
    out = []
    for k in range(1, MAX_K + 1):
        for n in range(min_n, max_n + 1):
            if k + n <= MAX_KN and (fixed_n is None or n == fixed_n):
                out.append({"k": k, "n": n})
    return out


CLAIMS: Dict[str, _Claim] = {
    "HB.quasi_idem": _Claim(lambda ch, d, n: _hb_quasi_idem(ch, n), {"n": 3}, [{"n": n} for n in range(1, 5)]),
    "HB.E_consistency": _Claim(lambda ch, d, n: _hb_consistency(ch, n), {"n": 3}, [{"n": n} for n in range(1, 5)]),
    "A.renorm": _Claim(lambda ch, d, n: _a_renorm(ch, n), {"n": 3}, [{"n": n} for n in range(2, 5)]),
    "A.basis": _Claim(lambda ch, d, n: _a_basis(ch, n), {"n": 3}, [{"n": n} for n in range(0, 5)]),
    "C2.presentation": _Claim(lambda ch, d, n: _c2_presentation(ch, n), {"n": 3}, [{"n": n} for n in range(0, 5)]),
    "C2.basis": _Claim(lambda ch, d, n: _c2_basis(ch, n), {"n": 3}, [{"n": n} for n in range(0, 5)]),
    "C2.renorm": _Claim(lambda ch, d, n: _c2_renorm(ch, n), {"n": 3}, [{"n": n} for n in range(2, 5)]),
    "AK.span": _Claim(lambda ch, d, n: _ak_span(ch, n), {"n": 3}, [{"n": n} for n in range(1, 5)]),
    "AK.basis": _Claim(lambda ch, d, k, n: _ak_basis(ch, k, n), {"k": 2, "n": 3}, _grid_kn()),
    "AK.conj": _Claim(lambda ch, d, k: _ak_conj(ch, k, d), {"k": 2}, [{"k": k} for k in range(1, 4)]),
    "FH.dim": _Claim(lambda ch, d, k, n: _fh_dim(ch, k, n), {"k": 2, "n": 3}, _grid_kn()),
    "FH.S0": _Claim(lambda ch, d, k, n: _fh_S0(ch, k, n), {"k": 2, "n": 2}, _grid_kn(2, 1)),
    "FH.T": _Claim(lambda ch, d, k, n: _fh_T(ch, k, n), {"k": 2, "n": 2}, _grid_kn(2, 1)),
    "FH.ST": _Claim(lambda ch, d, k, n: _fh_ST(ch, k, n), {"k": 2, "n": 2}, _grid_kn(2, 1)),
    "FH.TSTS": _Claim(lambda ch, d, k, n: _fh_TSTS(ch, k, n), {"k": 2, "n": 2}, _grid_kn(2, 2)),
    "PHI.iso": _Claim(lambda ch, d, k, n: _phi_iso(ch, k, n, d), {"k": 2, "n": 3}, _grid_kn()),
    "CNK.relations": _Claim(lambda ch, d, k, n: _cnk_relations(ch, k, n), {"k": 1, "n": 2},
                            _grid_kn(2, 2) + [{"k": 1, "n": 3}, {"k": 2, "n": 3}]),
    "SEAM.u": _Claim(lambda ch, d, k: _seam_u(ch, k), {"k": 1}, [{"k": 1}, {"k": 2}]),
    "SEAM.basis": _Claim(lambda ch, d, k, n: _seam_basis(ch, k, n), {"k": 2, "n": 3},
                         [{"k": k, "n": n} for k in (1, 2) for n in range(0, 4)]),
    "DIM.cross": _Claim(
        lambda ch, d, family, depth, k=None, N=None, quotient_depth=3: _dim_cross(ch, family, depth, k, N, quotient_depth, d),
        {"family": "c3", "depth": 4},
        [{"family": "hb", "depth": 6}, {"family": "a", "depth": 6}, {"family": "c2", "depth": 6},
         {"family": "c3", "depth": 4}, {"family": "fused", "depth": 6, "k": 2},
         {"family": "seam", "depth": 6, "k": 3}]),
}


def default_params(claim: str) -> Dict[str, object]:
    if claim not in CLAIMS:
        raise KeyError(f"unknown claim {claim!r}")
    return dict(CLAIMS[claim].defaults)


def run_verification(claim: str, params: Optional[Dict[str, object]] = None) -> VerificationReport:
    """Run one claim; unknown ids raise KeyError, bounds violations BoundsError."""
    if claim not in CLAIMS:
        raise KeyError(f"unknown claim {claim!r}")
    entry = CLAIMS[claim]
    p = dict(entry.defaults)
    if params:
        p.update({key: v for key, v in params.items() if v is not None})
    ch = _Checks()
    details: Dict[str, object] = {}
    t0 = time.time()
    try:
        inspect.signature(entry.run).bind(ch, details, **p)
    except TypeError as exc:
        raise BoundsError(f"bad parameters for {claim}: {exc}") from None
    status = entry.run(ch, details, **p)
    seconds = time.time() - t0
    if not ch.ok:
        status = "falsified"
    elif status is None:
        status = "verified"
    details["checks"] = ch.results
    return VerificationReport(claim, p, status, ch.witness, seconds, details)
