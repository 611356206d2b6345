"""Quotients of H(n) by two-sided ideals, computed by exact saturation.

The ideal is kept in reduced row echelon form over the standard basis.
Columns outside the designated basis come first, ordered by (l0, l)
decreasing, so a row's pivot is its largest non-designated term and its
tail lives on the designated columns.  Rows are seeded with products
g_u K g_v whose leading term is a prescribed g_w; then the span is closed
under left and right multiplication by the generators.  A pivot landing
on a designated column means the proposed basis is not a basis; such
events are recorded, not hidden.

>>> ctx = build_context(spec_A(2))
>>> ctx.dim, ctx.pivots_disjoint
(7, True)
"""

from __future__ import annotations

import hashlib
import json
import os
import time
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from . import coxeter as cx
from .combinat import closed_form_dim
from .coxeter import Pattern, Window, ell0, length
from .hecke import (
    Ambient,
    HeckeElement,
    X_MQ,
    X_Q,
    _lmul_gen,
    _rmul_gen,
    e_gen,
    gen,
    one,
    quasi_idempotent,
    symmetriser,
    tilde_E,
)
from .ring import (
    CQ,
    CoefficientDomain,
    EchelonBasis,
    R_FULL,
    ck_q,
    exact_divide,
    in_domain,
    inverse,
    mono,
    a1,
    a2,
    q,
    quantum_factorial,
    quantum_int,
    scalar_from_json,
    scalar_to_json,
)

__all__ = [
    "QuotientSpec",
    "QuotientContext",
    "build_context",
    "spec_A",
    "spec_C",
    "spec_AK",
    "spec_AK_conj",
    "spec_CK",
    "spec_C2_presentation",
    "reduce",
    "verify_identity_in_quotient",
    "structure_constants",
    "check_associativity",
    "u_factor",
    "reduced_top_idempotent",
    "eprime",
    "conj_tilde",
    "conjecture_check",
    "DivisibilityError",
    "tilde_E_from_quotient",
]


class DivisibilityError(ArithmeticError):
    pass


@dataclass
class QuotientSpec:
    """A quotient of H(n) (optionally specialised at k) by killed elements."""

    name: str
    n: int
    killed: List[HeckeElement]
    pattern: Optional[Pattern]
    pattern_k: Optional[int] = None
    claims_basis: bool = True
    k: Optional[int] = None
    domain: CoefficientDomain = R_FULL
    expected_dim: Optional[int] = None

    @property
    def ambient(self) -> Ambient:
        return Ambient("B", self.n, self.k)

    def designated(self, w) -> bool:
        if self.pattern is None:
            return True
        return cx.avoids(w, self.pattern, self.pattern_k)

    def cache_key(self) -> str:
        from .hecke import to_json

        blob = json.dumps({
            "n": self.n,
            "k": self.k,
            "pattern": None if self.pattern is None else self.pattern.value,
            "pattern_k": self.pattern_k,
            "killed": [to_json(K) for K in self.killed],
        }, sort_keys=True)
        return hashlib.sha256(blob.encode()).hexdigest()[:24]


def _key(w):
    return (ell0(w), length(w), w)


def _leading(K: HeckeElement) -> Window:
    return max(K.terms, key=_key)


class QuotientContext:
    """Reduction data for one quotient."""

    def __init__(self, spec: QuotientSpec):
        self.spec = spec
        self.ambient = spec.ambient
        n = spec.n
        cols = cx.enumerate_signed(n)
        self.designated_cols = [w for w in cols if spec.designated(w)]
        des = set(self.designated_cols)
        nondes = sorted((w for w in cols if w not in des), key=_key, reverse=True)
        desl = sorted(des, key=_key, reverse=True)
        self.columns = nondes + desl
        self.order = {w: i for i, w in enumerate(self.columns)}
        self.eb = EchelonBasis(self.order)
        self.closed = False
        self.collisions: List[Window] = []
        self.stats: Dict[str, float] = {}
        self._cache: Dict = {}

    # building -------------------------------------------------------------
    def _gens(self):
        return range(self.spec.n)

    def _sandwich(self, u: Window, K: HeckeElement, v: Window) -> Dict:
        k = self.ambient.k
        t = K.terms
        for i in reversed(cx.canonical_reduced_word(u)):
            t = _lmul_gen(t, i, k)
        for i in cx.canonical_reduced_word(v):
            t = _rmul_gen(t, i, k)
        return t

    def _insert(self, vec: Dict, reduced: bool = False):
        piv = self.eb.insert(vec, reduced=reduced)
        if piv is not None:
            self._cache.clear()
            if self.spec.designated(piv):
                self.collisions.append(piv)
        return piv

    def seed(self):
        t0 = time.time()
        killed = [K.embed(self.ambient) if K.ambient != self.ambient else K for K in self.spec.killed]
        killed = [K for K in killed if K.terms]
        finders = [(K, cx.FactorFinder(_leading(K))) for K in killed]
        des = set(self.designated_cols)
        targets = sorted((w for w in self.columns if w not in des), key=_key)
        for w in targets:
            if w in self.eb.rows:
                continue
            for K, f in finders:
                r = f.find(w)
                if r is not None:
                    u, v = r
                    self._insert(self._sandwich(u, K, v))
                    break
        for K in killed:
            self._insert(K.terms)
        self.stats["seed_s"] = time.time() - t0

    def _rho_gen(self, y: Window, side: str, i: int) -> Dict:
        key = (y, side, i)
        c = self._cache.get(key)
        if c is None:
            k = self.ambient.k
            raw = _rmul_gen({y: 1}, i, k) if side == "R" else _lmul_gen({y: 1}, i, k)
            c = self.eb.reduce(raw)
            self._cache[key] = c
        return c

    def _product_remainder(self, row: Dict, side: str, i: int) -> Dict:
        out: Dict = {}
        get = out.get
        for y, cy in row.items():
            for col, x in self._rho_gen(y, side, i).items():
                t = x * cy if cy != 1 else x
                v = get(col)
                out[col] = t if v is None else v + t
        return {c: x for c, x in out.items() if not (x == 0 if isinstance(x, int) else not x)}

    def saturate(self, max_sweeps: int = 50):
        """Close the row space under multiplication by generators on both sides."""
        t0 = time.time()
        for _ in range(max_sweeps):
            added = False
            for piv in list(self.eb.rows):
                row = self.eb.rows.get(piv)
                if row is None:
                    continue
                for side in ("R", "L"):
                    for i in self._gens():
                        rem = self._product_remainder(row, side, i)
                        if rem:
                            self._insert(rem, reduced=True)
                            added = True
                            row = self.eb.rows.get(piv)
            if not added:
                self.closed = True
                break
        self.stats["saturate_s"] = time.time() - t0
        if not self.closed:
            raise RuntimeError("saturation did not stabilise")

    # queries --------------------------------------------------------------
    @property
    def basis(self) -> List[Window]:
        """Free (non-pivot) columns, in column order."""
        return [w for w in self.columns if w not in self.eb.rows]

    @property
    def dim(self) -> int:
        return len(self.columns) - len(self.eb.rows)

    @property
    def pivots_disjoint(self) -> bool:
        """All pivots avoid the designated set and the basis is exactly the designated set."""
        return not self.collisions and set(self.basis) == set(self.designated_cols)

    def reduce(self, e: HeckeElement) -> HeckeElement:
        if e.ambient != self.ambient:
            e = e.embed(self.ambient)
        red = self.eb.reduce(e.terms)
        dom = self.spec.domain
        return HeckeElement(self.ambient, red, dom)

    # persistence ------------------------------------------------------------
    def save(self, path: str):
        data = {
            "key": self.spec.cache_key(),
            "closed": self.closed,
            "collisions": [cx.window_str(w) for w in self.collisions],
            "rows": [
                {"pivot": cx.window_str(p), "row": [[cx.window_str(c), scalar_to_json(x)] for c, x in r.items()]}
                for p, r in self.eb.rows.items()
            ],
        }
        with open(path, "w") as fh:
            json.dump(data, fh)

    def load(self, path: str) -> bool:
        with open(path) as fh:
            data = json.load(fh)
        if data.get("key") != self.spec.cache_key():
            return False
        self.eb.rows = {
            cx.parse_window(r["pivot"]): {cx.parse_window(c): scalar_from_json(x) for c, x in r["row"]}
            for r in data["rows"]
        }
        self.closed = data["closed"]
        self.collisions = [cx.parse_window(w) for w in data["collisions"]]
        return True


def build_context(spec: QuotientSpec, closure: bool = True, cache_dir: Optional[str] = None) -> QuotientContext:
    """Seed and (optionally) saturate.  Without closure, reduce() still only
    subtracts ideal elements, so a zero remainder proves membership."""
    ctx = QuotientContext(spec)
    path = None
    if cache_dir:
        os.makedirs(cache_dir, exist_ok=True)
        path = os.path.join(cache_dir, f"{spec.name}-{spec.cache_key()}.json")
        if os.path.exists(path) and ctx.load(path) and (ctx.closed or not closure):
            return ctx
    ctx.seed()
    if closure:
        ctx.saturate()
    if path:
        ctx.save(path)
    return ctx


# ----------------------------------------------------------------------
# specs


def _E2_killer(k: Optional[int]) -> HeckeElement:
    E = quasi_idempotent(Ambient("B", 2), 2, X_MQ, 2)
    return E.specialise(k) if k is not None else E


def spec_A(n: int, k: Optional[int] = None) -> QuotientSpec:
    """A_n: kill E_2^(-q^-1, alpha2)."""
    killed = [_E2_killer(k)] if n >= 2 else []
    return QuotientSpec(f"A{n}" + (f"k{k}" if k is not None else ""), n, killed, Pattern.ONEBAR_TWOBAR,
                        k=k, domain=R_FULL if k is None else CQ, expected_dim=closed_form_dim("A", n))


def _c_killers(n: int, N: int, k: Optional[int]) -> List[HeckeElement]:
    out = []
    if n >= 2:
        out.append(_E2_killer(k))
    if n >= N:
        t = tilde_E("A_minusq_alpha1", Ambient("B", N), N)
        out.append(t.specialise(k) if k is not None else t)
    if n >= N + 1:
        amb = Ambient("B", N + 1, k)
        out.append(symmetriser(amb, X_MQ, 1, N))
    return out


def spec_C(n: int, N: int, k: Optional[int] = None) -> QuotientSpec:
    """C_{n,N}: A_n with tildeE_N^(-q^-1, alpha1) and Lambda_{N+1}^(-q^-1) killed.

    For N = 2 the fully commutative top elements are claimed as a basis;
    for other N only the dimension is predicted and 1bar-2bar avoiding
    elements merely guide the column order.
    """
    basis = N == 2
    return QuotientSpec(f"C{n}_{N}" + (f"k{k}" if k is not None else ""), n, _c_killers(n, N, k),
                        Pattern.FC_TOP if basis else Pattern.ONEBAR_TWOBAR, claims_basis=basis,
                        k=k, domain=R_FULL if k is None else CQ,
                        expected_dim=closed_form_dim("C", n, N=N))


def spec_AK(n: int, k: int) -> QuotientSpec:
    """A_n^(k): specialised A_n with E'_{k+1} killed when n > k."""
    killed = [_E2_killer(k)] if n >= 2 else []
    if n > k:
        killed.append(eprime(k))
    return QuotientSpec(f"AK{n}_{k}", n, killed, Pattern.BARS_DESC_LIMIT, pattern_k=k, k=k,
                        domain=ck_q(k), expected_dim=closed_form_dim("fused", n, k=k))


def spec_AK_conj(n: int, k: int) -> QuotientSpec:
    """The variant killing E_{k+1}^(q, alpha1)/[k+1]_q!; needs the divisibility to hold."""
    killed = [_E2_killer(k)] if n >= 2 else []
    if n > k:
        killed.append(conj_tilde(k))
    return QuotientSpec(f"AKconj{n}_{k}", n, killed, Pattern.BARS_DESC_LIMIT, pattern_k=k, k=k,
                        domain=CQ, expected_dim=closed_form_dim("fused", n, k=k))


def spec_CK(n: int, N: int, k: int, variant: str = "tilde") -> QuotientSpec:
    """C_{n,N}^(k).  variant "eprime" kills E'_{k+1} (over C_k[q^+-1]);
    variant "tilde" (N = 2 only) kills tildeE_{k+1}^(q, alpha1) (over C[q^+-1])."""
    killed = _c_killers(n, N, k)
    if n > k:
        if variant == "eprime":
            killed.append(eprime(k))
        elif variant == "tilde":
            if N != 2:
                raise ValueError("the tilde variant is only defined for N = 2")
            killed.append(tilde_E("C2_q_alphab", Ambient("B", k + 1, k), k + 1, 1))
        else:
            raise ValueError(variant)
    basis = N == 2
    dom = CQ if variant == "tilde" else ck_q(k)
    exp = closed_form_dim("seam", n, k=k) if N == 2 else None
    return QuotientSpec(f"CK{n}_{N}_{k}_{variant}", n, killed,
                        Pattern.FC_TOP_LIMIT if basis else Pattern.BARS_DESC_LIMIT, pattern_k=k,
                        claims_basis=basis, k=k, domain=dom, expected_dim=exp)


def spec_C2_presentation(n: int) -> QuotientSpec:
    """C_{n,2} presented by the two short relations
    g1 g0 g1 = q(a1+a2)(q-g1) - q^2 g0 + q(g0 g1 + g1 g0) and
    g_i g_{i+1} g_i = q^3 - q^2(g_i+g_{i+1}) + q(g_i g_{i+1} + g_{i+1} g_i)."""
    killed = []
    if n >= 2:
        amb = Ambient("B", 2)
        g0, g1 = gen(amb, 0), gen(amb, 1)
        one_ = one(amb)
        r2 = g1 * g0 * g1 - ((one_ * q - g1) * (q * (a1 + a2)) - g0 * (q * q) + (g0 * g1 + g1 * g0) * q)
        killed.append(r2)
    if n >= 3:
        amb = Ambient("B", 3)
        g1, g2 = gen(amb, 1), gen(amb, 2)
        one_ = one(amb)
        r3 = g1 * g2 * g1 - (one_ * q ** 3 - (g1 + g2) * q ** 2 + (g1 * g2 + g2 * g1) * q)
        killed.append(r3)
    return QuotientSpec(f"C{n}_2pres", n, killed, Pattern.FC_TOP, domain=R_FULL,
                        expected_dim=closed_form_dim("C2", n))


# ----------------------------------------------------------------------
# operations


def reduce(ctx: QuotientContext, e: HeckeElement) -> HeckeElement:
    return ctx.reduce(e)


def verify_identity_in_quotient(ctx: QuotientContext, lhs: HeckeElement, rhs) -> Tuple[bool, HeckeElement]:
    """True with a zero witness when lhs - rhs reduces to 0."""
    if not isinstance(rhs, HeckeElement):
        rhs = one(lhs.ambient) * rhs
    w = ctx.reduce(lhs - rhs)
    return (not w.terms), w


def structure_constants(ctx: QuotientContext, limit: int = 200) -> Dict[Tuple[Window, Window], Dict]:
    """c_{u,v}^w with g_u g_v = sum_w c_{u,v}^w g_w in the quotient basis."""
    basis = ctx.basis
    if len(basis) > limit:
        raise ValueError(f"quotient dimension {len(basis)} exceeds {limit}")
    n = ctx.spec.n
    k = ctx.ambient.k
    out = {}
    for u in basis:
        cache = {cx.identity(n): {u: 1}}
        for v in basis:
            prev = {u: 1}
            if v not in cache:
                for p, i in _prefixes(v):
                    if p in cache:
                        prev = cache[p]
                    else:
                        prev = ctx.eb.reduce(_rmul_gen(prev, i, k))
                        cache[p] = prev
            out[(u, v)] = dict(cache[v])
    return out


def _prefixes(w):
    cur = cx.identity(len(w))
    out = []
    for i in cx.canonical_reduced_word(w):
        cur = cx.right_act(cur, i)
        out.append((cur, i))
    return out


def check_associativity(ctx: QuotientContext, sc: Dict, triples: Sequence[Tuple[Window, Window, Window]]) -> bool:
    def mul(x: Dict, y: Dict) -> Dict:
        out: Dict = {}
        for u, cu in x.items():
            for v, cv in y.items():
                for w, c in sc[(u, v)].items():
                    out[w] = out.get(w, 0) + cu * cv * c
        return {w: c for w, c in out.items() if not (c == 0)}

    for u, v, w in triples:
        a = mul(mul({u: 1}, {v: 1}), {w: 1})
        b = mul({u: 1}, mul({v: 1}, {w: 1}))
        keys = set(a) | set(b)
        if any(not (a.get(x, 0) - b.get(x, 0) == 0) for x in keys):
            return False
    return True


def coefficients_in(sc: Dict, dom: CoefficientDomain, bound: int = 4) -> bool:
    return all(in_domain(c, dom, bound) for row in sc.values() for c in row.values())


# ----------------------------------------------------------------------
# seam factors and top idempotents


def u_factor(amb: Ambient, m: int) -> HeckeElement:
    """u_{m+1} = sum_{r<m} (-q)^r (1 - q^(2(m-r)) a1/a2) e_m...e_{m+1-r} + (-q)^m a2^-1 e_m...e_0."""
    ratio = a1 * inverse(a2)
    out = HeckeElement(amb, {})
    for r in range(m):
        prod = one(amb)
        for j in range(m, m - r, -1):
            prod = prod * e_gen(amb, j)
        c = (-q) ** r * (1 - mono(2 * (m - r)) * ratio)
        out = out + prod * amb.scalar(c)
    prod = one(amb)
    for j in range(m, -1, -1):
        prod = prod * e_gen(amb, j)
    return out + prod * amb.scalar((-q) ** m * inverse(a2))


_TOP_CACHE: Dict = {}


def reduced_top_idempotent(k: int) -> HeckeElement:
    """E_{k+1}^(q, alpha1) specialised at k, expanded in the 1bar-2bar basis of A_{k+1}."""
    if k in _TOP_CACHE:
        return _TOP_CACHE[k]
    n = k + 1
    ctx = build_context(spec_A(n, k), closure=False)
    E = quasi_idempotent(Ambient("B", n), n, X_Q, 1).specialise(k)
    red = ctx.reduce(E)
    _TOP_CACHE[k] = red
    return red


def _divide_all(e: HeckeElement, d) -> Tuple[Optional[HeckeElement], Optional[Window]]:
    out = {}
    for w, c in e.terms.items():
        x = exact_divide(c, d)
        if x is None:
            return None, w
        out[w] = x
    return HeckeElement(e.ambient, out, CQ), None


def eprime(k: int) -> HeckeElement:
    """E'_{k+1} = E_{k+1}^(q, alpha1)/[k+1]_q in specialised A_{k+1}."""
    red = reduced_top_idempotent(k)
    out, bad = _divide_all(red, quantum_int(k + 1))
    if out is None:
        raise DivisibilityError(f"[k+1]_q does not divide the coefficient of {bad}")
    return out


def conjecture_check(k: int) -> Dict:
    """Is E_{k+1}^(q, alpha1) in specialised A_{k+1} divisible by [k+1]_q!?"""
    red = reduced_top_idempotent(k)
    out, bad = _divide_all(red, quantum_factorial(k + 1))
    if out is None:
        return {"status": "divisibility-fails", "witness": cx.window_str(bad), "coeff": str(red.terms[bad])}
    return {"status": "divisibility-holds", "element": out}


def conj_tilde(k: int) -> HeckeElement:
    res = conjecture_check(k)
    if res["status"] != "divisibility-holds":
        raise DivisibilityError(f"E_(k+1) is not divisible by [k+1]_q! at k={k}")
    return res["element"]


def tilde_E_from_quotient(variant: str, n: int, amb: Ambient) -> HeckeElement:
    if amb.k is None:
        raise ValueError(f"{variant} needs a specialised ambient")
    k = amb.k
    if n != k + 1:
        raise ValueError(f"{variant} is defined for n = k+1")
    e = eprime(k) if variant == "Eprime" else conj_tilde(k)
    return e.embed(amb) if amb.n != n else e
