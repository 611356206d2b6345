"""The fused Hecke algebra H_{k,n} = P_k H_{k+n} P_k and the map from A_n^(k).

Everything is computed inside the type A Hecke algebra H_{k+n} with the
unnormalised symmetriser Lambda_k (integral Laurent coefficients); the
normalisation N_k = q^(k(k-1)/2) [k]_q! is tracked separately, so
P_k = Lambda_k / N_k.

Coordinates are taken in the basis b_r = P_k sigma_r P_k, r running over
minimal double coset representatives of S_k \\ S_{k+n} / S_k.  Distinct
double cosets have disjoint supports, so the coordinate of b_r in an
element of P_k H P_k is read off at sigma_r.

>>> ctx = FusedContext(2, 1)
>>> len(ctx.reps)
2
>>> T, P = ctx.T(), ctx.P()
>>> k = 2
>>> lhs = T * T
>>> rhs = P * (mono(1 - k) / quantum_int(k)) + T * (q - mono(-k) / quantum_int(k))
>>> lhs == rhs
True
"""

from __future__ import annotations

import random
import time
from typing import Dict, List, Optional, Sequence, Tuple

from . import coxeter as cx
from .combinat import closed_form_dim
from .coxeter import Pattern, Window
from .hecke import (
    Ambient,
    HeckeElement,
    X_MQ,
    X_Q,
    _clean,
    _mul_terms,
    _rmul_gen,
    _scale_into,
    quasi_idempotent,
    symmetriser,
    symmetriser_scalar,
)
from .ring import (
    ONE,
    LaurentPoly,
    RatFunc,
    common_denominator,
    eval_mod_p,
    inverse,
    mono,
    q,
    quantum_int,
    rank_mod_p,
    EchelonBasis,
    MOD_P,
)

__all__ = [
    "FusedContext",
    "FusedElement",
    "verify_isomorphism",
    "centraliser_relation_elements",
    "fused_quotient_dim",
]


def _iota(terms: Dict) -> Dict:
    return {cx.inverse(w): c for w, c in terms.items()}


def _as_poly(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return ONE * x
    raise ArithmeticError(f"expected a Laurent polynomial, got {x!r}")


class FusedElement:
    """An element of H_{k,n} given by coordinates on the coset basis."""

    __slots__ = ("ctx", "coords")

    def __init__(self, ctx: "FusedContext", coords: Dict):
        self.ctx = ctx
        self.coords = {r: c for r, c in coords.items() if not (c == 0)}

    def __add__(self, other):
        if not isinstance(other, FusedElement):
            return NotImplemented
        out = dict(self.coords)
        for r, c in other.coords.items():
            out[r] = out[r] + c if r in out else c
        return FusedElement(self.ctx, out)

    def __neg__(self):
        return FusedElement(self.ctx, {r: -c for r, c in self.coords.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, FusedElement):
            return self.ctx.mul(self, other)
        if isinstance(other, (int, LaurentPoly, RatFunc)):
            return FusedElement(self.ctx, {r: c * other for r, c in self.coords.items()})
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, LaurentPoly, RatFunc)):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, FusedElement):
            return NotImplemented
        return not (self - other).coords

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.coords

    def __repr__(self):
        if not self.coords:
            return "0"
        parts = []
        for r in self.ctx.reps:
            if r in self.coords:
                parts.append(f"({self.coords[r]})*b[{cx.window_str(r)}]")
        return " + ".join(parts)


class FusedContext:
    """Coset basis data for H_{k,n} inside H_{k+n}."""

    def __init__(self, k: int, n: int):
        if k < 1 or n < 0:
            raise ValueError("need k >= 1 and n >= 0")
        self.k, self.n = k, n
        self.m = k + n
        self.amb = Ambient("A", self.m)
        self.reps: List[Window] = cx.double_coset_min_reps(k, n)
        self.N = symmetriser_scalar(k, X_Q)
        self.N2 = self.N * self.N
        self.lam = symmetriser(self.amb, X_Q, 1, k - 1).terms
        self.X: Dict[Window, Dict] = {}
        self.pivot: Dict[Window, LaurentPoly] = {}
        seen = set()
        for r in self.reps:
            x = self.lmul_lambda(self.rmul_lambda({r: 1}))
            if seen & set(x):
                raise RuntimeError("double coset expansions overlap")
            seen |= set(x)
            self.X[r] = x
            self.pivot[r] = x[r]
        self._images: Dict[Window, Tuple[Dict, int]] = {cx.identity(n): (self.lam, 1)}

    # H_{k+n} helpers ---------------------------------------------------------
    def rmul_lambda(self, terms: Dict) -> Dict:
        """terms * Lambda_k via Lambda_j = Lambda_{j-1}(1 + q s_{j-1} + ... + q^{j-1} s_{j-1}...s_1)."""
        t = terms
        for j in range(2, self.k + 1):
            acc = dict(t)
            y = t
            for i in range(1, j):
                y = _rmul_gen(y, j - i, None)
                _scale_into(acc, y, mono(i))
            t = _clean(acc)
        return t

    def lmul_lambda(self, terms: Dict) -> Dict:
        return _iota(self.rmul_lambda(_iota(terms)))

    def _word_terms(self, word: Sequence[int], start: Optional[Dict] = None) -> Dict:
        t = start if start is not None else {cx.identity(self.m): 1}
        for i in word:
            t = _rmul_gen(t, i, None)
        return t

    # conversions -----------------------------------------------------------
    def from_hecke(self, terms: Dict, den, check: bool = True) -> FusedElement:
        """The element terms/den of H_{k+n}, which must lie in P_k H P_k."""
        coords = {}
        for r in self.reps:
            c = terms.get(r)
            if c is not None and not (c == 0):
                coords[r] = c * self.N2 / (den * self.pivot[r])
        e = FusedElement(self, coords)
        if check:
            num, d = self.numerator(e)
            diff = dict()
            _scale_into(diff, {w: x * den for w, x in num.items()}, 1)
            _scale_into(diff, {w: -(x * d) for w, x in terms.items()}, 1)
            if _clean(diff):
                raise ArithmeticError("element is not in P_k H P_k")
        return e

    def numerator(self, e: FusedElement) -> Tuple[Dict, LaurentPoly]:
        """(terms, den) with e = terms/den in H_{k+n}; terms have Laurent coefficients."""
        L = common_denominator(e.coords.values())
        out: Dict = {}
        for r, c in e.coords.items():
            f = _as_poly(c * L)
            _scale_into(out, self.X[r], f)
        return _clean(out), L * self.N2

    def to_hecke(self, e: FusedElement) -> HeckeElement:
        num, den = self.numerator(e)
        return HeckeElement(self.amb, num) * inverse(den)

    def mul(self, a: FusedElement, b: FusedElement) -> FusedElement:
        """a b = sum_r b_r (a sigma_r) P_k, using a P_k = a."""
        if not a.coords or not b.coords:
            return FusedElement(self, {})
        an, ad = self.numerator(a)
        B = common_denominator(b.coords.values())
        bt = {r: _as_poly(c * B) for r, c in b.coords.items()}
        z = _mul_terms(an, bt, None, self.m)
        z = self.rmul_lambda(z)
        return self.from_hecke(z, ad * B * self.N, check=False)

    # distinguished elements -------------------------------------------------
    def P(self) -> FusedElement:
        return self.from_hecke(self.lam, self.N)

    def S(self, i: int) -> FusedElement:
        if i == 0:
            if self.n < 1:
                raise IndexError("S_0 needs n >= 1")
            return self.element_from_sigma_word(self._Wword)
        if not 1 <= i < self.n:
            raise IndexError(f"S_{i} needs 1 <= i < n = {self.n}")
        return self.from_hecke(_rmul_gen(self.lam, self.k + i, None), self.N)

    def T(self) -> FusedElement:
        if self.n < 1:
            raise IndexError("T needs n >= 1")
        return self.from_hecke(self.lmul_lambda(self.rmul_lambda(self._word_terms([self.k]))), self.N2)

    def U(self, i: int) -> FusedElement:
        """Last i strands of the top ellipse to the first i bottom points and back."""
        if not 1 <= i <= min(self.k, self.n):
            raise IndexError(f"U_{i} needs 1 <= i <= min(k, n)")
        word = []
        for a in range(self.k, self.k - i, -1):
            word.extend(range(a, a + i))
        return self.from_hecke(self.lmul_lambda(self.rmul_lambda(self._word_terms(word))), self.N2)

    def element_from_sigma_word(self, word: Sequence[int]) -> FusedElement:
        """P_k sigma_word P_k."""
        return self.from_hecke(self.lmul_lambda(self.rmul_lambda(self._word_terms(word))), self.N2)

    # the map phi ------------------------------------------------------------
    def _image(self, w: Window) -> Tuple[Dict, int]:
        """(Y, e) with phi(g_w) = Y / N^e, following the canonical reduced word."""
        if w in self._images:
            return self._images[w]
        cur = cx.identity(self.n)
        y, e = self._images[cur]
        for i in cx.canonical_reduced_word(w):
            cur = cx.right_act(cur, i)
            if cur in self._images:
                y, e = self._images[cur]
                continue
            if i == 0:
                y = self.rmul_lambda(_apply_word(y, self._Wword))
                e += 1
            else:
                y = _rmul_gen(y, self.k + i, None)
            self._images[cur] = (y, e)
        return y, e

    @property
    def _Wword(self) -> List[int]:
        return list(range(self.k, 1, -1)) + [1, 1] + list(range(2, self.k + 1))

    def phi_basis(self, w: Sequence[int]) -> FusedElement:
        y, e = self._image(tuple(w))
        return self.from_hecke(y, self.N ** e, check=False)

    def phi(self, x: HeckeElement) -> FusedElement:
        """Image of an element of A_n^(k) (given in the standard basis of H(n))."""
        amb = x.ambient
        if amb.kind != "B":
            raise ValueError("phi is defined on type B elements")
        if amb.n > self.n:
            raise ValueError("element lives in a larger algebra")
        if amb.k is None:
            x = x.specialise(self.k)
        elif amb.k != self.k:
            raise ValueError("specialisation mismatch")
        if amb.n < self.n:
            x = x.embed(Ambient("B", self.n, self.k))
        if not x.terms:
            return FusedElement(self, {})
        items = [(w, c, *self._image(w)) for w, c in x.terms.items()]
        E = max(e for _, _, _, e in items)
        D = common_denominator(c for _, c, _, _ in items)
        acc: Dict = {}
        for w, c, y, e in items:
            f = _as_poly(c * D) * self.N ** (E - e)
            _scale_into(acc, {r: y[r] for r in self.reps if r in y}, f)
        return self.from_hecke(_clean(acc), D * self.N ** E, check=False)

    def image_rank_mod_p(self, words: Sequence[Window], seed: int = 0, tries: int = 3) -> int:
        """Rank of the images phi(g_w) after evaluating q at random points mod p.

        Evaluation is a ring map, so the rank found is a lower bound for the
        rank over Q(q); full rank at one point proves linear independence.
        """
        rows = [self._image(tuple(w))[0] for w in words]
        rng = random.Random(seed)
        best = 0
        for _ in range(tries):
            q0 = rng.randrange(2, MOD_P - 1)
            point = (q0, 1, 1)
            mat = [[eval_mod_p(y[r], point) if r in y else 0 for r in self.reps] for y in rows]
            best = max(best, rank_mod_p(mat))
            if best == len(words):
                break
        return best


def _apply_word(t: Dict, word: Sequence[int]) -> Dict:
    for i in word:
        t = _rmul_gen(t, i, None)
    return t


# ----------------------------------------------------------------------


def centraliser_relation_elements(ctx: FusedContext, N: int) -> Tuple[Optional[FusedElement], Optional[FusedElement]]:
    """P_k Lambda_{N+1}(s_k..s_{k+N-1}) P_k and P_k Lambda_{N+1}(s_{k+1}..s_{k+N}) P_k
    (antisymmetrisers); None when the strands are not available."""
    k, m = ctx.k, ctx.m
    out = []
    for start in (k, k + 1):
        end = start + N - 1
        if end > m - 1:
            out.append(None)
            continue
        lam = symmetriser(ctx.amb, X_MQ, start, end).terms
        out.append(ctx.from_hecke(ctx.lmul_lambda(ctx.rmul_lambda(lam)), ctx.N2))
    return out[0], out[1]


def fused_quotient_dim(ctx: FusedContext, relations: Sequence[FusedElement]) -> Tuple[int, int]:
    """(dim of quotient, rank of ideal) for the two-sided ideal generated by relations."""
    gens = [ctx.T()] if ctx.n >= 1 else []
    gens += [ctx.S(i) for i in range(1, ctx.n)]
    eb = EchelonBasis({r: i for i, r in enumerate(ctx.reps)})
    for rel in relations:
        if rel is not None:
            eb.insert(rel.coords)
    changed = True
    while changed:
        changed = False
        for piv in list(eb.rows):
            row = FusedElement(ctx, dict(eb.rows[piv]))
            for g in gens:
                for prod in (ctx.mul(row, g), ctx.mul(g, row)):
                    if eb.insert(prod.coords) is not None:
                        changed = True
    return len(ctx.reps) - len(eb.rows), len(eb.rows)


def verify_isomorphism(k: int, n: int, ctx: Optional[FusedContext] = None) -> Dict[str, object]:
    """Checks that g_i -> S_i, g_0 -> S_0 defines an isomorphism A_n^(k) -> H_{k,n}."""
    from .quotient import eprime

    t0 = time.time()
    ctx = ctx or FusedContext(k, n)
    res: Dict[str, object] = {}
    P = ctx.P()
    S = ([ctx.S(0)] if n >= 1 else []) + [ctx.S(i) for i in range(1, n)]
    res["dim_cosets"] = len(ctx.reps)
    designated = cx.enumerate_signed(n, Pattern.BARS_DESC_LIMIT, k)
    res["dim_formula"] = closed_form_dim("fused", n, k=k)
    res["dim_designated"] = len(designated)
    res["dims_equal"] = len(ctx.reps) == res["dim_formula"] == len(designated)
    # images of generators agree with the prefix-tree images
    res["phi_generators"] = all(ctx.phi_basis(cx.right_act(cx.identity(n), i)) == S[i] for i in range(n))
    rel = {}
    if n >= 1:
        s0 = S[0]
        rel["S0_quadratic"] = (s0 - P * mono(2 * k)) * (s0 - P * mono(-2)) == FusedElement(ctx, {})
    for i in range(1, n):
        si = S[i]
        rel[f"S{i}_quadratic"] = si * si == si * (q - inverse(q)) + P
    if n >= 2:
        s0, s1 = S[0], S[1]
        rel["S0S1S0S1"] = s0 * s1 * s0 * s1 == s1 * s0 * s1 * s0
    for i in range(1, n - 1):
        a, b = S[i], S[i + 1]
        rel[f"braid{i}"] = a * b * a == b * a * b
    for i in range(0, n):
        for j in range(i + 2, n):
            rel[f"commute{i}{j}"] = S[i] * S[j] == S[j] * S[i]
    res["relations"] = rel
    if n >= 2:
        E2 = quasi_idempotent(Ambient("B", 2), 2, X_MQ, 2)
        res["kills_E2"] = ctx.phi(E2).is_zero()
    if n > k:
        res["kills_Eprime"] = ctx.phi(eprime(k)).is_zero()
    r = ctx.image_rank_mod_p(designated)
    res["image_rank"] = r
    res["independent"] = r == len(designated)
    res["seconds"] = time.time() - t0
    res["ok"] = bool(res["dims_equal"] and res["phi_generators"] and all(rel.values())
                     and res.get("kills_E2", True) and res.get("kills_Eprime", True) and res["independent"])
    return res
