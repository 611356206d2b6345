"""Hecke algebras of type B (cyclotomic, two eigenvalues for g_0) and type A.

Elements are sparse dicts from windows to scalars.  The basis element g_w
is multiplied by a generator on the right using the length of w s_i; left
multiplication goes through the anti-involution g_w -> g_{w^-1}.

Relations: (g_i - q)(g_i + q^-1) = 0 for i >= 1 and
(g_0 - alpha1)(g_0 - alpha2) = 0, plus the braid relations.  An ambient
may carry a specialisation k, meaning alpha1 = q^-2 and alpha2 = q^(2k).

>>> B2 = Ambient("B", 2)
>>> g0, g1 = gen(B2, 0), gen(B2, 1)
>>> (g0 * g1 * g0 * g1) == (g1 * g0 * g1 * g0)
True
>>> E = quasi_idempotent(B2, 2, q, 1)
>>> E * g0 == E * a1
True
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from . import coxeter as cx
from .coxeter import Window, length, ell0
from .ring import (
    CQ,
    FQ,
    F_FULL,
    R_FULL,
    CoefficientDomain,
    LaurentPoly,
    RatFunc,
    ONE,
    a1,
    a2,
    inverse,
    mono,
    promote,
    q,
    quantum_factorial,
    quantum_int,
    scalar_from_json,
    scalar_to_json,
    specialise,
    in_domain,
)

__all__ = [
    "Ambient",
    "HeckeElement",
    "gen",
    "e_gen",
    "one",
    "basis_element",
    "word_element",
    "X_Q",
    "X_MQ",
    "alpha",
    "quasi_idempotent",
    "E_recursive",
    "E_factored",
    "E_recursive_field",
    "eigen_P",
    "symmetriser",
    "symmetriser_scalar",
    "normalized_symmetriser_P",
    "tilde_E",
    "check_central_quasi_idempotent",
    "to_json",
    "from_json",
]

X_Q = q
X_MQ = -inverse(q)


def alpha(b: int) -> LaurentPoly:
    """alpha_b with the index read modulo 2."""
    return a1 if b % 2 == 1 else a2


@dataclass(frozen=True)
class Ambient:
    """H(n) of type B (kind "B") or H_n of type A (kind "A").

    k is None for generic parameters, otherwise the specialisation
    alpha1 = q^-2, alpha2 = q^(2k).
    """

    kind: str
    n: int
    k: Optional[int] = None

    def __post_init__(self):
        if self.kind not in ("A", "B"):
            raise ValueError("kind must be 'A' or 'B'")
        if self.n < 0:
            raise ValueError("n must be nonnegative")

    def __str__(self):
        s = f"{self.kind}{self.n}"
        return s if self.k is None else f"{s}@k={self.k}"

    @property
    def first_gen(self) -> int:
        return 0 if self.kind == "B" else 1

    def gens(self) -> range:
        return range(self.first_gen, self.n)

    def scalar(self, x):
        """Bring a generic scalar into this ambient's coefficient ring."""
        if self.k is None or isinstance(x, int):
            return x
        return specialise(x, self.k)

    @property
    def default_domain(self) -> CoefficientDomain:
        if self.kind == "A" or self.k is not None:
            return CQ
        return R_FULL

    def identity(self) -> Window:
        return cx.identity(self.n)

    def embed(self, w: Sequence[int]) -> Window:
        w = tuple(w)
        if len(w) > self.n:
            raise ValueError(f"window of size {len(w)} does not fit in {self}")
        return Window(w + tuple(range(len(w) + 1, self.n + 1)))

    def check_gen(self, i: int):
        if not self.first_gen <= i < self.n:
            raise IndexError(f"generator {i} out of range for {self}")


@lru_cache(maxsize=None)
def _quadratic(amb_k: Optional[int]):
    qq = q - inverse(q)
    s0 = a1 + a2
    p0 = a1 * a2
    if amb_k is not None:
        s0 = specialise(s0, amb_k)
        p0 = specialise(p0, amb_k)
    return qq, s0, p0


def _zero(x) -> bool:
    return x == 0 if isinstance(x, int) else not x


def _clean(d: Dict) -> Dict:
    return {w: c for w, c in d.items() if not _zero(c)}


def _rmul_gen(terms: Dict, i: int, k: Optional[int]) -> Dict:
    qq, s0, p0 = _quadratic(k)
    out: Dict = {}
    get = out.get
    if i == 0:
        for w, c in terms.items():
            u = (-w[0],) + w[1:]
            if w[0] > 0:
                v = get(u)
                out[u] = c if v is None else v + c
            else:
                v = get(w)
                out[w] = c * s0 if v is None else v + c * s0
                v = get(u)
                out[u] = -(c * p0) if v is None else v - c * p0
    else:
        a, b = i - 1, i
        for w, c in terms.items():
            lw = list(w)
            lw[a], lw[b] = lw[b], lw[a]
            u = tuple(lw)
            v = get(u)
            out[u] = c if v is None else v + c
            if w[a] > w[b]:
                v = get(w)
                out[w] = c * qq if v is None else v + c * qq
    return _clean(out)


def _signed_pos(w, v):
    for p, x in enumerate(w, 1):
        if x == v:
            return p
        if x == -v:
            return -p
    raise ValueError(v)


def _lmul_gen(terms: Dict, i: int, k: Optional[int]) -> Dict:
    qq, s0, p0 = _quadratic(k)
    out: Dict = {}
    get = out.get
    for w, c in terms.items():
        u = cx.left_act(w, i)
        if i == 0:
            desc = _signed_pos(w, 1) < 0
        else:
            desc = _signed_pos(w, i) > _signed_pos(w, i + 1)
        if i == 0 and desc:
            v = get(w)
            out[w] = c * s0 if v is None else v + c * s0
            v = get(u)
            out[u] = -(c * p0) if v is None else v - c * p0
        else:
            v = get(u)
            out[u] = c if v is None else v + c
            if desc:
                v = get(w)
                out[w] = c * qq if v is None else v + c * qq
    return _clean(out)


def _prefix_windows(w: Window) -> List[Tuple[Window, int]]:
    """(prefix element, last letter) along the canonical reduced word."""
    out = []
    cur = cx.identity(len(w))
    for i in cx.canonical_reduced_word(w):
        cur = cx.right_act(cur, i)
        out.append((cur, i))
    return out


def _scale_into(out: Dict, terms: Dict, c):
    get = out.get
    if isinstance(c, int) and c == 1:
        for w, x in terms.items():
            v = get(w)
            out[w] = x if v is None else v + x
        return
    for w, x in terms.items():
        y = x * c
        v = get(w)
        out[w] = y if v is None else v + y


def _mul_terms(a: Dict, b: Dict, k: Optional[int], n: int) -> Dict:
    if not a or not b:
        return {}
    if len(a) < len(b):
        # fold a's words onto b from the left
        cache = {cx.identity(n): b}
        out: Dict = {}
        for w, c in a.items():
            if w not in cache:
                cur = cx.identity(n)
                word = cx.canonical_reduced_word(w)
                # g_w * b = g_{i1} (g_{i2} ( ... b))
                prefixes = []
                for i in reversed(word):
                    cur = cx.left_act(cur, i)
                    prefixes.append((cur, i))
                prev = cache[cx.identity(n)]
                for p, i in prefixes:
                    if p in cache:
                        prev = cache[p]
                    else:
                        prev = _lmul_gen(prev, i, k)
                        cache[p] = prev
            _scale_into(out, cache[w], c)
        return _clean(out)
    cache = {cx.identity(n): a}
    out = {}
    for w, c in b.items():
        if w not in cache:
            prev = a
            for p, i in _prefix_windows(w):
                if p in cache:
                    prev = cache[p]
                else:
                    prev = _rmul_gen(prev, i, k)
                    cache[p] = prev
        _scale_into(out, cache[w], c)
    return _clean(out)


class HeckeElement:
    """Sparse linear combination of basis elements g_w of an ambient."""

    __slots__ = ("ambient", "terms", "domain")

    def __init__(self, ambient: Ambient, terms: Optional[Dict] = None,
                 domain: Optional[CoefficientDomain] = None):
        self.ambient = ambient
        self.terms = _clean(terms) if terms else {}
        self.domain = domain if domain is not None else ambient.default_domain

    def _check(self, other: "HeckeElement"):
        if self.ambient != other.ambient:
            raise ValueError(f"ambient mismatch: {self.ambient} vs {other.ambient}")

    def _dom(self, other):
        return promote(self.domain, other.domain) if self.domain != other.domain else self.domain

    def __add__(self, other):
        if not isinstance(other, HeckeElement):
            if isinstance(other, (int, LaurentPoly, RatFunc)):
                return self + one(self.ambient) * other
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        _scale_into(out, other.terms, 1)
        return HeckeElement(self.ambient, out, self._dom(other))

    __radd__ = __add__

    def __neg__(self):
        return HeckeElement(self.ambient, {w: -c for w, c in self.terms.items()}, self.domain)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, HeckeElement):
            self._check(other)
            return HeckeElement(self.ambient,
                                _mul_terms(self.terms, other.terms, self.ambient.k, self.ambient.n),
                                self._dom(other))
        if isinstance(other, (int, LaurentPoly, RatFunc)):
            if _zero(other):
                return HeckeElement(self.ambient, {}, self.domain)
            dom = self.domain
            if isinstance(other, RatFunc):
                dom = FQ if dom.specialised else F_FULL
            return HeckeElement(self.ambient, {w: c * other for w, c in self.terms.items()}, dom)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, LaurentPoly, RatFunc)):
            return self * other
        return NotImplemented

    def __truediv__(self, other):
        return self * inverse(other)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, HeckeElement):
            return NotImplemented
        if self.ambient != other.ambient:
            return False
        diff = (self - other).terms
        return not diff

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def rmul_gen(self, i: int) -> "HeckeElement":
        self.ambient.check_gen(i)
        return HeckeElement(self.ambient, _rmul_gen(self.terms, i, self.ambient.k), self.domain)

    def lmul_gen(self, i: int) -> "HeckeElement":
        self.ambient.check_gen(i)
        return HeckeElement(self.ambient, _lmul_gen(self.terms, i, self.ambient.k), self.domain)

    def coeff(self, w):
        return self.terms.get(tuple(w), 0)

    def specialise(self, k: int) -> "HeckeElement":
        if self.ambient.k is not None:
            if self.ambient.k != k:
                raise ValueError("already specialised at a different k")
            return self
        amb = Ambient(self.ambient.kind, self.ambient.n, k)
        dom = FQ if self.domain.is_field else CQ
        return HeckeElement(amb, {w: specialise(c, k) for w, c in self.terms.items()}, dom)

    def embed(self, ambient: Ambient) -> "HeckeElement":
        """Image under the natural inclusion H(m) -> H(n), m <= n."""
        if ambient.kind != self.ambient.kind and not (self.ambient.kind == "A" and ambient.kind == "B"):
            raise ValueError("cannot embed type B into type A")
        if ambient.k != self.ambient.k:
            raise ValueError("specialisation mismatch")
        return HeckeElement(ambient, {ambient.embed(w): c for w, c in self.terms.items()}, self.domain)

    def map_coeffs(self, f) -> "HeckeElement":
        return HeckeElement(self.ambient, {w: f(c) for w, c in self.terms.items()}, self.domain)

    def in_domain(self, dom: CoefficientDomain, bound: int = 4) -> bool:
        return all(in_domain(c, dom, bound) for c in self.terms.values())

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: (length(t[0]), t[0]))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.sorted_terms():
            word = cx.canonical_reduced_word(w)
            name = "1" if not word else "g[" + "".join(str(i) for i in word) + "]"
            parts.append(f"({c})*{name}")
        return " + ".join(parts)


# ----------------------------------------------------------------------
# constructors


def one(amb: Ambient) -> HeckeElement:
    return HeckeElement(amb, {amb.identity(): 1})


def gen(amb: Ambient, i: int) -> HeckeElement:
    amb.check_gen(i)
    return HeckeElement(amb, {cx.right_act(amb.identity(), i): 1})


def e_gen(amb: Ambient, i: int) -> HeckeElement:
    """e_0 = alpha2 - g_0 and e_i = q - g_i."""
    c = amb.scalar(a2) if i == 0 else q
    return one(amb) * c - gen(amb, i)


def basis_element(amb: Ambient, w: Sequence[int]) -> HeckeElement:
    return HeckeElement(amb, {amb.embed(w): 1})


def word_element(amb: Ambient, word: Sequence[int]) -> HeckeElement:
    """Product of generators along an arbitrary (not necessarily reduced) word."""
    t = {amb.identity(): 1}
    for i in word:
        amb.check_gen(i)
        t = _rmul_gen(t, i, amb.k)
    return HeckeElement(amb, t)


def _xpow(x: LaurentPoly, e: int) -> LaurentPoly:
    return x ** e


def quasi_idempotent(amb: Ambient, n: int, x: LaurentPoly, b: int) -> HeckeElement:
    """E_n^(x, alpha_b) = sum over B_n of x^(l - l0) (-alpha_{b+1}^-1)^l0 g_w."""
    if amb.kind != "B":
        raise ValueError("quasi-idempotents live in type B")
    if n > amb.n:
        raise ValueError("n exceeds the ambient rank")
    if x != X_Q and x != X_MQ:
        raise ValueError("x must be q or -q^-1")
    if n == 0:
        return one(amb)
    m = -inverse(alpha(b + 1))
    terms = {}
    for w in cx.enumerate_signed(n):
        l, l0 = length(w), ell0(w)
        terms[amb.embed(w)] = amb.scalar(x ** (l - l0) * m ** l0)
    return HeckeElement(amb, terms)


def eigen_P(n: int, x: LaurentPoly, b: int, k: Optional[int] = None):
    """The scalar P_n(x, alpha_b) with E^2 = P_n E."""
    if n < 0:
        return ONE
    s = 1 if x == X_Q else -1
    out = mono(s * n * (n - 1) // 2) * quantum_factorial(n)
    r = alpha(b) * inverse(alpha(b + 1))
    for i in range(n):
        out = out * (1 - mono(2 * s * i) * r)
    return out if k is None else specialise(out, k)


def _chain(amb: Ambient, word: Sequence[int]) -> HeckeElement:
    return word_element(amb, word)


def E_recursive(amb: Ambient, n: int, x: LaurentPoly, b: int) -> HeckeElement:
    """Build E_n through the coset decomposition B_{n-1} \\ B_n."""
    E = one(amb)
    ainv = amb.scalar(inverse(alpha(b + 1)))
    for m in range(1, n + 1):
        f = one(amb)
        for i in range(1, m):
            f = f + _chain(amb, range(m - 1, i - 1, -1)) * (x ** (m - i))
        tail = one(amb)
        for i in range(1, m):
            tail = tail + _chain(amb, range(1, i + 1)) * (x ** i)
        f = f - _chain(amb, range(m - 1, -1, -1)) * tail * (x ** (m - 1) * ainv)
        E = E * f
    return E


def symmetriser(amb: Ambient, x: LaurentPoly, i: int, j: int) -> HeckeElement:
    """Lambda^x over the generators g_i, ..., g_j (sum over that S_{j-i+2})."""
    if i < 1:
        raise ValueError("symmetrisers use generators g_i with i >= 1")
    if j < i:
        return one(amb)
    amb.check_gen(j)
    block = list(range(i, j + 2))
    terms = {}
    base = list(amb.identity())
    for perm in itertools.permutations(block):
        w = list(base)
        for pos, v in zip(block, perm):
            w[pos - 1] = v
        w = tuple(w)
        terms[w] = x ** length(w)
    return HeckeElement(amb, terms)


def symmetriser_scalar(m: int, x: LaurentPoly) -> LaurentPoly:
    """Lambda_m^x squared equals this scalar times Lambda_m^x."""
    s = 1 if x == X_Q else -1
    return mono(s * m * (m - 1) // 2) * quantum_factorial(m)


def E_factored(amb: Ambient, n: int, x: LaurentPoly, b: int) -> HeckeElement:
    """Lambda_n^x times the product of (1 - x^i alpha_{b+1}^-1 g_0 g_1 ... g_i)."""
    ainv = amb.scalar(inverse(alpha(b + 1)))
    E = symmetriser(amb, x, 1, n - 1) if n >= 2 else one(amb)
    for i in range(n - 1, -1, -1):
        E = E * (one(amb) - _chain(amb, range(0, i + 1)) * (x ** i * ainv))
    return E


def E_recursive_field(amb: Ambient, n: int, x: LaurentPoly, b: int) -> HeckeElement:
    """The recursion dividing by P_{n-2} and P_{n-1}; valid over the fraction field."""
    if n <= 1:
        return quasi_idempotent(amb, n, x, b)
    prev = E_recursive_field(amb, n - 1, x, b)
    ainv = amb.scalar(inverse(alpha(b + 1)))
    p2 = eigen_P(n - 2, x, b, amb.k)
    p1 = eigen_P(n - 1, x, b, amb.k)
    mid = prev * gen(amb, n - 1) * prev
    word = list(range(n - 1, 0, -1)) + [0] + list(range(1, n))
    top = prev * _chain(amb, word) * prev
    return prev + mid * (x / p2) - top * (x ** (2 * (n - 1)) * ainv / p1)


def normalized_symmetriser_P(k: int, amb: Ambient) -> HeckeElement:
    """P_k = q^(-k(k-1)/2) / [k]_q! Lambda_k^q; an idempotent over Q(q)."""
    if amb.kind != "A":
        raise ValueError("P_k lives in the type A algebra")
    if k > amb.n:
        raise ValueError("k exceeds the number of strands")
    lam = symmetriser(amb, X_Q, 1, k - 1)
    return lam * inverse(symmetriser_scalar(k, X_Q))


def tilde_E(variant: str, amb: Ambient, n: int, b: int = 1) -> HeckeElement:
    """Renormalised quasi-idempotents.

    variant "A_minusq_alpha1": Lambda_n^(-q^-1) (alpha2 + alpha1 q^-(n-2) [n-1] - sum (-1)^i q^-i g_0..g_i)
    variant "A_q_alpha2":      the recursion starting from 1 - alpha1^-1 g_0
    variant "C2_q_alphab":     same recursion with alpha_{b+1}
    variants "Eprime" and "ConjTilde" are computed from quotients; see
    symhecke.quotient.
    """
    if variant == "A_minusq_alpha1":
        if n == 0:
            return one(amb)
        lam = symmetriser(amb, X_MQ, 1, n - 1) if n >= 2 else one(amb)
        c = a2 + a1 * mono(-(n - 2)) * quantum_int(n - 1)
        s = one(amb) * amb.scalar(c)
        for i in range(n):
            s = s - _chain(amb, range(0, i + 1)) * ((-1) ** i * mono(-i))
        return lam * s
    if variant == "A_q_alpha2":
        return tilde_E("C2_q_alphab", amb, n, 2)
    if variant == "C2_q_alphab":
        if n == 0:
            return one(amb)
        ainv = amb.scalar(inverse(alpha(b + 1)))
        E = one(amb) - gen(amb, 0) * ainv
        for m in range(2, n + 1):
            f = one(amb)
            for j in range(1, m - 1):
                f = f + _chain(amb, range(m - 1, m - 1 - j, -1)) * mono(j)
            f = f * (1 - q * q)
            f = f + _chain(amb, range(m - 1, 0, -1)) * (one(amb) - gen(amb, 0) * ainv) * mono(m - 1)
            E = E * f
        return E
    if variant in ("Eprime", "ConjTilde"):
        from . import quotient

        return quotient.tilde_E_from_quotient(variant, n, amb)
    raise ValueError(f"unknown variant {variant!r}")


def check_central_quasi_idempotent(E: HeckeElement, x: LaurentPoly, b: int, n: Optional[int] = None) -> Dict[str, bool]:
    """Check E g_i = g_i E = eigenvalue * E and E^2 = P_n E."""
    amb = E.ambient
    n = amb.n if n is None else n
    out = {}
    for i in range(n):
        ev = amb.scalar(alpha(b)) if i == 0 else x
        g = gen(amb, i)
        out[f"E*g{i}"] = E * g == E * ev
        out[f"g{i}*E"] = g * E == E * ev
    out["E^2"] = E * E == E * eigen_P(n, x, b, amb.k)
    return out


# ----------------------------------------------------------------------
# JSON


def to_json(e: HeckeElement) -> dict:
    amb = e.ambient
    name = f"{amb.kind}{amb.n}"
    d = {
        "ambient": name,
        "terms": [{"word": cx.window_str(w), "coeff": scalar_to_json(c)} for w, c in e.sorted_terms()],
    }
    if amb.k is not None:
        d["k"] = amb.k
    return d


def from_json(d: dict) -> HeckeElement:
    name = d["ambient"]
    amb = Ambient(name[0], int(name[1:]), d.get("k"))
    terms = {}
    for t in d["terms"]:
        w = cx.parse_window(t["word"])
        if len(w) != amb.n:
            raise ValueError("window size does not match ambient")
        terms[w] = scalar_from_json(t["coeff"])
    return HeckeElement(amb, terms)
