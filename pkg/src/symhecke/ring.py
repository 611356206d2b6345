"""Scalars: Laurent polynomials in q, alpha1, alpha2 and their fractions.

A Laurent polynomial is stored as a dict from a packed exponent key to a
rational coefficient.  The key packs ``(eq, e1, e2)`` into one integer so
that integer order on keys is lexicographic order on exponent triples and
multiplying monomials is integer addition.

>>> p = (q + 1) * (q - 1)
>>> p
q^2 - 1
>>> exact_divide(p, q - 1)
q + 1
>>> quantum_int(3, q)
q^2 + 1 + q^-2
>>> specialise(a1 * a2, 2)
q^2
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, NewType, Optional, Sequence, Tuple

__all__ = [
    "Monomial",
    "LaurentPoly",
    "RatFunc",
    "CoefficientDomain",
    "R_FULL",
    "F_FULL",
    "CQ",
    "FQ",
    "ck_q",
    "q",
    "a1",
    "a2",
    "ONE",
    "ZERO",
    "const",
    "mono",
    "quantum_int",
    "quantum_factorial",
    "exact_divide",
    "specialise",
    "in_domain",
    "promote",
    "field_div",
    "inverse",
    "EchelonBasis",
    "row_reduce",
    "rank_mod_p",
    "common_denominator",
    "eval_mod_p",
    "poly_to_json",
    "poly_from_json",
    "scalar_to_json",
    "scalar_from_json",
]

Monomial = NewType("Monomial", Tuple[int, int, int])

_OFF = 1 << 20
_MASK = (1 << 21) - 1


def _pack(eq: int, e1: int, e2: int) -> int:
    if not (-_OFF < eq < _OFF and -_OFF < e1 < _OFF and -_OFF < e2 < _OFF):
        raise OverflowError("exponent out of range")
    return ((eq + _OFF) << 42) | ((e1 + _OFF) << 21) | (e2 + _OFF)


def _unpack(key: int) -> Tuple[int, int, int]:
    return ((key >> 42) - _OFF, ((key >> 21) & _MASK) - _OFF, (key & _MASK) - _OFF)


_BIAS = _pack(0, 0, 0)
_QSTEP = 1 << 42


def _norm_coeff(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class LaurentPoly:
    """Element of Q[q^+-1, alpha1^+-1, alpha2^+-1]."""

    __slots__ = ("_t",)

    def __init__(self, terms: Optional[Dict[int, object]] = None):
        self._t = terms if terms is not None else {}

    # construction -------------------------------------------------------
    @classmethod
    def from_terms(cls, terms: Dict[Tuple[int, int, int], object]) -> "LaurentPoly":
        t = {}
        for (e0, e1, e2), c in terms.items():
            if c:
                k = _pack(e0, e1, e2)
                v = t.get(k, 0) + c
                if v:
                    t[k] = v
                else:
                    t.pop(k, None)
        return cls(t)

    def terms(self) -> Dict[Monomial, object]:
        """Monomial to coefficient map in increasing lexicographic order."""
        return {Monomial(_unpack(k)): _norm_coeff(c) for k, c in sorted(self._t.items())}

    # predicates ---------------------------------------------------------
    def __bool__(self):
        return bool(self._t)

    def is_zero(self) -> bool:
        return not self._t

    def is_unit(self) -> bool:
        """Units of the Laurent ring are nonzero constants times monomials."""
        return len(self._t) == 1

    def is_q_only(self) -> bool:
        return all((k & ((1 << 42) - 1)) == (_BIAS & ((1 << 42) - 1)) for k in self._t)

    def is_constant(self) -> bool:
        return not self._t or (len(self._t) == 1 and _BIAS in self._t)

    def constant_value(self):
        return _norm_coeff(self._t.get(_BIAS, 0))

    def leading(self) -> Tuple[Monomial, object]:
        k = max(self._t)
        return Monomial(_unpack(k)), self._t[k]

    def degree_bounds(self) -> List[Tuple[int, int]]:
        """Per-variable (min, max) exponents."""
        ex = [_unpack(k) for k in self._t]
        return [(min(e[i] for e in ex), max(e[i] for e in ex)) for i in range(3)]

    def __len__(self):
        return len(self._t)

    # arithmetic ---------------------------------------------------------
    def __add__(self, other):
        if isinstance(other, LaurentPoly):
            if len(other._t) > len(self._t):
                big, small = other._t, self._t
            else:
                big, small = self._t, other._t
            t = dict(big)
            for k, c in small.items():
                v = t.get(k, 0) + c
                if v:
                    t[k] = v
                else:
                    del t[k]
            return LaurentPoly(t)
        if isinstance(other, (int, Fraction)):
            if not other:
                return self
            t = dict(self._t)
            v = t.get(_BIAS, 0) + other
            if v:
                t[_BIAS] = v
            else:
                del t[_BIAS]
            return LaurentPoly(t)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({k: -c for k, c in self._t.items()})

    def __sub__(self, other):
        if isinstance(other, LaurentPoly):
            t = dict(self._t)
            for k, c in other._t.items():
                v = t.get(k, 0) - c
                if v:
                    t[k] = v
                else:
                    del t[k]
            return LaurentPoly(t)
        if isinstance(other, (int, Fraction)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, Fraction)):
            return (-self) + other
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, LaurentPoly):
            a, b = self._t, other._t
            if len(a) < len(b):
                a, b = b, a
            if not b:
                return LaurentPoly()
            if len(b) == 1:
                (kb, cb), = b.items()
                d = kb - _BIAS
                return LaurentPoly({k + d: c * cb for k, c in a.items()})
            t: Dict[int, object] = {}
            get = t.get
            for kb, cb in b.items():
                d = kb - _BIAS
                for ka, ca in a.items():
                    k = ka + d
                    t[k] = get(k, 0) + ca * cb
            return LaurentPoly({k: c for k, c in t.items() if c})
        if isinstance(other, (int, Fraction)):
            if not other:
                return LaurentPoly()
            return LaurentPoly({k: c * other for k, c in self._t.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return inverse(self) ** (-e)
        r = ONE
        b = self
        while e:
            if e & 1:
                r = r * b
            e >>= 1
            if e:
                b = b * b
        return r

    def __truediv__(self, other):
        return field_div(self, other)

    def __rtruediv__(self, other):
        return field_div(other, self)

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self._t == other._t
        if isinstance(other, (int, Fraction)):
            if not other:
                return not self._t
            return len(self._t) == 1 and self._t.get(_BIAS) == other
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._t.items()))

    def shift(self, eq: int = 0, e1: int = 0, e2: int = 0) -> "LaurentPoly":
        d = _pack(eq, e1, e2) - _BIAS
        return LaurentPoly({k + d: c for k, c in self._t.items()})

    def map_exponents(self, f) -> "LaurentPoly":
        t: Dict[int, object] = {}
        for k, c in self._t.items():
            nk = _pack(*f(*_unpack(k)))
            v = t.get(nk, 0) + c
            if v:
                t[nk] = v
            else:
                t.pop(nk, None)
        return LaurentPoly(t)

    # printing -----------------------------------------------------------
    def __repr__(self):
        if not self._t:
            return "0"
        out = []
        for k in sorted(self._t, reverse=True):
            c = _norm_coeff(self._t[k])
            e = _unpack(k)
            m = []
            for name, x in zip(("q", "a1", "a2"), e):
                if x == 1:
                    m.append(name)
                elif x:
                    m.append(f"{name}^{x}")
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if not m:
                body = str(a)
            elif a == 1:
                body = "*".join(m)
            else:
                body = f"{a}*" + "*".join(m)
            out.append((sign, body))
        s = ("-" if out[0][0] == "-" else "") + out[0][1]
        for sign, body in out[1:]:
            s += f" {sign} {body}"
        return s

    __str__ = __repr__


def mono(eq: int = 0, e1: int = 0, e2: int = 0, c=1) -> LaurentPoly:
    return LaurentPoly({_pack(eq, e1, e2): c}) if c else LaurentPoly()


def const(c) -> LaurentPoly:
    return mono(0, 0, 0, c)


ONE = const(1)
ZERO = LaurentPoly()
q = mono(1)
a1 = mono(0, 1)
a2 = mono(0, 0, 1)


def inverse(x):
    """Inverse in the fraction field; a LaurentPoly when x is a unit."""
    if isinstance(x, (int, Fraction)):
        return Fraction(1, 1) / x
    if isinstance(x, LaurentPoly):
        if x.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if len(x._t) == 1:
            (k, c), = x._t.items()
            return LaurentPoly({2 * _BIAS - k: _norm_coeff(Fraction(1) / c)})
        return RatFunc._make(ONE, x)
    if isinstance(x, RatFunc):
        return RatFunc._make(x.den, x.num)
    raise TypeError(type(x))


def _as_poly(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return const(x)
    raise TypeError(type(x))


def field_div(x, y):
    if isinstance(y, (int, Fraction)):
        return _norm_coeff(x * (Fraction(1) / y)) if isinstance(x, (int, Fraction)) else x * _norm_coeff(Fraction(1) / y)
    return x * inverse(y)


# ----------------------------------------------------------------------
# univariate helpers (q only), used for gcd in the fraction field


def _content_key(p: LaurentPoly) -> int:
    """Packed key of the monomial gcd of p."""
    ex = [_unpack(k) for k in p._t]
    return _pack(min(e[0] for e in ex), min(e[1] for e in ex), min(e[2] for e in ex))


def _strip_content(p: LaurentPoly) -> Tuple[LaurentPoly, int]:
    ck = _content_key(p)
    d = ck - _BIAS
    return LaurentPoly({k - d: c for k, c in p._t.items()}), d


def _to_dense(p: LaurentPoly) -> List[Fraction]:
    # p must be q-only with nonnegative exponents
    deg = max((k - _BIAS) // _QSTEP for k in p._t)
    out = [Fraction(0)] * (deg + 1)
    for k, c in p._t.items():
        out[(k - _BIAS) // _QSTEP] = Fraction(c)
    return out


def _from_dense(v: Sequence[Fraction]) -> LaurentPoly:
    return LaurentPoly({_BIAS + i * _QSTEP: _norm_coeff(c) for i, c in enumerate(v) if c})


def _dense_rem(a: List[Fraction], b: List[Fraction]) -> List[Fraction]:
    a = list(a)
    lb = b[-1]
    db = len(b) - 1
    while len(a) - 1 >= db and any(a):
        if a[-1] == 0:
            a.pop()
            continue
        f = a[-1] / lb
        s = len(a) - 1 - db
        for i in range(db + 1):
            a[s + i] -= f * b[i]
        a.pop()
    while a and a[-1] == 0:
        a.pop()
    return a


def _dense_div(a: List[Fraction], b: List[Fraction]) -> List[Fraction]:
    a = list(a)
    db = len(b) - 1
    out = [Fraction(0)] * (len(a) - db)
    for s in range(len(a) - 1 - db, -1, -1):
        f = a[s + db] / b[-1]
        out[s] = f
        if f:
            for i in range(db + 1):
                a[s + i] -= f * b[i]
    return out


def _dense_gcd(a: List[Fraction], b: List[Fraction]) -> List[Fraction]:
    while b:
        a, b = b, _dense_rem(a, b)
    lc = a[-1]
    return [c / lc for c in a]


def _univariate_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Monic gcd of two q-only polynomials with nonnegative exponents."""
    da, db = _to_dense(a), _to_dense(b)
    return _from_dense(_dense_gcd(da, db))


class RatFunc:
    """Element of the fraction field, num/den with den normalised.

    The denominator carries no monomial content and has leading coefficient 1.
    For q-only values a full gcd is taken; in several variables only monomial
    content is cleared.  Arithmetic returns a LaurentPoly whenever the
    denominator becomes 1.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den):
        self.num = num
        self.den = den

    @staticmethod
    def _make(num, den):
        num = _as_poly(num)
        den = _as_poly(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            return ZERO
        if len(den._t) == 1:
            return num * inverse(den)
        den, d = _strip_content(den)
        if d:
            num = LaurentPoly({k - d: c for k, c in num._t.items()})
        if den.is_q_only() and num.is_q_only():
            n2, dn = _strip_content(num)
            g = _univariate_gcd(n2, den)
            if len(g._t) > 1:
                n2 = _from_dense(_dense_div(_to_dense(n2), _to_dense(g)))
                den = _from_dense(_dense_div(_to_dense(den), _to_dense(g)))
                num = LaurentPoly({k + dn: c for k, c in n2._t.items()})
            if len(den._t) == 1:
                return num * inverse(den)
        elif len(num._t) <= 64 and len(den._t) <= 16:
            c = exact_divide(num, den)
            if c is not None:
                return c
        lk = max(den._t)
        lc = den._t[lk]
        if lc != 1:
            f = Fraction(1) / lc
            den = den * f
            num = num * f
        r = RatFunc(num, den)
        return r

    def simplify(self):
        """Try an exact division num/den; used outside hot loops."""
        c = exact_divide(self.num, self.den)
        return c if c is not None else self

    def _parts(other):
        if isinstance(other, RatFunc):
            return other.num, other.den
        if isinstance(other, LaurentPoly):
            return other, ONE
        if isinstance(other, (int, Fraction)):
            return const(other), ONE
        return None

    def __add__(self, other):
        p = RatFunc._parts(other)
        if p is None:
            return NotImplemented
        n2, d2 = p
        if d2 == self.den:
            return RatFunc._make(self.num + n2, self.den)
        if d2 is ONE or d2 == ONE:
            return RatFunc._make(self.num + n2 * self.den, self.den)
        m = exact_divide(d2, self.den) if len(d2) >= len(self.den) else None
        if m is not None:
            return RatFunc._make(self.num * m + n2, d2)
        m = exact_divide(self.den, d2) if len(self.den) > len(d2) else None
        if m is not None:
            return RatFunc._make(self.num + n2 * m, self.den)
        return RatFunc._make(self.num * d2 + n2 * self.den, self.den * d2)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        p = RatFunc._parts(other)
        if p is None:
            return NotImplemented
        return self + RatFunc(-p[0], p[1])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        p = RatFunc._parts(other)
        if p is None:
            return NotImplemented
        return RatFunc._make(self.num * p[0], self.den * p[1])

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * inverse(other if not isinstance(other, (int, Fraction)) else const(other))

    def __rtruediv__(self, other):
        return inverse(self) * other

    def __pow__(self, e: int):
        if e < 0:
            return inverse(self) ** (-e)
        r = ONE
        for _ in range(e):
            r = r * self
        return r

    def __eq__(self, other):
        p = RatFunc._parts(other)
        if p is None:
            return NotImplemented
        return self.num * p[1] == p[0] * self.den

    __hash__ = None

    def __bool__(self):
        return not self.num.is_zero()

    def is_zero(self):
        return self.num.is_zero()

    def is_q_only(self):
        return self.num.is_q_only() and self.den.is_q_only()

    def __repr__(self):
        return f"({self.num})/({self.den})"

    __str__ = __repr__


# ----------------------------------------------------------------------


def quantum_int(r: int, x=None) -> LaurentPoly:
    """[r]_x = x^(r-1) + x^(r-3) + ... + x^(1-r) for x in {q, -q^-1}."""
    if x is None:
        x = q
    if r < 0:
        return -quantum_int(-r, x)
    if r == 0:
        return ZERO
    if x == q:
        return LaurentPoly({_BIAS + e * _QSTEP: 1 for e in range(1 - r, r, 2)})
    if x == -inverse(q):
        sign = -1 if (r - 1) % 2 else 1
        return quantum_int(r, q) * sign
    raise ValueError("quantum integers are defined for x in {q, -q^-1}")


def quantum_factorial(r: int, x=None) -> LaurentPoly:
    out = ONE
    for j in range(2, r + 1):
        out = out * quantum_int(j, x)
    return out


def exact_divide(a, b) -> Optional[LaurentPoly]:
    """a/b in the Laurent ring, or None if b does not divide a."""
    a = _as_poly(a)
    b = _as_poly(b)
    if b.is_zero():
        raise ZeroDivisionError("division by zero")
    if a.is_zero():
        return ZERO
    if b.is_unit():
        return a * inverse(b)
    ba, bb = a.degree_bounds(), b.degree_bounds()
    lo = [ba[i][0] - bb[i][0] for i in range(3)]
    hi = [ba[i][1] - bb[i][1] for i in range(3)]
    if any(lo[i] > hi[i] for i in range(3)):
        return None
    lkb = max(b._t)
    lcb = b._t[lkb]
    r = dict(a._t)
    quo: Dict[int, object] = {}
    bt = list(b._t.items())
    while r:
        lk = max(r)
        d = lk - lkb
        e = _unpack(d + _BIAS)
        if any(e[i] < lo[i] or e[i] > hi[i] for i in range(3)):
            return None
        f = _norm_coeff(Fraction(r[lk]) / lcb)
        quo[d + _BIAS] = f
        for kb, cb in bt:
            k = kb + d
            v = r.get(k, 0) - f * cb
            if v:
                r[k] = v
            else:
                r.pop(k, None)
    return LaurentPoly(quo)


def specialise(x, k: int):
    """alpha1 -> q^-2, alpha2 -> q^(2k); applies to LaurentPoly or RatFunc."""
    if isinstance(x, (int, Fraction)):
        return x
    if isinstance(x, RatFunc):
        return RatFunc._make(specialise(x.num, k), specialise(x.den, k))
    t: Dict[int, object] = {}
    for key, c in x._t.items():
        e0, e1, e2 = _unpack(key)
        nk = _BIAS + (e0 - 2 * e1 + 2 * k * e2) * _QSTEP
        v = t.get(nk, 0) + c
        if v:
            t[nk] = v
        else:
            t.pop(nk, None)
    return LaurentPoly(t)


# ----------------------------------------------------------------------
# coefficient domains


@dataclass(frozen=True)
class CoefficientDomain:
    tag: str
    k: Optional[int] = None

    def __str__(self):
        return self.tag if self.k is None else f"{self.tag}({self.k})"

    @property
    def specialised(self) -> bool:
        return self.tag in ("Ck_q", "Cq", "Fq")

    @property
    def is_field(self) -> bool:
        return self.tag in ("F_full", "Fq")


R_FULL = CoefficientDomain("R_full")
F_FULL = CoefficientDomain("F_full")
CQ = CoefficientDomain("Cq")
FQ = CoefficientDomain("Fq")


def ck_q(k: int) -> CoefficientDomain:
    return CoefficientDomain("Ck_q", k)


def promote(d1: CoefficientDomain, d2: CoefficientDomain) -> CoefficientDomain:
    if d1 == d2:
        return d1
    if d1.specialised != d2.specialised:
        raise ValueError(f"cannot mix {d1} and {d2}")
    if d1.specialised:
        return FQ
    return F_FULL


def _q_cyclotomic_bound(k: int, bound: int) -> LaurentPoly:
    out = ONE
    for i in range(1, k + 1):
        out = out * (mono(2 * i) - 1) ** bound
    return out


def in_domain(x, dom: CoefficientDomain, bound: int = 4) -> bool:
    """Membership of a scalar in the ring tagged by dom."""
    if isinstance(x, (int, Fraction)):
        return True
    if dom.tag == "F_full":
        return True
    if dom.tag == "Fq":
        return x.is_q_only()
    if dom.tag == "R_full":
        return isinstance(x, LaurentPoly)
    if dom.tag == "Cq":
        return isinstance(x, LaurentPoly) and x.is_q_only()
    if dom.tag == "Ck_q":
        if isinstance(x, LaurentPoly):
            return x.is_q_only()
        if not x.is_q_only():
            return False
        return exact_divide(_q_cyclotomic_bound(dom.k, bound), x.den) is not None
    raise ValueError(dom)


def common_denominator(xs: Iterable) -> LaurentPoly:
    """A common denominator of scalars; the lcm when everything is q-only."""
    L = ONE
    for x in xs:
        if not isinstance(x, RatFunc):
            continue
        d = x.den
        if exact_divide(L, d) is not None:
            continue
        if L.is_q_only() and d.is_q_only():
            g = _univariate_gcd(_strip_content(L)[0], _strip_content(d)[0])
            L = L * exact_divide(d, g)
        else:
            L = L * d
    return L


# ----------------------------------------------------------------------
# linear algebra


def _is_zero(x) -> bool:
    if isinstance(x, (int, Fraction)):
        return x == 0
    return x.is_zero()


class EchelonBasis:
    """Incrementally maintained reduced row echelon form.

    Rows are sparse dicts column -> scalar.  ``order`` maps each column to
    its position; the pivot of a row is its first nonzero column in that
    order and carries coefficient 1.  Every stored row is zero on all other
    pivot columns, so reduction is a single pass.
    """

    def __init__(self, order: Dict[object, int]):
        self.order = order
        self.rows: Dict[object, Dict[object, object]] = {}

    def __len__(self):
        return len(self.rows)

    def reduce(self, vec: Dict[object, object]) -> Dict[object, object]:
        v = {c: x for c, x in vec.items() if not _is_zero(x)}
        rows = self.rows
        hits = [c for c in v if c in rows]
        for c in hits:
            f = v.pop(c)
            for col, x in rows[c].items():
                if col == c:
                    continue
                nv = v.get(col, 0) - f * x if col in v else -(f * x)
                if _is_zero(nv):
                    v.pop(col, None)
                else:
                    v[col] = nv
        return v

    def insert(self, vec: Dict[object, object], reduced: bool = False):
        """Add vec to the row space; returns the new pivot column or None."""
        v = vec if reduced else self.reduce(vec)
        if not v:
            return None
        order = self.order
        piv = min(v, key=order.__getitem__)
        inv = inverse(v[piv])
        row = {c: (x * inv if c != piv else 1) for c, x in v.items()}
        row[piv] = 1
        for r in self.rows.values():
            f = r.get(piv)
            if f is None:
                continue
            del r[piv]
            for col, x in row.items():
                if col == piv:
                    continue
                nv = r.get(col, 0) - f * x
                if _is_zero(nv):
                    r.pop(col, None)
                else:
                    r[col] = nv
        self.rows[piv] = row
        return piv

    def pivots(self) -> List[object]:
        return sorted(self.rows, key=self.order.__getitem__)


def row_reduce(rows: Iterable[Sequence], ncols: Optional[int] = None):
    """RREF of dense rows; returns (pivot columns, reduced rows)."""
    rows = [list(r) for r in rows]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    eb = EchelonBasis({i: i for i in range(ncols)})
    for r in rows:
        eb.insert({i: x for i, x in enumerate(r)})
    piv = eb.pivots()
    out = []
    for p in piv:
        row = eb.rows[p]
        out.append([row.get(i, 0) for i in range(ncols)])
    return piv, out


MOD_P = (1 << 61) - 1


def eval_mod_p(x, point: Tuple[int, int, int], p: int = MOD_P) -> int:
    """Evaluate a scalar at (q, alpha1, alpha2) = point modulo p."""
    if isinstance(x, int):
        return x % p
    if isinstance(x, Fraction):
        return x.numerator * pow(x.denominator, -1, p) % p
    if isinstance(x, RatFunc):
        d = eval_mod_p(x.den, point, p)
        if d == 0:
            raise ZeroDivisionError("denominator vanishes at evaluation point")
        return eval_mod_p(x.num, point, p) * pow(d, -1, p) % p
    s = 0
    for key, c in x._t.items():
        e = _unpack(key)
        t = eval_mod_p(c, point, p)
        for base, ex in zip(point, e):
            if ex:
                t = t * pow(base, ex, p) % p
        s += t
    return s % p


def rank_mod_p(rows: Sequence[Sequence[int]], p: int = MOD_P) -> int:
    """Rank of an integer matrix over F_p."""
    m = [[x % p for x in r] for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = None
        for r in range(rank, len(m)):
            if m[r][c]:
                piv = r
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][c], -1, p)
        pr = [x * inv % p for x in m[rank]]
        m[rank] = pr
        for r in range(len(m)):
            if r != rank and m[r][c]:
                f = m[r][c]
                m[r] = [(x - f * y) % p for x, y in zip(m[r], pr)]
        rank += 1
    return rank


# ----------------------------------------------------------------------
# JSON


def poly_to_json(p) -> list:
    p = _as_poly(p)
    out = []
    for (e0, e1, e2), c in p.terms().items():
        c = Fraction(c)
        out.append({"q": e0, "a1": e1, "a2": e2, "num": str(c.numerator), "den": str(c.denominator)})
    return out


def poly_from_json(data: list) -> LaurentPoly:
    terms = {}
    for t in data:
        c = Fraction(int(t["num"]), int(t["den"]))
        key = (int(t["q"]), int(t["a1"]), int(t["a2"]))
        terms[key] = terms.get(key, 0) + c
    return LaurentPoly.from_terms({k: _norm_coeff(c) for k, c in terms.items()})


def scalar_to_json(x):
    if isinstance(x, RatFunc):
        return {"num": poly_to_json(x.num), "den": poly_to_json(x.den)}
    return poly_to_json(x)


def scalar_from_json(data):
    if isinstance(data, dict):
        return RatFunc._make(poly_from_json(data["num"]), poly_from_json(data["den"]))
    return poly_from_json(data)


def dumps_scalar(x) -> str:
    return json.dumps(scalar_to_json(x))
