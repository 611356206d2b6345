"""A small expression language for Hecke, quotient and fused elements.

Atoms: integers, ring literals q, a1, a2; generators g0.., e0..;
E(n, x, b), tildeE(variant, n, b), Lambda(x, i, j), P(k).  In a fused
context also S0, S1.., T, U(i) and Psigma(i, j, ...) = P_k s_i s_j ... P_k.
Operators: + - * / (by scalars only) and ^ (negative powers for
invertible scalars).

>>> from symhecke.hecke import Ambient
>>> alg = HeckeAlgebra(Ambient("B", 1))
>>> evaluate("E(1, q, 1)", alg)
(1)*1 + (-a2^-1)*g[0]
>>> evaluate("g0*g0 - (a1 + a2)*g0 + a1*a2", alg)
0
>>> parse("g0 + * g1")
Traceback (most recent call last):
...
symhecke.expr.ParseError: unexpected '*' at position 5
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import List, Sequence, Tuple, Union

from . import coxeter as cx
from .fused import FusedContext, FusedElement
from .hecke import (
    Ambient,
    HeckeElement,
    X_MQ,
    X_Q,
    e_gen,
    gen,
    one,
    quasi_idempotent,
    symmetriser,
    symmetriser_scalar,
    tilde_E,
)
from .ring import LaurentPoly, RatFunc, a1, a2, const, inverse, q

__all__ = [
    "ParseError",
    "Node",
    "parse",
    "evaluate",
    "HeckeAlgebra",
    "FusedAlgebra",
    "serialize",
    "serialize_scalar",
]


class ParseError(ValueError):
    def __init__(self, msg: str, pos: int):
        super().__init__(f"{msg} at position {pos}")
        self.pos = pos


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


def _tokenize(s: str) -> List[Tuple[str, str, int]]:
    out = []
    pos = 0
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if m is None:
            break
        if m.group(1):
            out.append(("int", m.group(1), m.start(1)))
        elif m.group(2):
            out.append(("name", m.group(2), m.start(2)))
        elif m.group(3):
            out.append(("op", m.group(3), m.start(3)))
        pos = m.end()
    out.append(("end", "", len(s)))
    return out


@dataclass
class Node:
    kind: str  # num, name, call, neg, add, sub, mul, div, pow
    value: object = None
    args: Tuple["Node", ...] = ()
    pos: int = 0


class _Parser:
    def __init__(self, s: str):
        self.toks = _tokenize(s)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, op: str):
        t = self.take()
        if t[1] != op:
            raise ParseError(f"expected {op!r}", t[2])
        return t

    def expr(self) -> Node:
        node = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            t = self.take()
            rhs = self.term()
            node = Node("add" if t[1] == "+" else "sub", args=(node, rhs), pos=t[2])
        return node

    def term(self) -> Node:
        node = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] in ("*", "/"):
            t = self.take()
            rhs = self.unary()
            node = Node("mul" if t[1] == "*" else "div", args=(node, rhs), pos=t[2])
        return node

    def unary(self) -> Node:
        t = self.peek()
        if t[0] == "op" and t[1] == "-":
            self.take()
            return Node("neg", args=(self.unary(),), pos=t[2])
        if t[0] == "op" and t[1] == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> Node:
        base = self.atom()
        t = self.peek()
        if t[0] == "op" and t[1] == "^":
            self.take()
            sign = 1
            s = self.peek()
            if s[0] == "op" and s[1] in "+-":
                self.take()
                sign = -1 if s[1] == "-" else 1
            e = self.take()
            if e[0] != "int":
                raise ParseError("expected an integer exponent", e[2])
            return Node("pow", sign * int(e[1]), (base,), t[2])
        return base

    def atom(self) -> Node:
        t = self.take()
        kind, text, pos = t
        if kind == "int":
            return Node("num", int(text), pos=pos)
        if kind == "name":
            if self.peek()[1] == "(" and self.peek()[0] == "op":
                self.take()
                args = []
                if self.peek()[1] != ")":
                    args.append(self.expr())
                    while self.peek()[1] == ",":
                        self.take()
                        args.append(self.expr())
                self.expect(")")
                return Node("call", text, tuple(args), pos)
            return Node("name", text, pos=pos)
        if kind == "op" and text == "(":
            node = self.expr()
            self.expect(")")
            return node
        if kind == "end":
            raise ParseError("unexpected end of input", pos)
        raise ParseError(f"unexpected {text!r}", pos)


def parse(s: str) -> Node:
    p = _Parser(s)
    node = p.expr()
    t = p.peek()
    if t[0] != "end":
        raise ParseError(f"unexpected {t[1]!r}", t[2])
    return node


# ----------------------------------------------------------------------
# algebras


_SCALARS = (int, LaurentPoly, RatFunc)


def _is_scalar(x) -> bool:
    return isinstance(x, _SCALARS)


class HeckeAlgebra:
    """Evaluation inside H(n) (type B) or H(n) of type A, optionally reduced in a quotient."""

    def __init__(self, ambient: Ambient, quotient=None):
        self.ambient = ambient
        self.quotient = quotient

    def one(self):
        return one(self.ambient)

    def scalar(self, x):
        return self.ambient.scalar(x) if not isinstance(x, int) else x

    def lift(self, x):
        return x

    def name(self, name: str, pos: int):
        m = re.fullmatch(r"([ge])(\d+)", name)
        if m:
            i = int(m.group(2))
            try:
                return gen(self.ambient, i) if m.group(1) == "g" else e_gen(self.ambient, i)
            except IndexError as exc:
                raise ParseError(str(exc), pos) from None
        raise ParseError(f"unknown identifier {name!r} in a Hecke context", pos)

    def call(self, name: str, args: Sequence, pos: int):
        amb = self.ambient
        if name == "E":
            n, x, b = _args(args, 3, pos, name)
            return quasi_idempotent(amb, _int(n, pos), _x(x, pos), _int(b, pos))
        if name == "tildeE":
            if not args or not isinstance(args[0], str):
                raise ParseError("tildeE needs a variant name", pos)
            n = _int(args[1], pos) if len(args) > 1 else amb.n
            b = _int(args[2], pos) if len(args) > 2 else 1
            try:
                return tilde_E(args[0], amb, n, b)
            except ValueError as exc:
                raise ParseError(str(exc), pos) from None
        if name == "Lambda":
            x, i, j = _args(args, 3, pos, name)
            return symmetriser(amb, _x(x, pos), _int(i, pos), _int(j, pos))
        if name == "P":
            (k,) = _args(args, 1, pos, name)
            k = _int(k, pos)
            if k < 1:
                raise ParseError("P(k) needs k >= 1", pos)
            return symmetriser(amb, X_Q, 1, k - 1) * inverse(symmetriser_scalar(k, X_Q))
        raise ParseError(f"unknown function {name!r} in a Hecke context", pos)

    def finish(self, x):
        if _is_scalar(x):
            x = self.one() * self.scalar(x)
        if self.quotient is not None:
            x = self.quotient.reduce(x)
        return x


class FusedAlgebra:
    """Evaluation inside H_{k,n}; type B expressions are sent through phi."""

    def __init__(self, ctx: FusedContext):
        self.ctx = ctx
        self.bamb = Ambient("B", ctx.n, ctx.k)
        self.hecke = HeckeAlgebra(self.bamb)

    def one(self):
        return self.ctx.P()

    def scalar(self, x):
        return self.bamb.scalar(x) if not isinstance(x, int) else x

    def lift(self, x):
        return self.ctx.phi(x) if isinstance(x, HeckeElement) else x

    def name(self, name: str, pos: int):
        ctx = self.ctx
        if name == "T":
            return _fused(ctx.T, pos)
        m = re.fullmatch(r"S(\d+)", name)
        if m:
            return _fused(lambda: ctx.S(int(m.group(1))), pos)
        return self.hecke.name(name, pos)

    def call(self, name: str, args: Sequence, pos: int):
        if name == "U":
            (i,) = _args(args, 1, pos, name)
            return _fused(lambda: self.ctx.U(_int(i, pos)), pos)
        if name == "P":
            (k,) = _args(args, 1, pos, name)
            if _int(k, pos) != self.ctx.k:
                raise ParseError(f"P({k}) is not the unit of H_(k={self.ctx.k})", pos)
            return self.ctx.P()
        if name == "Psigma":
            word = [_int(a, pos) for a in args]
            if any(not 1 <= i < self.ctx.m for i in word):
                raise ParseError("Psigma takes generator indices 1..k+n-1", pos)
            return self.ctx.element_from_sigma_word(word)
        return self.hecke.call(name, args, pos)

    def finish(self, x):
        if _is_scalar(x):
            return self.one() * self.scalar(x)
        return self.lift(x)


def _fused(f, pos):
    try:
        return f()
    except IndexError as exc:
        raise ParseError(str(exc), pos) from None


def _args(args, count, pos, name):
    if len(args) != count:
        raise ParseError(f"{name} takes {count} arguments", pos)
    return args


def _int(x, pos) -> int:
    if isinstance(x, int):
        return x
    if isinstance(x, LaurentPoly) and x.is_constant():
        v = x.constant_value()
        if int(v) == v:
            return int(v)
    raise ParseError("expected an integer argument", pos)


def _x(x, pos):
    if isinstance(x, (LaurentPoly, RatFunc)) and x == X_Q:
        return X_Q
    if isinstance(x, (LaurentPoly, RatFunc)) and x == X_MQ:
        return X_MQ
    raise ParseError("eigenvalue must be q or -q^-1", pos)


_LITERALS = {"q": q, "a1": a1, "a2": a2}


def _eval(node: Node, alg, top: bool = True):
    kind = node.kind
    if kind == "num":
        return node.value
    if kind == "name":
        if node.value in _LITERALS:
            return _LITERALS[node.value]
        return alg.name(node.value, node.pos)
    if kind == "call":
        if node.value == "tildeE" and node.args and node.args[0].kind == "name":
            rest = [_eval(a, alg) for a in node.args[1:]]
            return alg.call("tildeE", [node.args[0].value] + rest, node.pos)
        return alg.call(node.value, [_eval(a, alg) for a in node.args], node.pos)
    if kind == "neg":
        return -_eval(node.args[0], alg)
    a = _eval(node.args[0], alg)
    if kind == "pow":
        e = node.value
        if _is_scalar(a):
            if e < 0:
                return inverse(a if not isinstance(a, int) else const(a)) ** (-e)
            return a ** e
        if e < 0:
            raise ParseError("negative powers of algebra elements are not supported", node.pos)
        out = alg.one() if not isinstance(a, HeckeElement) else one(a.ambient)
        for _ in range(e):
            out = out * a
        return out
    b = _eval(node.args[1], alg)
    if kind == "div":
        if not _is_scalar(b):
            raise ParseError("can only divide by scalars", node.pos)
        if isinstance(b, int) and b == 0:
            raise ParseError("division by zero", node.pos)
        return a * inverse(b if not isinstance(b, int) else const(b))
    sa, sb = _is_scalar(a), _is_scalar(b)
    if not (sa and sb) and isinstance(a, HeckeElement) != isinstance(b, HeckeElement):
        # mixing a type B element with a fused one
        if not sa:
            a = alg.lift(a)
        if not sb:
            b = alg.lift(b)
    if kind == "mul":
        if sa and not sb:
            return b * alg.scalar(a)
        if sb and not sa:
            return a * alg.scalar(b)
        return a * b
    if kind in ("add", "sub"):
        if sa and not sb:
            a = (one(b.ambient) if isinstance(b, HeckeElement) else alg.one()) * alg.scalar(a)
        if sb and not sa:
            b = (one(a.ambient) if isinstance(a, HeckeElement) else alg.one()) * alg.scalar(b)
        return a + b if kind == "add" else a - b
    raise ParseError(f"bad node {kind}", node.pos)


def evaluate(s: Union[str, Node], alg):
    node = parse(s) if isinstance(s, str) else s
    return alg.finish(_eval(node, alg))


# ----------------------------------------------------------------------
# text serialisation that parses back


def serialize_scalar(x) -> str:
    if isinstance(x, RatFunc):
        return f"({x.num})/({x.den})"
    return f"({x})"


def serialize(e) -> str:
    """An expression string with parse(serialize(e)) evaluating back to e."""
    if isinstance(e, FusedElement):
        parts = []
        for r in e.ctx.reps:
            if r in e.coords:
                word = cx.canonical_reduced_word(r)
                body = "P(%d)" % e.ctx.k if not word else "Psigma(%s)" % ", ".join(map(str, word))
                parts.append(f"{serialize_scalar(e.coords[r])}*{body}")
        return " + ".join(parts) if parts else "0"
    if not e.terms:
        return "0"
    parts = []
    for w, c in e.sorted_terms():
        word = cx.canonical_reduced_word(w)
        body = "*".join(f"g{i}" for i in word) if word else "1"
        parts.append(f"{serialize_scalar(c)}*{body}")
    return " + ".join(parts)
