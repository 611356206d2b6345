"""Signed permutations, lengths, normal forms and pattern predicates.

An element of B_n is stored as its window ``(b_1, ..., b_n)``, a tuple of
nonzero integers, a negative entry standing for a barred one.  Generators
act on the right: s_i (i >= 1) swaps positions i and i+1, s_0 negates b_1.
Permutations of S_m are windows with positive entries and only use
generators i >= 1.

>>> right_act((1, 2), 0)
(-1, 2)
>>> length((-2, -1))
3
>>> canonical_reduced_word((-2, -1))
(0, 1, 0)
>>> avoids((3, 5, -6, 1, -4, -2), Pattern.ONEBAR_TWOBAR)
True
>>> avoids((3, -2, -5, 4, 1), Pattern.FC_TOP)
False
"""

from __future__ import annotations

import enum
import itertools
from collections import deque
from functools import lru_cache
from typing import Dict, List, NewType, Optional, Sequence, Tuple

__all__ = [
    "Window",
    "Pattern",
    "identity",
    "right_act",
    "left_act",
    "inverse",
    "compose",
    "from_word",
    "is_right_descent",
    "is_left_descent",
    "length",
    "ell0",
    "canonical_reduced_word",
    "normal_form",
    "factor_word",
    "reduced_words",
    "cayley_bfs",
    "avoids",
    "enumerate_signed",
    "enumerate_perms",
    "double_coset_min_reps",
    "FactorFinder",
    "longest_top",
    "window_str",
    "parse_window",
]

Window = NewType("Window", Tuple[int, ...])

ENUM_BOUND = 7
COSET_BOUND = 8


class Pattern(enum.Enum):
    ONEBAR_TWOBAR = "onebar_twobar"
    FC_TOP = "fc_top"
    BARS_DESC_LIMIT = "bars_desc_limit"
    DOUBLED_321 = "doubled_321"
    # fully commutative top elements with at most k barred entries
    FC_TOP_LIMIT = "fc_top_limit"


def identity(n: int) -> Window:
    return Window(tuple(range(1, n + 1)))


def right_act(w: Sequence[int], i: int) -> Window:
    n = len(w)
    if i == 0:
        if n == 0:
            raise IndexError("s_0 needs n >= 1")
        return Window((-w[0],) + tuple(w[1:]))
    if not 1 <= i < n:
        raise IndexError(f"generator s_{i} out of range for n={n}")
    w = list(w)
    w[i - 1], w[i] = w[i], w[i - 1]
    return Window(tuple(w))


def left_act(w: Sequence[int], i: int) -> Window:
    """s_i * w; acts on values rather than positions."""
    n = len(w)
    if i == 0:
        if n == 0:
            raise IndexError("s_0 needs n >= 1")
        return Window(tuple(-x if abs(x) == 1 else x for x in w))
    if not 1 <= i < n:
        raise IndexError(f"generator s_{i} out of range for n={n}")
    out = []
    for x in w:
        a = abs(x)
        if a == i:
            out.append(i + 1 if x > 0 else -(i + 1))
        elif a == i + 1:
            out.append(i if x > 0 else -i)
        else:
            out.append(x)
    return Window(tuple(out))


def inverse(w: Sequence[int]) -> Window:
    out = [0] * len(w)
    for p, x in enumerate(w, 1):
        out[abs(x) - 1] = p if x > 0 else -p
    return Window(tuple(out))


def compose(u: Sequence[int], v: Sequence[int]) -> Window:
    """The product u*v; its window is i -> u(v(i))."""
    return Window(tuple(u[x - 1] if x > 0 else -u[-x - 1] for x in v))


def from_word(n: int, word: Sequence[int]) -> Window:
    w = identity(n)
    for i in word:
        w = right_act(w, i)
    return w


def is_right_descent(w: Sequence[int], i: int) -> bool:
    if i == 0:
        return w[0] < 0
    return w[i - 1] > w[i]


def is_left_descent(w: Sequence[int], i: int) -> bool:
    return is_right_descent(inverse(w), i)


@lru_cache(maxsize=None)
def length(w: Tuple[int, ...]) -> int:
    """Coxeter length by greedy removal of right descents."""
    return len(canonical_reduced_word(w))


def ell0(w: Sequence[int]) -> int:
    """Number of occurrences of s_0 in any reduced word."""
    return sum(1 for x in w if x < 0)


def factor_word(n: int, m: int) -> Tuple[int, ...]:
    """Word of the factor [n, m].

    m >= 1 gives s_n ... s_m, m = 0 gives s_n ... s_1 s_0 and m < 0 gives
    s_n ... s_1 s_0 s_1 ... s_|m|.
    """
    if m >= 1:
        return tuple(range(n, m - 1, -1))
    return tuple(range(n, -1, -1)) + tuple(range(1, -m + 1))


@lru_cache(maxsize=None)
def normal_form(w: Tuple[int, ...]) -> Tuple[Tuple[int, int], ...]:
    """Factors [n_1, m_1] ... [n_r, m_r] with n_1 < ... < n_r.

    Found by peeling off the position and sign of the largest letter.
    """
    w = tuple(w)
    factors = []
    cur = w
    for j in range(len(w) - 1, -1, -1):
        v = j + 1
        p = next(idx for idx, x in enumerate(cur, 1) if abs(x) == v)
        if cur[p - 1] > 0:
            if p == v:
                continue
            m = p
        else:
            m = -(p - 1)
        word = factor_word(j, m)
        for i in reversed(word):
            cur = right_act(cur, i)
        factors.append((j, m))
    return tuple(reversed(factors))


def canonical_reduced_word(w: Sequence[int]) -> Tuple[int, ...]:
    out: Tuple[int, ...] = ()
    for n, m in normal_form(tuple(w)):
        out += factor_word(n, m)
    return out


def reduced_words(w: Sequence[int]) -> List[Tuple[int, ...]]:
    """All reduced words, by recursion on right descents (small n only)."""
    w = tuple(w)
    gens = range(len(w))
    if all(not is_right_descent(w, i) for i in gens):
        return [()]
    out = []
    for i in gens:
        if is_right_descent(w, i):
            for u in reduced_words(right_act(w, i)):
                out.append(u + (i,))
    return out


def cayley_bfs(n: int, type_a: bool = False) -> Dict[Window, int]:
    """Distances from the identity in the Cayley graph (oracle for length)."""
    gens = range(1, n) if type_a else range(n)
    start = identity(n)
    dist = {start: 0}
    dq = deque([start])
    while dq:
        w = dq.popleft()
        for i in gens:
            u = right_act(w, i)
            if u not in dist:
                dist[u] = dist[w] + 1
                dq.append(u)
    return dist


def _has_decreasing_three(seq: Sequence[int]) -> bool:
    # longest decreasing subsequence >= 3
    best = []
    for j, x in enumerate(seq):
        b = 1
        for i in range(j):
            if seq[i] > x and best[i] + 1 > b:
                b = best[i] + 1
        if b >= 3:
            return True
        best.append(b)
    return False


def avoids(w: Sequence[int], pattern: Pattern, k: Optional[int] = None) -> bool:
    """Pattern predicate on a window."""
    n = len(w)
    if pattern is Pattern.ONEBAR_TWOBAR:
        prev = None
        for x in w:
            if x < 0:
                if prev is not None and -x > prev:
                    return False
                prev = -x
        return True
    if pattern is Pattern.BARS_DESC_LIMIT:
        if k is None:
            raise ValueError("BARS_DESC_LIMIT needs k")
        return ell0(w) <= k and avoids(w, Pattern.ONEBAR_TWOBAR)
    if pattern is Pattern.FC_TOP_LIMIT:
        if k is None:
            raise ValueError("FC_TOP_LIMIT needs k")
        return ell0(w) <= k and avoids(w, Pattern.FC_TOP)
    if pattern is Pattern.FC_TOP:
        for j in range(n):
            if w[j] < 0:
                for i in range(j):
                    if abs(w[i]) < -w[j]:
                        return False
        for j in range(1, n - 1):
            b = w[j]
            if b <= 0:
                continue
            if any(abs(w[i]) > b for i in range(j)) and any(abs(w[l]) < b for l in range(j + 1, n)):
                return False
        return True
    if pattern is Pattern.DOUBLED_321:
        seq = [-x for x in reversed(w)] + list(w)
        return not _has_decreasing_three(seq)
    raise ValueError(pattern)


def enumerate_signed(n: int, pattern: Optional[Pattern] = None, k: Optional[int] = None,
                     bound: int = ENUM_BOUND) -> List[Window]:
    """Signed permutations (optionally avoiding a pattern) in lexicographic order."""
    if n > bound:
        raise ValueError(f"enumeration bound exceeded: n={n} > {bound}")
    out = []
    for perm in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((1, -1), repeat=n):
            w = Window(tuple(s * x for s, x in zip(signs, perm)))
            if pattern is None or avoids(w, pattern, k):
                out.append(w)
    out.sort()
    return out


def enumerate_perms(m: int) -> List[Window]:
    return [Window(p) for p in itertools.permutations(range(1, m + 1))]


def double_coset_min_reps(k: int, n: int, bound: int = COSET_BOUND) -> List[Window]:
    """Minimal length representatives of S_k \\ S_{k+n} / S_k.

    Scans S_{k+n} in length order and marks each double coset when its
    first (hence minimal) element is met.
    """
    m = k + n
    if m > bound:
        raise ValueError(f"enumeration bound exceeded: k+n={m} > {bound}")
    perms = enumerate_perms(m)
    perms.sort(key=lambda w: (length(w), w))
    sk = [Window(tuple(p) + tuple(range(k + 1, m + 1))) for p in itertools.permutations(range(1, k + 1))]
    seen = set()
    reps = []
    for w in perms:
        if w in seen:
            continue
        reps.append(w)
        for u in sk:
            uw = compose(u, w)
            for v in sk:
                seen.add(compose(uw, v))
    return reps


def longest_top(n: int) -> Window:
    """The element g_0 . g_1 g_0 . ... . g_{n-1} ... g_0, window (-n, ..., -1)."""
    return Window(tuple(range(-n, 0)))


class FactorFinder:
    """Length-additive factorisations w = u * t * v for a fixed t.

    For each y we search a left-prefix match of t by stripping left
    descents; results are memoised on y.
    """

    def __init__(self, t: Sequence[int]):
        self.t = Window(tuple(t))
        self.lt = length(self.t)
        self._memo: Dict[Window, Optional[Tuple[Window, Window]]] = {}

    def _tinv(self, n):
        t = tuple(self.t) + tuple(range(len(self.t) + 1, n + 1))
        return inverse(t), Window(t)

    def find(self, w: Sequence[int]) -> Optional[Tuple[Window, Window]]:
        """Return (u, v) with w = u t v and lengths adding, or None."""
        w = Window(tuple(w))
        n = len(w)
        if n < len(self.t):
            return None
        tinv, _ = self._tinv(n)
        return self._search(w, tinv)

    def _search(self, y: Window, tinv) -> Optional[Tuple[Window, Window]]:
        memo = self._memo
        if y in memo:
            return memo[y]
        ly = length(y)
        res = None
        if ly >= self.lt:
            v = compose(tinv, y)
            if length(v) == ly - self.lt:
                res = (identity(len(y)), v)
        if res is None:
            yinv = inverse(y)
            for i in range(len(y)):
                if is_right_descent(yinv, i):
                    r = self._search(left_act(y, i), tinv)
                    if r is not None:
                        u, v = r
                        res = (left_act(u, i), v)
                        break
        memo[y] = res
        return res


def window_str(w: Sequence[int]) -> str:
    return ",".join(str(x) for x in w)


def parse_window(s: str) -> Window:
    s = s.strip()
    if not s:
        return Window(())
    return Window(tuple(int(x) for x in s.split(",")))
