"""Partitions, hook lengths, Bratteli diagrams and closed-form dimensions.

>>> hook_length_dim((2, 1))
2
>>> d = bratteli("fused", 2, k=3)
>>> sorted(d.dims[2].items())
[((3, 1, 1), 1), ((3, 2), 1), ((4, 1), 2), ((5,), 1)]
>>> [seam_irreducible_dim(4, h, 3) for h in range(4)]
[1, 4, 6, 4]
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import comb, factorial
from typing import Dict, Iterator, List, Optional, Tuple

__all__ = [
    "partitions",
    "hook_length_dim",
    "bipartitions",
    "bipartition_dim",
    "BratteliDiagram",
    "bratteli",
    "FAMILIES",
    "closed_form_dim",
    "seam_irreducible_dim",
    "avoid_count",
]

Partition = Tuple[int, ...]


def partitions(n: int, max_part: Optional[int] = None) -> Iterator[Partition]:
    """Partitions of n as weakly decreasing tuples, largest first."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for p in range(min(n, max_part), 0, -1):
        for rest in partitions(n - p, p):
            yield (p,) + rest


def hook_length_dim(lam: Partition) -> int:
    """Number of standard Young tableaux of shape lam."""
    n = sum(lam)
    conj = [sum(1 for r in lam if r > j) for j in range(lam[0])] if lam else []
    prod = 1
    for i, r in enumerate(lam):
        for j in range(r):
            prod *= (r - j - 1) + (conj[j] - i - 1) + 1
    return factorial(n) // prod


def bipartitions(n: int) -> Iterator[Tuple[Partition, Partition]]:
    for a in range(n, -1, -1):
        for lam in partitions(a):
            for mu in partitions(n - a):
                yield lam, mu


def bipartition_dim(lam: Partition, mu: Partition) -> int:
    n = sum(lam) + sum(mu)
    return comb(n, sum(lam)) * hook_length_dim(lam) * hook_length_dim(mu)


def _add_box(lam: Partition) -> Iterator[Partition]:
    lam = list(lam)
    for i in range(len(lam) + 1):
        if i == len(lam) or (i == 0 or lam[i - 1] > lam[i]):
            new = lam[:]
            if i == len(lam):
                new.append(1)
            else:
                new[i] += 1
            yield tuple(new)


FAMILIES = ("HB", "A", "C", "C2", "fused", "seam")


def _allowed(family: str, node, k: Optional[int], N: Optional[int]) -> bool:
    if family == "HB":
        return True
    if family == "A":
        return len(node[1]) <= 1
    if family in ("C", "C2"):
        NN = 2 if family == "C2" else N
        return len(node[0]) <= NN - 1 and len(node[1]) <= 1
    if family == "fused":
        return node[0] >= k
    if family == "seam":
        return node[0] >= k and len(node) <= 2
    raise ValueError(f"unknown family {family!r}")


@dataclass
class BratteliDiagram:
    family: str
    params: Dict[str, int]
    levels: List[List[object]] = field(default_factory=list)
    edges: List[List[Tuple[object, object]]] = field(default_factory=list)
    dims: List[Dict[object, int]] = field(default_factory=list)

    def level_dim(self, n: int) -> int:
        """Sum of squares of the irreducible dimensions at level n."""
        return sum(d * d for d in self.dims[n].values())

    def to_json(self) -> str:
        def enc(node):
            return [list(x) for x in node] if self.family in ("HB", "A", "C", "C2") else list(node)

        return json.dumps({
            "family": self.family,
            "params": self.params,
            "levels": [[{"node": enc(v), "dim": self.dims[n][v]} for v in lvl] for n, lvl in enumerate(self.levels)],
            "edges": [[[enc(a), enc(b)] for a, b in es] for es in self.edges],
        })

    def to_dot(self) -> str:
        def name(node):
            if self.family in ("HB", "A", "C", "C2"):
                return "|".join(_part_str(p) for p in node)
            return _part_str(node)

        lines = ["digraph bratteli {"]
        for n, lvl in enumerate(self.levels):
            for v in lvl:
                lines.append(f'  "{n}:{name(v)}" [label="{name(v)} ({self.dims[n][v]})"];')
        for n, es in enumerate(self.edges):
            for a, b in es:
                lines.append(f'  "{n}:{name(a)}" -> "{n + 1}:{name(b)}";')
        lines.append("}")
        return "\n".join(lines)


def _part_str(p: Partition) -> str:
    if not p:
        return "-"
    return "".join(map(str, p)) if max(p) < 10 else ",".join(map(str, p))


def bratteli(family: str, depth: int, k: Optional[int] = None, N: Optional[int] = None) -> BratteliDiagram:
    """Levels 0..depth of a branching graph with path-count dimensions.

    Families on bipartitions (lam, mu): HB (all), A (mu has at most one row),
    C with parameter N (lam has fewer than N rows, mu at most one), C2.
    Families on partitions of k+n with first part at least k: fused, seam
    (seam also has at most two rows).
    """
    if family == "C" and N is None:
        raise ValueError("family C needs N")
    if family in ("fused", "seam") and k is None:
        raise ValueError(f"family {family} needs k")
    if family in ("HB", "A", "C", "C2"):
        root = ((), ())

        def children(node):
            lam, mu = node
            for l2 in _add_box(lam):
                yield (l2, mu)
            for m2 in _add_box(mu):
                yield (lam, m2)
    else:
        root = (k,) if k else ()

        def children(node):
            yield from _add_box(node)

    params = {x: v for x, v in (("k", k), ("N", N)) if v is not None}
    d = BratteliDiagram(family, params, [[root]], [], [{root: 1}])
    for n in range(depth):
        nxt: Dict[object, int] = {}
        es = []
        for v in d.levels[n]:
            for c in children(v):
                if _allowed(family, c, k, N):
                    es.append((v, c))
                    nxt[c] = nxt.get(c, 0) + d.dims[n][v]
        lvl = sorted(nxt, reverse=True)
        d.levels.append(lvl)
        d.edges.append(es)
        d.dims.append({v: nxt[v] for v in lvl})
    return d


def avoid_count(n: int, k: Optional[int] = None) -> int:
    """Number of signed permutations avoiding 1bar-2bar with at most k bars."""
    top = n if k is None else min(k, n)
    return sum(factorial(n - i) * comb(n, i) ** 2 for i in range(top + 1))


def _catalan_like(i: int, N: int) -> int:
    return sum(hook_length_dim(lam) ** 2 for lam in partitions(i) if len(lam) < N)


def closed_form_dim(family: str, n: int, k: Optional[int] = None, N: Optional[int] = None) -> int:
    if family == "HB":
        return 2 ** n * factorial(n)
    if family == "A":
        return avoid_count(n)
    if family == "C2":
        return comb(2 * n, n)
    if family == "C":
        if N is None:
            raise ValueError("family C needs N")
        return sum(comb(n, i) ** 2 * _catalan_like(i, N) for i in range(n + 1))
    if family == "fused":
        return avoid_count(n, k)
    if family == "seam":
        lower = comb(2 * n, n - k - 1) if n - k - 1 >= 0 else 0
        return comb(2 * n, n) - lower
    raise ValueError(f"unknown family {family!r}")


def seam_irreducible_dim(n: int, h: int, k: int) -> int:
    """Dimension of the irreducible indexed by (k+n-h, h)."""
    low = comb(n, h - k - 1) if h - k - 1 >= 0 else 0
    return comb(n, h) - low
