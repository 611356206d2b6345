"""Partitions, hook lengths and Bratteli diagrams against brute force."""

import itertools
import json
from math import comb, factorial

import pytest

from symhecke import combinat as cb
from symhecke import coxeter as cx


def syt_count(lam):
    # brute force: remove a corner box recursively
    lam = tuple(x for x in lam if x)
    if sum(lam) <= 1:
        return 1
    total = 0
    for i, r in enumerate(lam):
        if i + 1 == len(lam) or lam[i + 1] < r:
            total += syt_count(lam[:i] + (r - 1,) + lam[i + 1:])
    return total


def partition_count(n):
    return sum(1 for c in itertools.product(*(range(n // p + 1) for p in range(1, n + 1)))
               if sum(p * m for p, m in zip(range(1, n + 1), c)) == n)


@pytest.mark.parametrize("n", range(0, 9))
def test_partitions_and_hooks(n):
    ps = list(cb.partitions(n))
    assert len(ps) == len(set(ps)) == partition_count(n)
    assert all(list(p) == sorted(p, reverse=True) and sum(p) == n for p in ps)
    for lam in ps:
        assert cb.hook_length_dim(lam) == syt_count(lam)
    assert sum(cb.hook_length_dim(lam) ** 2 for lam in ps) == factorial(n)


@pytest.mark.parametrize("n", range(0, 6))
def test_bipartitions(n):
    total = sum(cb.bipartition_dim(l, m) ** 2 for l, m in cb.bipartitions(n))
    assert total == 2 ** n * factorial(n)


@pytest.mark.parametrize("depth", range(0, 7))
def test_bratteli_level_sums(depth):
    for fam, kw in (("HB", {}), ("A", {}), ("C2", {}), ("C", {"N": 3})):
        d = cb.bratteli(fam, depth, **kw)
        for n in range(depth + 1):
            assert d.level_dim(n) == cb.closed_form_dim(fam, n, **kw)
    for k in (1, 2, 3):
        for fam in ("fused", "seam"):
            d = cb.bratteli(fam, depth, k=k)
            for n in range(depth + 1):
                assert d.level_dim(n) == cb.closed_form_dim(fam, n, k=k)


@pytest.mark.parametrize("n", range(0, 7))
def test_closed_forms_against_patterns(n):
    assert cb.closed_form_dim("A", n) == len(cx.enumerate_signed(n, cx.Pattern.ONEBAR_TWOBAR))
    assert cb.closed_form_dim("C2", n) == len(cx.enumerate_signed(n, cx.Pattern.FC_TOP))
    assert cb.closed_form_dim("C", n, N=2) == comb(2 * n, n)
    for k in (1, 2, 3):
        assert cb.closed_form_dim("fused", n, k=k) == len(cx.enumerate_signed(n, cx.Pattern.BARS_DESC_LIMIT, k))
        assert cb.closed_form_dim("seam", n, k=k) == len(cx.enumerate_signed(n, cx.Pattern.FC_TOP_LIMIT, k))


def _count_paths(d, n, node):
    # independent path count through the edge lists
    if n == 0:
        return 1
    return sum(_count_paths(d, n - 1, a) for a, b in d.edges[n - 1] if b == node)


@pytest.mark.parametrize("fam,kw", [("HB", {}), ("A", {}), ("C", {"N": 2}), ("fused", {"k": 2}), ("seam", {"k": 1})])
def test_path_dims(fam, kw):
    d = cb.bratteli(fam, 8 if fam in ("seam", "fused") else 5, **kw)
    for n, lvl in enumerate(d.levels):
        for v in lvl:
            assert d.dims[n][v] == _count_paths(d, n, v)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_seam_irreducibles(k):
    d = cb.bratteli("seam", 6, k=k)
    for n in range(7):
        for v in d.levels[n]:
            h = v[1] if len(v) > 1 else 0
            assert d.dims[n][v] == cb.seam_irreducible_dim(n, h, k)


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_fused_one_dimensional_nodes(k):
    d = cb.bratteli("fused", 6, k=k)
    for n in range(2, 7):
        ones = sum(1 for v in d.levels[n] if d.dims[n][v] == 1)
        assert ones == (3 if n <= k else 2)


def test_dot_and_json():
    d = cb.bratteli("A", 2)
    dot = d.to_dot()
    assert dot.startswith("digraph")
    assert '[label="1|1 (2)"]' in dot
    assert '[label="-|- (1)"]' in dot
    data = json.loads(d.to_json())
    assert [sum(x["dim"] ** 2 for x in lvl) for lvl in data["levels"]] == [1, 2, 7]
    assert '[label="3 (1)"]' in cb.bratteli("fused", 0, k=3).to_dot()


def test_errors():
    with pytest.raises(ValueError):
        cb.bratteli("C", 2)
    with pytest.raises(ValueError):
        cb.bratteli("fused", 2)
    with pytest.raises(ValueError):
        cb.closed_form_dim("nope", 2)
