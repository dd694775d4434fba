"""Coproduct, counit and antipode of H.

The coproduct of a Tag sums ``subgraph ⊗ quotient`` over all ``2**|E|`` edge
subsets.  The subgraph keeps the selected edges (in host order) and the
vertices they touch; the quotient collapses each connected component of the
subgraph to a single vertex, keeps the remaining edges in host order, and
drops vertices left without edges.

Edge subsets are given as collections of 1-based edge positions.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable

from . import _kernels
from .algebra import LinComb, TensorComb, _shifted_union
from .errors import CapacityError, EndpointRangeError, TagError
from .graph import EMPTY, Tag, canonicalize

__all__ = [
    "DEFAULT_MAX_EDGES",
    "EdgeSubset",
    "subgraph",
    "contract",
    "coproduct",
    "coproduct_lin",
    "coproduct_multiset_size",
    "counit",
    "reduced_coproduct",
    "antipode",
    "antipode_lin",
    "clear_caches",
]

EdgeSubset = frozenset  # of 1-based edge positions

DEFAULT_MAX_EDGES = int(os.environ.get("TAGHOPF_MAX_EDGES", "20"))


def _positions(host: Tag, s: Iterable[int]) -> frozenset[int]:
    s = frozenset(s)
    m = len(host.edges)
    for p in s:
        if not isinstance(p, int) or not 1 <= p <= m:
            raise EndpointRangeError(f"edge position {p!r} outside 1..{m}")
    return s


def _renumber(edges) -> Tag:
    # number surviving vertices by increasing old id
    ids = sorted({x for e in edges for x in e})
    new = {x: i for i, x in enumerate(ids, 1)}
    out = []
    for u, v in edges:
        a, b = new[u], new[v]
        out.append((a, b) if a <= b else (b, a))
    return Tag(len(ids), tuple(out))


def subgraph(host: Tag, s: Iterable[int]) -> Tag:
    """Selected edges in host order together with the vertices they touch."""
    s = _positions(host, s)
    return _renumber([e for i, e in enumerate(host.edges, 1) if i in s])


def contract(host: Tag, s: Iterable[int]) -> Tag:
    """Collapse each component of the selected subgraph to one vertex.

    Remaining edges keep their relative order; an edge whose endpoints merge
    becomes a self-loop; vertices without remaining edges are deleted.
    """
    s = _positions(host, s)
    parent = list(range(host.vertex_count + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, (u, v) in enumerate(host.edges, 1):
        if i in s:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[max(ru, rv)] = min(ru, rv)
    return _renumber([(find(u), find(v)) for i, (u, v) in enumerate(host.edges, 1) if i not in s])


def _check_capacity(t: Tag, max_edges: int | None, what: str):
    limit = DEFAULT_MAX_EDGES if max_edges is None else max_edges
    if len(t.edges) > limit:
        raise CapacityError(
            f"{what} of a {len(t.edges)}-edge graph exceeds the edge limit {limit}"
        )


_tag_of: dict[tuple, Tag] = {(): EMPTY}


def _tag_from_canonical(edges: tuple) -> Tag:
    t = _tag_of.get(edges)
    if t is None:
        n = max(v for _, v in edges)
        t = _tag_of[edges] = Tag(n, edges)
    return t


def _collect(counts: dict) -> dict:
    return {(_tag_from_canonical(a), _tag_from_canonical(b)): c for (a, b), c in counts.items()}


_coproduct_cache: dict[Tag, dict] = {}


def _coproduct_terms(t: Tag, workers: int | None = None) -> dict:
    """``{(subgraph, quotient): multiplicity}`` for a canonical Tag."""
    terms = _coproduct_cache.get(t)
    if terms is not None:
        return terms
    total = 1 << len(t.edges)
    if workers and workers > 1 and total >= 1 << 12:
        step = -(-total // (4 * workers))
        bounds = [(lo, min(lo + step, total)) for lo in range(0, total, step)]
        counts: dict = {}
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_kernels.coproduct_counts, t.edges, lo, hi) for lo, hi in bounds]
            for f in futures:
                for k, c in f.result().items():
                    counts[k] = counts.get(k, 0) + c
    else:
        counts = _kernels.coproduct_counts(t.edges, 0, total)
    terms = _collect(counts)
    if len(t.edges) <= 12:
        _coproduct_cache[t] = terms
    return terms


def coproduct(t: Tag, max_edges: int | None = None, workers: int | None = None) -> TensorComb:
    """Sum over all edge subsets of ``subgraph ⊗ quotient``, collected.

    ``workers > 1`` splits the subset range over processes; the merge is
    coefficient addition, so the result does not depend on it.
    """
    _check_capacity(t, max_edges, "coproduct")
    return TensorComb._from_canonical(dict(_coproduct_terms(canonicalize(t), workers)))


def coproduct_multiset_size(t: Tag) -> int:
    """Number of terms before collection (one per edge subset)."""
    return sum(_coproduct_terms(canonicalize(t)).values())


def coproduct_lin(x: LinComb, max_edges: int | None = None) -> TensorComb:
    acc: dict = {}
    for t, c in x.items():
        _check_capacity(t, max_edges, "coproduct")
        for k, m in _coproduct_terms(t).items():
            acc[k] = acc.get(k, 0) + c * m
    return TensorComb._from_canonical(acc)


def counit(x: LinComb | Tag):
    """Coefficient of the empty graph."""
    if isinstance(x, Tag):
        return 1 if x.is_empty() else 0
    return x[EMPTY]


def _reduced_terms(t: Tag) -> dict:
    terms = dict(_coproduct_terms(t))
    for k in ((t, EMPTY), (EMPTY, t)):
        terms[k] -= 1
        if not terms[k]:
            del terms[k]
    return terms


def reduced_coproduct(t: Tag, max_edges: int | None = None) -> TensorComb:
    """Coproduct without the ``t ⊗ 1`` and ``1 ⊗ t`` terms."""
    t = canonicalize(t)
    if t.is_empty():
        raise TagError("reduced coproduct is undefined on the empty graph")
    _check_capacity(t, max_edges, "reduced coproduct")
    return TensorComb._from_canonical(_reduced_terms(t))


# Memo tables keyed by canonical Tag.  Concurrent fills may duplicate work
# but always store equal values.
_antipode_memo = {"left": {EMPTY: {EMPTY: 1}}, "right": {EMPTY: {EMPTY: 1}}}


def _antipode_left(t: Tag) -> dict:
    # S(t) = -t - sum S(sub) . quot
    memo = _antipode_memo["left"]
    s = memo.get(t)
    if s is not None:
        return s
    acc = {t: -1}
    for (g, q), c in _reduced_terms(t).items():
        for h, ch in _antipode_left(g).items():
            k = _shifted_union(h, q)
            acc[k] = acc.get(k, 0) - c * ch
    s = {k: v for k, v in acc.items() if v}
    memo[t] = s
    return s


def _antipode_right(t: Tag) -> dict:
    # S(t) = -t - sum sub . S(quot)
    memo = _antipode_memo["right"]
    s = memo.get(t)
    if s is not None:
        return s
    acc = {t: -1}
    for (g, q), c in _reduced_terms(t).items():
        for h, ch in _antipode_right(q).items():
            k = _shifted_union(g, h)
            acc[k] = acc.get(k, 0) - c * ch
    s = {k: v for k, v in acc.items() if v}
    memo[t] = s
    return s


_RECURSIONS = {"left": _antipode_left, "right": _antipode_right}


def antipode(t: Tag, recursion: str = "left", check: bool = False,
             max_edges: int | None = None) -> LinComb:
    """Antipode by recursion over proper nonempty subgraphs.

    ``recursion="left"`` applies S to the subgraph factor, ``"right"`` to the
    quotient factor.  With ``check=True`` both are computed and compared.
    """
    if recursion not in _RECURSIONS:
        raise ValueError(f"recursion must be 'left' or 'right', got {recursion!r}")
    _check_capacity(t, max_edges, "antipode")
    t = canonicalize(t)
    s = LinComb._from_canonical(_RECURSIONS[recursion](t))
    if check:
        other = "right" if recursion == "left" else "left"
        if LinComb._from_canonical(_RECURSIONS[other](t)) != s:
            raise RuntimeError(f"antipode recursions disagree on {t}")
    return s


def antipode_lin(x: LinComb, recursion: str = "left", max_edges: int | None = None) -> LinComb:
    acc: dict = {}
    for t, c in x.items():
        for k, v in antipode(t, recursion, max_edges=max_edges).items():
            acc[k] = acc.get(k, 0) + c * v
    return LinComb._from_canonical(acc)


def clear_caches():
    _coproduct_cache.clear()
    for memo in _antipode_memo.values():
        memo.clear()
        memo[EMPTY] = {EMPTY: 1}
        memo[EMPTY] = {EMPTY: 1}
