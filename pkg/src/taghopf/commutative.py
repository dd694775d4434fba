"""The commutative Hopf algebra of graphs without edge order, and the
projection that forgets the order of a Tag.

Everything here is written against plain multigraphs and does not reuse the
Tag kernels, so comparing the two sides of the projection is a real check.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass

from .algebra import LinComb, _Comb
from .errors import CapacityError, TagSyntaxError
from .graph import Tag, make_tag

__all__ = [
    "BareGraph",
    "BARE_EMPTY",
    "MAX_COMPONENT_VERTICES",
    "BareLinComb",
    "BareTensorComb",
    "bare_canonicalize",
    "make_bare",
    "forget",
    "project",
    "project_tensor",
    "bare_product",
    "bare_product_lin",
    "bare_tensor_product",
    "bare_coproduct",
    "bare_coproduct_lin",
    "bare_counit",
    "bare_antipode",
    "bare_antipode_lin",
    "parse_bare",
    "render_bare",
]

MAX_COMPONENT_VERTICES = 10
_MAX_LABELLINGS = math.factorial(MAX_COMPONENT_VERTICES)


@dataclass(frozen=True, slots=True)
class BareGraph:
    """Multigraph; ``edges`` is kept sorted since order carries no meaning."""

    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def is_empty(self) -> bool:
        return self.vertex_count == 0

    def sort_key(self):
        return (len(self.edges), self.vertex_count, self.edges)


BARE_EMPTY = BareGraph(0, ())


def make_bare(vertex_count: int, edges) -> BareGraph:
    t = make_tag(vertex_count, edges)  # same validation rules
    return BareGraph(t.vertex_count, tuple(sorted(t.edges)))


def _refine(verts, adj):
    """Colour refinement; returns an isomorphism-invariant rank per vertex."""
    color = {v: (sum(adj[v].values()) + adj[v].get(v, 0), adj[v].get(v, 0)) for v in verts}
    n_classes = len(set(color.values()))
    while True:
        sig = {
            v: (color[v], tuple(sorted((color[w], k) for w, k in adj[v].items() if w != v)))
            for v in verts
        }
        ranks = {s: i for i, s in enumerate(sorted(set(sig.values())))}
        color = {v: ranks[sig[v]] for v in verts}
        if len(ranks) == n_classes:
            return color
        n_classes = len(ranks)


def _canon_component(verts, edges):
    if len(verts) > MAX_COMPONENT_VERTICES:
        raise CapacityError(
            f"bare canonicalization supports components of at most "
            f"{MAX_COMPONENT_VERTICES} vertices, got {len(verts)}"
        )
    adj = {v: {} for v in verts}
    for u, v in edges:
        adj[u][v] = adj[u].get(v, 0) + 1
        if u != v:
            adj[v][u] = adj[v].get(u, 0) + 1
    color = _refine(verts, adj)
    classes: dict[int, list[int]] = {}
    for v in sorted(verts):
        classes.setdefault(color[v], []).append(v)
    blocks = [classes[c] for c in sorted(classes)]
    if math.prod(math.factorial(len(b)) for b in blocks) > _MAX_LABELLINGS:
        raise CapacityError("too many candidate labellings for bare canonicalization")
    best = None
    for perms in itertools.product(*(itertools.permutations(b) for b in blocks)):
        lab = {}
        for block in perms:
            for v in block:
                lab[v] = len(lab) + 1
        enc = tuple(sorted((lab[u], lab[v]) if lab[u] <= lab[v] else (lab[v], lab[u])
                           for u, v in edges))
        if best is None or enc < best:
            best = enc
    return (len(edges), len(verts), best)


_bare_cache: dict[BareGraph, BareGraph] = {}


def bare_canonicalize(g: BareGraph) -> BareGraph:
    """Canonical representative of the multigraph isomorphism class.

    Each connected component is canonicalized on its own (colour refinement,
    then all labellings that respect the colour classes); components are then
    sorted and numbered consecutively.
    """
    key = _bare_cache.get(g)
    if key is not None:
        return key
    parent = list(range(g.vertex_count + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in g.edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    comps: dict[int, tuple[list, list]] = {}
    for x in range(1, g.vertex_count + 1):
        comps.setdefault(find(x), ([], []))[0].append(x)
    for e in g.edges:
        comps[find(e[0])][1].append(e)
    forms = sorted(_canon_component(vs, es) for vs, es in comps.values())
    shift = 0
    out = []
    for _, k, enc in forms:
        out.extend((u + shift, v + shift) for u, v in enc)
        shift += k
    key = BareGraph(shift, tuple(out))
    _bare_cache[g] = key
    _bare_cache.setdefault(key, key)
    return key


def forget(t: Tag) -> BareGraph:
    """Drop the edge order."""
    return bare_canonicalize(BareGraph(t.vertex_count, tuple(sorted(t.edges))))


class BareLinComb(_Comb):
    __slots__ = ()

    @staticmethod
    def _canon_key(key):
        if not isinstance(key, BareGraph):
            raise TypeError(f"BareLinComb keys must be BareGraphs, got {key!r}")
        return bare_canonicalize(key)

    @classmethod
    def of(cls, g: BareGraph, c=1):
        return cls({g: c})

    def __mul__(self, other):
        if isinstance(other, BareLinComb):
            return bare_product_lin(self, other)
        return NotImplemented

    def __str__(self):
        if not self:
            return "0"
        return " + ".join(f"{c} * {render_bare(g)}"
                          for g, c in sorted(self.items(), key=lambda kv: kv[0].sort_key()))

    __repr__ = __str__


class BareTensorComb(_Comb):
    __slots__ = ()

    @staticmethod
    def _canon_key(key):
        return tuple(bare_canonicalize(g) for g in key)

    def __str__(self):
        if not self:
            return "0"
        return " + ".join(
            f"{c} * " + " (x) ".join(render_bare(g) for g in key)
            for key, c in sorted(self.items(), key=lambda kv: tuple(g.sort_key() for g in kv[0]))
        )

    __repr__ = __str__


def project(x: LinComb) -> BareLinComb:
    acc: dict = {}
    for t, c in x.items():
        g = forget(t)
        acc[g] = acc.get(g, 0) + c
    return BareLinComb._from_canonical(acc)


def project_tensor(x) -> BareTensorComb:
    acc: dict = {}
    for key, c in x.items():
        k = tuple(forget(t) for t in key)
        acc[k] = acc.get(k, 0) + c
    return BareTensorComb._from_canonical(acc)


def _union(a: BareGraph, b: BareGraph) -> BareGraph:
    s = a.vertex_count
    return BareGraph(s + b.vertex_count,
                     tuple(sorted(a.edges + tuple((u + s, v + s) for u, v in b.edges))))


def bare_product(a: BareGraph, b: BareGraph) -> BareGraph:
    """Disjoint union; kept as an ordered binary operation so that
    commutativity stays a checkable property."""
    return bare_canonicalize(_union(a, b))


def bare_product_lin(x: BareLinComb, y: BareLinComb) -> BareLinComb:
    acc: dict = {}
    for a, ca in x.items():
        for b, cb in y.items():
            k = bare_product(a, b)
            acc[k] = acc.get(k, 0) + ca * cb
    return BareLinComb._from_canonical(acc)


def bare_tensor_product(x: BareTensorComb, y: BareTensorComb) -> BareTensorComb:
    acc: dict = {}
    for kx, cx in x.items():
        for ky, cy in y.items():
            k = tuple(bare_product(a, b) for a, b in zip(kx, ky))
            acc[k] = acc.get(k, 0) + cx * cy
    return BareTensorComb._from_canonical(acc)


def _split(g: BareGraph, chosen: set[int]):
    sub = [e for i, e in enumerate(g.edges) if i in chosen]
    ids = sorted({x for e in sub for x in e})
    new = {x: i for i, x in enumerate(ids, 1)}
    sub_g = BareGraph(len(ids), tuple(sorted((new[u], new[v]) for u, v in sub)))

    parent = list(range(g.vertex_count + 1))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for u, v in sub:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    rest = [(find(u), find(v)) for i, (u, v) in enumerate(g.edges) if i not in chosen]
    ids = sorted({x for e in rest for x in e})
    new = {x: i for i, x in enumerate(ids, 1)}
    quot = BareGraph(len(ids), tuple(sorted(
        (min(new[u], new[v]), max(new[u], new[v])) for u, v in rest)))
    return bare_canonicalize(sub_g), bare_canonicalize(quot)


_bare_coproduct_cache: dict[BareGraph, dict] = {}


def _bare_terms(g: BareGraph) -> dict:
    g = bare_canonicalize(g)
    terms = _bare_coproduct_cache.get(g)
    if terms is None:
        terms = {}
        m = len(g.edges)
        for r in range(m + 1):
            for chosen in itertools.combinations(range(m), r):
                k = _split(g, set(chosen))
                terms[k] = terms.get(k, 0) + 1
        _bare_coproduct_cache[g] = terms
    return terms


def bare_coproduct(g: BareGraph) -> BareTensorComb:
    return BareTensorComb._from_canonical(dict(_bare_terms(g)))


def bare_coproduct_lin(x: BareLinComb) -> BareTensorComb:
    acc: dict = {}
    for g, c in x.items():
        for k, m in _bare_terms(g).items():
            acc[k] = acc.get(k, 0) + c * m
    return BareTensorComb._from_canonical(acc)


def bare_counit(x):
    if isinstance(x, BareGraph):
        return 1 if x.is_empty() else 0
    return x[BARE_EMPTY]


_bare_antipode_memo: dict[BareGraph, dict] = {BARE_EMPTY: {BARE_EMPTY: 1}}


def _bare_antipode(g: BareGraph) -> dict:
    s = _bare_antipode_memo.get(g)
    if s is not None:
        return s
    acc = {g: -1}
    for (sub, quot), c in _bare_terms(g).items():
        if sub.is_empty() or quot.is_empty():
            continue
        for h, ch in _bare_antipode(sub).items():
            k = bare_product(h, quot)
            acc[k] = acc.get(k, 0) - c * ch
    s = {k: v for k, v in acc.items() if v}
    _bare_antipode_memo[g] = s
    return s


def bare_antipode(g: BareGraph) -> BareLinComb:
    return BareLinComb._from_canonical(_bare_antipode(bare_canonicalize(g)))


def bare_antipode_lin(x: BareLinComb) -> BareLinComb:
    acc: dict = {}
    for g, c in x.items():
        for k, v in _bare_antipode(g).items():
            acc[k] = acc.get(k, 0) + c * v
    return BareLinComb._from_canonical(acc)


_BARE_RE = re.compile(r"b\{(\d+);((?:\(\d+,\d+\))*)\}")


def parse_bare(text: str) -> BareGraph:
    compact = "".join(text.split())
    m = _BARE_RE.fullmatch(compact)
    if m is None:
        raise TagSyntaxError(f"malformed bare graph literal {text.strip()!r}; expected b{{n;(u,v)...}}")
    edges = [(int(a), int(b)) for a, b in re.findall(r"\((\d+),(\d+)\)", m.group(2))]
    return make_bare(int(m.group(1)), edges)


def render_bare(g: BareGraph, canonical: bool = True) -> str:
    if canonical:
        g = bare_canonicalize(g)
    return "b{%d;%s}" % (g.vertex_count, "".join(f"({u},{v})" for u, v in g.edges))
