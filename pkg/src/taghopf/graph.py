"""Totally assigned graphs (TAGs).

A :class:`Tag` is a multigraph whose edges are totally ordered.  The order is
the position in ``edges``: position ``i`` (1-based) carries standard label
``i``.  Vertices are anonymous and numbered ``1..vertex_count``; two Tags are
isomorphic when a vertex renumbering maps each edge to the edge at the same
position, and :func:`canonicalize` picks one representative per class.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import _kernels
from .errors import EndpointRangeError, IsolatedVertexError, TagError, TagSyntaxError

Edge = tuple[int, int]

__all__ = [
    "Tag",
    "CanonicalKey",
    "EMPTY",
    "make_tag",
    "canonicalize",
    "is_isomorphic",
    "connected_components",
    "Component",
    "min_spanning_forest",
    "parse_tag",
    "render_tag",
]


@dataclass(frozen=True, slots=True)
class Tag:
    """Edge-ordered multigraph.

    Construct through :func:`make_tag` or :func:`parse_tag`, which validate;
    the bare constructor is unchecked and only meant for internal use.
    """

    vertex_count: int
    edges: tuple[Edge, ...]

    @property
    def degree(self) -> int:
        return len(self.edges)

    def is_empty(self) -> bool:
        return self.vertex_count == 0 and not self.edges

    def sort_key(self):
        return (len(self.edges), self.vertex_count, self.edges)

    def __lt__(self, other: Tag) -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return render_tag(self, canonical=False)


# A Tag in canonical numbering; used as the dictionary key for combinations.
CanonicalKey = Tag

EMPTY = Tag(0, ())


def _norm_edge(e) -> Edge:
    u, v = e
    if not isinstance(u, int) or not isinstance(v, int):
        raise TagError(f"edge endpoints must be integers, got {e!r}")
    return (u, v) if u <= v else (v, u)


def make_tag(vertex_count: int, edges: Iterable[Sequence[int]]) -> Tag:
    """Validated constructor; the listed order of ``edges`` is the total order."""
    if not isinstance(vertex_count, int) or vertex_count < 0:
        raise TagError(f"vertex count must be a non-negative integer, got {vertex_count!r}")
    norm = tuple(_norm_edge(e) for e in edges)
    used = set()
    for pos, (u, v) in enumerate(norm, 1):
        if u < 1 or v > vertex_count:
            raise EndpointRangeError(
                f"edge {pos} = ({u},{v}) has an endpoint outside 1..{vertex_count}"
            )
        used.add(u)
        used.add(v)
    if len(used) != vertex_count:
        missing = sorted(set(range(1, vertex_count + 1)) - used)
        raise IsolatedVertexError(
            f"isolated vertex not representable: vertex {missing[0]} has no incident edge"
        )
    return Tag(vertex_count, norm)


_canon_cache: dict[Tag, Tag] = {}


def canonicalize(t: Tag) -> CanonicalKey:
    """Return the isomorphic Tag with the lexicographically least edge sequence.

    Edge positions never move; only vertex numbers change.  Vertices without
    edges (which valid Tags do not have) keep the highest numbers.
    """
    key = _canon_cache.get(t)
    if key is None:
        key = Tag(t.vertex_count, _kernels.canonical_edges(t.edges))
        if len(_canon_cache) > 200_000:
            _canon_cache.clear()
        _canon_cache[t] = key
        _canon_cache.setdefault(key, key)
    return key


def is_isomorphic(a: Tag, b: Tag) -> bool:
    return canonicalize(a) == canonicalize(b)


@dataclass(frozen=True)
class Component:
    vertices: tuple[int, ...]
    positions: tuple[int, ...]


def connected_components(t: Tag) -> list[Component]:
    """Components ordered by smallest vertex; edge positions are 1-based."""
    parent = list(range(t.vertex_count + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in t.edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    verts: dict[int, list[int]] = {}
    for x in range(1, t.vertex_count + 1):
        verts.setdefault(find(x), []).append(x)
    pos: dict[int, list[int]] = {r: [] for r in verts}
    for i, (u, _) in enumerate(t.edges, 1):
        pos[find(u)].append(i)
    return [Component(tuple(verts[r]), tuple(pos[r])) for r in sorted(verts)]


def min_spanning_forest(t: Tag) -> frozenset[int]:
    """Kruskal over the edge order: keep an edge iff it joins two components.

    The edge order is total, so the result is the unique minimum spanning
    forest.  Self-loops never join anything and are never selected.
    """
    parent = list(range(t.vertex_count + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    chosen = []
    for i, (u, v) in enumerate(t.edges, 1):
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            chosen.append(i)
    return frozenset(chosen)


_TAG_RE = re.compile(r"g\{(\d+);((?:\(\d+,\d+\))*)\}")
_EDGE_RE = re.compile(r"\((\d+),(\d+)\)")


def parse_tag(text: str) -> Tag:
    """Parse ``g{n;(u,v)(u,v)...}``; whitespace is ignored."""
    compact = "".join(text.split())
    m = _TAG_RE.fullmatch(compact)
    if m is None:
        raise TagSyntaxError(f"malformed tag literal {text.strip()!r}; expected g{{n;(u,v)...}}")
    n = int(m.group(1))
    edges = [(int(a), int(b)) for a, b in _EDGE_RE.findall(m.group(2))]
    return make_tag(n, edges)


def render_tag(t: Tag, canonical: bool = True) -> str:
    if canonical:
        t = canonicalize(t)
    return "g{%d;%s}" % (t.vertex_count, "".join(f"({u},{v})" for u, v in t.edges))
