"""Axiom verification over enumerated or sampled Tags.

The brute-force oracles used by the test-suite live here as well:
permutation-minimum canonical forms, forest enumeration, and a coproduct
built from :func:`~taghopf.hopf.subgraph` / :func:`~taghopf.hopf.contract`
rather than from the compiled kernels.

A suite run takes a :class:`HopfOps` bundle so the same checks can be pointed
at deliberately broken operations (see :func:`mutant`).
"""

from __future__ import annotations

import itertools
import json
import random
from fractions import Fraction
from dataclasses import dataclass, field
from typing import Callable, Iterable

from . import algebra, commutative as comm, hopf
from .algebra import LinComb, TensorComb
from .errors import CapacityError
from .graph import (
    Tag,
    canonicalize,
    connected_components,
    is_isomorphic,
    min_spanning_forest,
    parse_tag,
    render_tag,
)
from ._kernels import canonical_edges

__all__ = [
    "MAX_EXHAUSTIVE_EDGES",
    "TestUniverse",
    "AxiomResult",
    "VerificationReport",
    "HopfOps",
    "REFERENCE",
    "mutant",
    "MUTATIONS",
    "enumerate_tags",
    "random_tag",
    "brute_canonical",
    "brute_min_spanning_forests",
    "oracle_coproduct",
    "convolution",
    "run_axiom_suite",
    "run_standard_suite",
]

MAX_EXHAUSTIVE_EDGES = 5


# ---------------------------------------------------------------------------
# universes

_enum_levels: list[list[tuple]] = [[()]]


def enumerate_tags(max_edges: int) -> list[Tag]:
    """Every isomorphism class of Tags with at most ``max_edges`` edges, once.

    A canonical Tag with k+1 edges minus its last edge is a canonical Tag with
    k edges, so each level is generated by appending one edge (to old or fresh
    vertices) to the previous level and canonicalizing.
    """
    if max_edges > MAX_EXHAUSTIVE_EDGES:
        raise CapacityError(f"exhaustive enumeration is limited to {MAX_EXHAUSTIVE_EDGES} edges")
    if max_edges < 0:
        raise ValueError("max_edges must be non-negative")
    while len(_enum_levels) <= max_edges:
        found = set()
        for edges in _enum_levels[-1]:
            n = max((v for _, v in edges), default=0)
            for u in range(1, n + 2):
                for v in range(u, n + 3):
                    found.add(canonical_edges(edges + ((u, v),)))
        _enum_levels.append(sorted(found))
    out = []
    for level in _enum_levels[: max_edges + 1]:
        out.extend(Tag(max((v for _, v in e), default=0), e) for e in level)
    return sorted(out, key=Tag.sort_key)


def random_tag(rng: random.Random, min_edges: int, max_edges: int, max_vertices: int) -> Tag:
    """Uniform endpoints over a growing vertex budget; never isolates a vertex."""
    m = rng.randint(min_edges, max_edges)
    used = 0
    edges = []
    for _ in range(m):
        pair = []
        for _ in range(2):
            x = rng.randint(1, min(used + 1, max_vertices))
            if x > used:
                used += 1
                x = used
            pair.append(x)
        u, v = pair
        edges.append((u, v) if u <= v else (v, u))
    return canonicalize(Tag(used, tuple(edges)))


@dataclass(frozen=True)
class TestUniverse:
    """Where to check: all classes up to ``max_edges`` or a seeded sample.

    ``pair_max_edges`` / ``triple_max_edges`` bound each factor for the
    binary and ternary checks; ``None`` picks the defaults (exhaustive: one
    and two fewer than ``max_edges`` capped at 2; sampled: 3 and 4).
    """

    __test__ = False  # not a pytest class

    max_edges: int = 3
    mode: str = "exhaustive"
    seed: int = 0
    count: int = 200
    min_edges: int = 0
    max_vertices: int | None = None
    pair_max_edges: int | None = None
    triple_max_edges: int | None = None

    def __post_init__(self):
        if self.mode not in ("exhaustive", "sampled"):
            raise ValueError(f"mode must be 'exhaustive' or 'sampled', got {self.mode!r}")
        if self.mode == "exhaustive" and self.max_edges > MAX_EXHAUSTIVE_EDGES:
            raise CapacityError(f"exhaustive universes are limited to {MAX_EXHAUSTIVE_EDGES} edges")

    def describe(self) -> str:
        if self.mode == "exhaustive":
            return f"exhaustive(max_edges={self.max_edges})"
        return (f"sampled(seed={self.seed},count={self.count},"
                f"edges={self.min_edges}..{self.max_edges})")

    @property
    def _vertex_budget(self) -> int:
        return self.max_vertices if self.max_vertices is not None else 2 * max(self.max_edges, 1)

    def tags(self) -> list[Tag]:
        if self.mode == "exhaustive":
            return [t for t in enumerate_tags(self.max_edges) if len(t.edges) >= self.min_edges]
        rng = random.Random(f"tags:{self.seed}")
        return [random_tag(rng, self.min_edges, self.max_edges, self._vertex_budget)
                for _ in range(self.count)]

    def _bound(self, given, exhaustive_default, sampled_default):
        if given is not None:
            return given
        if self.mode == "exhaustive":
            return max(0, min(exhaustive_default, self.max_edges))
        return sampled_default

    def pairs(self) -> list[tuple[Tag, Tag]]:
        k = self._bound(self.pair_max_edges, min(2, self.max_edges - 1), 3)
        if self.mode == "exhaustive":
            small = enumerate_tags(k)
            return list(itertools.product(small, small))
        rng = random.Random(f"pairs:{self.seed}")
        return [(random_tag(rng, 0, k, 2 * k), random_tag(rng, 0, k, 2 * k))
                for _ in range(self.count)]

    def triples(self) -> list[tuple[Tag, Tag, Tag]]:
        k = self._bound(self.triple_max_edges, 2, 4)
        if self.mode == "exhaustive":
            small = enumerate_tags(k)
            return list(itertools.product(small, small, small))
        rng = random.Random(f"triples:{self.seed}")
        return [tuple(random_tag(rng, 0, k, 2 * k) for _ in range(3)) for _ in range(self.count)]


# ---------------------------------------------------------------------------
# oracles

def brute_canonical(t: Tag) -> Tag:
    """Least sorted-pair edge sequence over all vertex permutations."""
    best = None
    for perm in itertools.permutations(range(1, t.vertex_count + 1)):
        enc = tuple(
            (perm[u - 1], perm[v - 1]) if perm[u - 1] <= perm[v - 1] else (perm[v - 1], perm[u - 1])
            for u, v in t.edges
        )
        if best is None or enc < best:
            best = enc
    return Tag(t.vertex_count, best if best is not None else ())


def _is_forest(t: Tag, chosen: Iterable[int]) -> bool:
    parent = list(range(t.vertex_count + 1))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for p in chosen:
        u, v = t.edges[p - 1]
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def brute_min_spanning_forests(t: Tag) -> list[tuple[int, ...]]:
    """All spanning forests (as sorted position tuples), lexicographically sorted.

    A spanning forest is an acyclic edge set with ``vertices - components``
    edges.
    """
    size = t.vertex_count - len(connected_components(t))
    forests = [c for c in itertools.combinations(range(1, len(t.edges) + 1), size)
               if _is_forest(t, c)]
    return sorted(forests)


def oracle_coproduct(t: Tag, subgraph_fn=None, contract_fn=None, skip_empty: bool = False) -> TensorComb:
    """Coproduct by direct enumeration of position subsets."""
    subgraph_fn = subgraph_fn or hopf.subgraph
    contract_fn = contract_fn or hopf.contract
    m = len(t.edges)
    terms = []
    for r in range(m + 1):
        for s in itertools.combinations(range(1, m + 1), r):
            if skip_empty and not s and m:
                continue
            terms.append(((subgraph_fn(t, s), contract_fn(t, s)), 1))
    return TensorComb(terms)


# ---------------------------------------------------------------------------
# operation bundles

@dataclass(frozen=True)
class HopfOps:
    """The operations a suite run exercises."""

    name: str
    product: Callable[[Tag, Tag], Tag]
    coproduct: Callable[[Tag], TensorComb]
    antipode: Callable[[Tag], LinComb]
    antipode_right: Callable[[Tag], LinComb]
    subgraph: Callable
    contract: Callable


REFERENCE = HopfOps(
    name="reference",
    product=algebra.product,
    coproduct=hopf.coproduct,
    antipode=lambda t: hopf.antipode(t, "left"),
    antipode_right=lambda t: hopf.antipode(t, "right"),
    subgraph=hopf.subgraph,
    contract=hopf.contract,
)


def _mul(ops: HopfOps, x: LinComb, y: LinComb) -> LinComb:
    return LinComb((ops.product(a, b), ca * cb) for a, ca in x.items() for b, cb in y.items())


def _delta(ops: HopfOps, x: LinComb) -> TensorComb:
    acc = TensorComb.zero()
    for t, c in x.items():
        acc = acc + ops.coproduct(t).scale(c)
    return acc


def _generic_antipodes(product, coproduct):
    """Both antipode recursions written against arbitrary product/coproduct."""
    memo = {"left": {}, "right": {}}

    def make(side):
        def s(t):
            t = canonicalize(t)
            if t.is_empty():
                return LinComb.one()
            if t in memo[side]:
                return memo[side][t]
            acc = [(t, -1)]
            for (g, q), c in coproduct(t).items():
                if not g.edges or not q.edges:
                    continue  # boundary terms t(x)1 and 1(x)t
                if side == "left":
                    acc.extend((product(h, q), -c * ch) for h, ch in s(g).items())
                else:
                    acc.extend((product(g, h), -c * ch) for h, ch in s(q).items())
            memo[side][t] = out = LinComb(acc)
            return out
        return s

    return make("left"), make("right")


def _product_no_shift(a: Tag, b: Tag) -> Tag:
    # second factor's vertex numbers are not shifted, so the factors overlap
    return Tag(max(a.vertex_count, b.vertex_count), a.edges + b.edges)


def _contract_keep_isolated(host: Tag, s) -> Tag:
    s = frozenset(s)
    parent = list(range(host.vertex_count + 1))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for i, (u, v) in enumerate(host.edges, 1):
        if i in s:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[max(ru, rv)] = min(ru, rv)
    roots = sorted({find(x) for x in range(1, host.vertex_count + 1)})
    new = {r: i for i, r in enumerate(roots, 1)}
    edges = []
    for i, (u, v) in enumerate(host.edges, 1):
        if i not in s:
            a, b = new[find(u)], new[find(v)]
            edges.append((min(a, b), max(a, b)))
    return Tag(len(roots), tuple(edges))


MUTATIONS = {
    "product-no-shift": "product does not shift the second factor's vertex labels",
    "coproduct-drop-empty": "coproduct omits the empty subgraph term",
    "contract-keep-isolated": "contraction keeps vertices left without edges",
}


def mutant(kind: str) -> HopfOps:
    """A deliberately broken operation bundle for mutation testing."""
    if kind == "product-no-shift":
        product = _product_no_shift
        coproduct = hopf.coproduct
        contract = hopf.contract
    elif kind == "coproduct-drop-empty":
        product = algebra.product
        coproduct = lambda t: oracle_coproduct(t, skip_empty=True)  # noqa: E731
        contract = hopf.contract
    elif kind == "contract-keep-isolated":
        product = algebra.product
        coproduct = lambda t: oracle_coproduct(t, contract_fn=_contract_keep_isolated)  # noqa: E731
        contract = _contract_keep_isolated
    else:
        raise ValueError(f"unknown mutation {kind!r}; choose from {sorted(MUTATIONS)}")
    left, right = _generic_antipodes(product, coproduct)
    return HopfOps(kind, product, coproduct, left, right, hopf.subgraph, contract)


def convolution(f, g, ops: HopfOps = REFERENCE):
    """``(f ⋆ g)(x) = m ∘ (f ⊗ g) ∘ Δ(x)`` for maps from Tags to LinCombs.

    The returned map accepts a Tag or a LinComb.
    """

    def conv(x):
        if isinstance(x, Tag):
            x = LinComb.of(x)
        acc = []
        for t, c in x.items():
            for (a, b), k in ops.coproduct(t).items():
                for p, cp in f(a).items():
                    for q, cq in g(b).items():
                        acc.append((ops.product(p, q), c * k * cp * cq))
        return LinComb(acc)

    return conv


def identity_map(t: Tag) -> LinComb:
    return LinComb.of(t)


def unit_counit(t: Tag) -> LinComb:
    """``η ∘ ε``: the unit of the convolution algebra."""
    return LinComb.one() if t.is_empty() else LinComb.zero()


# ---------------------------------------------------------------------------
# reports

@dataclass
class AxiomResult:
    name: str
    universe: str
    cases: int
    passed: bool
    counterexample: dict | None = None

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status} {self.name} universe={self.universe} cases={self.cases}"
        if self.counterexample:
            text += "\n" + "\n".join(f"    {k}: {v}" for k, v in self.counterexample.items())
        return text

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "universe": self.universe,
            "cases": self.cases,
            "status": "pass" if self.passed else "fail",
            "counterexample": self.counterexample,
        }


@dataclass
class VerificationReport:
    ops: str
    results: list[AxiomResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def failed(self) -> list[AxiomResult]:
        return [r for r in self.results if not r.passed]

    def get(self, name: str, universe: str | None = None) -> AxiomResult:
        for r in self.results:
            if r.name == name and (universe is None or r.universe == universe):
                return r
        raise KeyError(name)

    def merge(self, other: VerificationReport) -> VerificationReport:
        return VerificationReport(self.ops, self.results + other.results)

    def to_text(self) -> str:
        n_fail = len(self.failed())
        head = f"# operations={self.ops} axioms={len(self.results)} failed={n_fail}"
        return "\n".join([head] + [r.line() for r in self.results]) + "\n"

    def to_json(self) -> str:
        doc = {
            "operations": self.ops,
            "passed": self.passed,
            "axioms": [r.to_dict() for r in self.results],
        }
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"


class _Failure(Exception):
    def __init__(self, **fields):
        super().__init__(fields)
        self.fields = {k: str(v) for k, v in fields.items()}


def _check(name, universe, cases, fn, results):
    """Run ``fn(case)`` over ``cases``; stop at the first _Failure."""
    n = 0
    for case in cases:
        n += 1
        try:
            fn(case)
        except _Failure as exc:
            results.append(AxiomResult(name, universe, n, False, exc.fields))
            return
    results.append(AxiomResult(name, universe, n, True))


def _r(t: Tag) -> str:
    return render_tag(t, canonical=False)


# ---------------------------------------------------------------------------
# the suite

def _core_axioms(u: TestUniverse, tags, results):
    name = u.describe()

    def idempotent(t):
        for sigma in _some_relabellings(t):
            c = canonicalize(sigma)
            if canonicalize(c) != c:
                raise _Failure(input=_r(sigma), once=_r(c), twice=_r(canonicalize(c)))

    _check("core.canonical_idempotent", name, tags, idempotent, results)

    if u.mode == "exhaustive":
        small = [t for t in tags if len(t.edges) <= 3 and t.vertex_count <= 5]
    else:
        small = [t for t in tags if t.vertex_count <= 6]

    def brute(t):
        for sigma in _some_relabellings(t):
            want = brute_canonical(sigma)
            got = canonicalize(sigma)
            if got != want:
                raise _Failure(input=_r(sigma), canonicalize=_r(got), brute_force=_r(want))

    _check("core.canonical_matches_bruteforce", name, small, brute, results)

    pool = []
    for t in small[:120]:
        pool.extend(_some_relabellings(t, limit=2))

    def equivalence(a):
        cls_a = {i for i, b in enumerate(pool) if is_isomorphic(a, b)}
        if not is_isomorphic(a, a):
            raise _Failure(input=_r(a), reason="not reflexive")
        for i in cls_a:
            b = pool[i]
            if not is_isomorphic(b, a):
                raise _Failure(a=_r(a), b=_r(b), reason="not symmetric")
            cls_b = {j for j, c in enumerate(pool) if is_isomorphic(b, c)}
            if cls_b != cls_a:
                raise _Failure(a=_r(a), b=_r(b), reason="not transitive")

    _check("core.isomorphism_is_equivalence", name, pool, equivalence, results)

    if u.mode == "exhaustive":
        msf_tags = enumerate_tags(min(4, MAX_EXHAUSTIVE_EDGES))
    else:
        msf_tags = tags

    def msf(t):
        got = tuple(sorted(min_spanning_forest(t)))
        forests = brute_min_spanning_forests(t)
        if not forests or got != forests[0] or (len(forests) > 1 and forests[1] == forests[0]):
            raise _Failure(input=_r(t), kruskal=got, brute_force_min=forests[:2])

    _check("core.spanning_forest_unique_minimum", name, msf_tags, msf, results)

    def roundtrip(t):
        text = render_tag(t)
        if parse_tag(text) != t:
            raise _Failure(input=text, reparsed=_r(parse_tag(text)))
        for sigma in _some_relabellings(t, limit=3):
            raw = render_tag(sigma, canonical=False)
            if render_tag(parse_tag(raw)) != text:
                raise _Failure(input=raw, rendered=render_tag(parse_tag(raw)), expected=text)

    _check("core.render_parse_roundtrip", name, tags, roundtrip, results)


def _some_relabellings(t: Tag, limit: int = 6):
    """``t`` under up to ``limit`` deterministic vertex permutations."""
    out = []
    for perm in itertools.islice(itertools.permutations(range(1, t.vertex_count + 1)), 0, None, 7):
        out.append(Tag(t.vertex_count, tuple(
            (perm[a - 1], perm[b - 1]) if perm[a - 1] <= perm[b - 1] else (perm[b - 1], perm[a - 1])
            for a, b in t.edges)))
        if len(out) >= limit:
            break
    rev = tuple(range(t.vertex_count, 0, -1))
    out.append(Tag(t.vertex_count, tuple(
        (rev[a - 1], rev[b - 1]) if rev[a - 1] <= rev[b - 1] else (rev[b - 1], rev[a - 1])
        for a, b in t.edges)))
    return out or [t]


def _algebra_axioms(u: TestUniverse, ops: HopfOps, tags, pairs, triples, results):
    name = u.describe()
    one = LinComb.one()

    def unit(t):
        x = LinComb.of(t)
        if _mul(ops, one, x) != x or _mul(ops, x, one) != x:
            raise _Failure(input=_r(t), left=_mul(ops, one, x), right=_mul(ops, x, one))

    _check("algebra.unit_laws", name, tags, unit, results)

    def assoc(abc):
        a, b, c = (LinComb.of(t) for t in abc)
        lhs = _mul(ops, _mul(ops, a, b), c)
        rhs = _mul(ops, a, _mul(ops, b, c))
        if lhs != rhs:
            raise _Failure(input=" , ".join(_r(t) for t in abc), lhs=lhs, rhs=rhs)

    _check("algebra.associativity", name, triples, assoc, results)

    def grading(ab):
        a, b = ab
        p = ops.product(a, b)
        if len(p.edges) != len(a.edges) + len(b.edges):
            raise _Failure(input=f"{_r(a)} , {_r(b)}", product=_r(p))

    _check("algebra.grading_product", name, pairs, grading, results)

    rng = random.Random(f"linear:{u.seed}")

    def rand_comb():
        return LinComb((rng.choice(tags), _rand_coef(rng)) for _ in range(rng.randint(0, 3)))

    combos = [(rand_comb(), rand_comb(), rand_comb(), _rand_coef(rng), _rand_coef(rng))
              for _ in range(min(60, max(len(tags), 1)))]

    def vector_space(case):
        x, y, z, c, d = case
        zero = LinComb.zero()
        laws = {
            "add_assoc": ((x + y) + z, x + (y + z)),
            "add_comm": (x + y, y + x),
            "add_zero": (x + zero, x),
            "add_inverse": (x - x, zero),
            "scalar_dist": ((x + y).scale(c), x.scale(c) + y.scale(c)),
            "scalar_add": (x.scale(c + d), x.scale(c) + x.scale(d)),
            "scalar_assoc": (x.scale(c * d), x.scale(d).scale(c)),
            "mul_left_dist": (_mul(ops, x + y, z), _mul(ops, x, z) + _mul(ops, y, z)),
            "mul_right_dist": (_mul(ops, z, x + y), _mul(ops, z, x) + _mul(ops, z, y)),
        }
        for law, (lhs, rhs) in laws.items():
            if lhs != rhs:
                raise _Failure(law=law, x=x, y=y, z=z, lhs=lhs, rhs=rhs)
        # tensor bilinearity against a term-by-term expansion
        tx = algebra.tensor(x, y)
        ty = algebra.tensor(z, x)
        expanded = TensorComb(
            ((ops.product(a, c2), ops.product(b, d2)), ca * cb)
            for (a, b), ca in tx.items() for (c2, d2), cb in ty.items()
        )
        if _tensor_mul(ops, tx, ty) != expanded:
            raise _Failure(law="tensor_bilinear", x=tx, y=ty)

    _check("algebra.vector_space_and_bilinearity", name, combos, vector_space, results)

    edge = Tag(2, ((1, 2),))
    bubble = Tag(2, ((1, 2), (1, 2)))

    def witness(_):
        eb = canonicalize(ops.product(edge, bubble))
        be = canonicalize(ops.product(bubble, edge))
        if eb == be:
            raise _Failure(edge_bubble=_r(eb), bubble_edge=_r(be), reason="products coincide")
        if comm.forget(eb) != comm.forget(be):
            raise _Failure(edge_bubble=comm.render_bare(comm.forget(eb)),
                           bubble_edge=comm.render_bare(comm.forget(be)),
                           reason="projections differ")

    _check("algebra.noncommutativity_witness", name, [None], witness, results)


def _rand_coef(rng):
    return Fraction(rng.choice([-3, -2, -1, 1, 2, 5]), rng.choice([1, 1, 2, 3]))


def _tensor_mul(ops: HopfOps, x: TensorComb, y: TensorComb) -> TensorComb:
    return TensorComb(
        (tuple(ops.product(a, b) for a, b in zip(kx, ky)), cx * cy)
        for kx, cx in x.items() for ky, cy in y.items()
    )


def _positions_after(m: int, removed) -> dict[int, int]:
    """Host position -> position in the quotient, for positions not removed."""
    mapping = {}
    for p in range(1, m + 1):
        if p not in removed:
            mapping[p] = len(mapping) + 1
    return mapping


def _hopf_axioms(u: TestUniverse, ops: HopfOps, tags, pairs, results):
    name = u.describe()

    def coassoc(t):
        d = ops.coproduct(t)
        lhs = TensorComb(((a1, a2, b), c * c2) for (a, b), c in d.items()
                         for (a1, a2), c2 in ops.coproduct(a).items())
        rhs = TensorComb(((a, b1, b2), c * c2) for (a, b), c in d.items()
                         for (b1, b2), c2 in ops.coproduct(b).items())
        if lhs != rhs:
            raise _Failure(input=_r(t), lhs=lhs, rhs=rhs, difference=lhs - rhs)

    _check("hopf.coassociativity", name, tags, coassoc, results)

    def counit_left(t):
        got = LinComb((b, c) for (a, b), c in ops.coproduct(t).items() if a.is_empty())
        if got != LinComb.of(t):
            raise _Failure(input=_r(t), lhs=got, rhs=_r(t))

    def counit_right(t):
        got = LinComb((a, c) for (a, b), c in ops.coproduct(t).items() if b.is_empty())
        if got != LinComb.of(t):
            raise _Failure(input=_r(t), lhs=got, rhs=_r(t))

    _check("hopf.counit_left", name, tags, counit_left, results)
    _check("hopf.counit_right", name, tags, counit_right, results)

    def bialgebra(ab):
        a, b = ab
        lhs = _delta(ops, LinComb.of(ops.product(a, b)))
        rhs = _tensor_mul(ops, ops.coproduct(a), ops.coproduct(b))
        if lhs != rhs:
            raise _Failure(input=f"{_r(a)} , {_r(b)}", lhs=lhs, rhs=rhs)

    _check("hopf.bialgebra_compatibility", name, pairs, bialgebra, results)

    s_star_id = convolution(lambda t: ops.antipode(t), identity_map, ops)
    id_star_s = convolution(identity_map, lambda t: ops.antipode(t), ops)
    eta_eps_star_id = convolution(unit_counit, identity_map, ops)

    def conv_unit(t):
        got = eta_eps_star_id(t)
        if got != LinComb.of(t):
            raise _Failure(input=_r(t), lhs=got, rhs=_r(t))

    _check("hopf.convolution_unit", name, tags, conv_unit, results)

    def antipode_left(t):
        got = s_star_id(t)
        want = LinComb.one() if t.is_empty() else LinComb.zero()
        if got != want:
            raise _Failure(input=_r(t), lhs=got, rhs=want)

    def antipode_right(t):
        got = id_star_s(t)
        want = LinComb.one() if t.is_empty() else LinComb.zero()
        if got != want:
            raise _Failure(input=_r(t), lhs=got, rhs=want)

    _check("hopf.antipode_left_inverse", name, tags, antipode_left, results)
    _check("hopf.antipode_right_inverse", name, tags, antipode_right, results)

    def recursions(t):
        a, b = ops.antipode(t), ops.antipode_right(t)
        if a != b:
            raise _Failure(input=_r(t), subgraph_recursion=a, quotient_recursion=b)

    _check("hopf.antipode_recursions_agree", name, tags, recursions, results)

    def anti_hom(ab):
        a, b = ab
        lhs = ops.antipode(canonicalize(ops.product(a, b)))
        rhs = _mul(ops, ops.antipode(b), ops.antipode(a))
        if lhs != rhs:
            raise _Failure(input=f"{_r(a)} , {_r(b)}", lhs=lhs, rhs=rhs)

    _check("hopf.antipode_antihomomorphism", name, pairs, anti_hom, results)

    def grading(t):
        for (a, b), _ in ops.coproduct(t).items():
            if len(a.edges) + len(b.edges) != len(t.edges):
                raise _Failure(input=_r(t), term=f"{_r(a)} (x) {_r(b)}")

    _check("hopf.grading_coproduct", name, tags, grading, results)

    def term_count(t):
        total = sum(ops.coproduct(t).values())
        if total != 2 ** len(t.edges):
            raise _Failure(input=_r(t), terms=total, expected=2 ** len(t.edges))

    _check("hopf.term_count", name, tags, term_count, results)

    def vs_oracle(t):
        want = oracle_coproduct(t, ops.subgraph, ops.contract)
        got = ops.coproduct(t)
        if got != want:
            raise _Failure(input=_r(t), coproduct=got, oracle=want)

    _check("hopf.coproduct_matches_oracle", name, tags, vs_oracle, results)

    # 3**|E| nested pairs per host: all small hosts, or the first few samples
    if u.mode == "exhaustive":
        lemma_hosts = [t for t in tags if len(t.edges) <= 3]
    else:
        lemma_hosts = tags[:40]

    def lemma(t):
        m = len(t.edges)
        for s in _subsets(m):
            once = ops.contract(t, s)
            for inner in _subsets_of(s):
                first = ops.contract(t, inner)
                pos = _positions_after(m, inner)
                twice = ops.contract(first, [pos[p] for p in s - inner])
                if canonicalize(once) != canonicalize(twice):
                    raise _Failure(input=_r(t), outer=sorted(s), inner=sorted(inner),
                                   one_shot=_r(once), iterated=_r(twice))

    _check("hopf.iterated_contraction", name, lemma_hosts, lemma, results)

    def bijection(t):
        m = len(t.edges)
        lhs, rhs = [], []
        for s in _subsets(m):
            quot = ops.contract(t, s)
            pos = _positions_after(m, s)
            supersets = [s1 for s1 in _subsets(m) if s <= s1]
            if len(supersets) != 2 ** len(quot.edges):
                raise _Failure(input=_r(t), subset=sorted(s), supersets=len(supersets),
                               quotient_subsets=2 ** len(quot.edges))
            sub_s = ops.subgraph(t, s)
            for s1 in supersets:
                image = [pos[p] for p in sorted(s1 - s)]
                sub1 = ops.subgraph(t, s1)
                rel = _positions_after(m, set(range(1, m + 1)) - s1)  # host -> position in sub1
                gamma_over = ops.contract(sub1, [rel[p] for p in s])
                if canonicalize(ops.subgraph(quot, image)) != canonicalize(gamma_over):
                    raise _Failure(input=_r(t), subset=sorted(s), superset=sorted(s1),
                                   quotient_subgraph=_r(ops.subgraph(quot, image)),
                                   superset_over_subset=_r(gamma_over))
                if canonicalize(ops.contract(quot, image)) != canonicalize(ops.contract(t, s1)):
                    raise _Failure(input=_r(t), subset=sorted(s), superset=sorted(s1),
                                   iterated=_r(ops.contract(quot, image)),
                                   one_shot=_r(ops.contract(t, s1)))
                # RHS1: gamma (x) gamma1/gamma (x) Gamma/gamma1
                rhs.append(((sub_s, gamma_over, ops.contract(t, s1)), 1))
            # LHS: gamma' (x) gamma/gamma' (x) Gamma/gamma, gamma' inside gamma = s
            rel_s = _positions_after(m, set(range(1, m + 1)) - s)
            for inner in _subsets_of(s):
                lhs.append(((ops.subgraph(t, inner), ops.contract(sub_s, [rel_s[p] for p in inner]),
                             quot), 1))
        if TensorComb(lhs) != TensorComb(rhs):
            raise _Failure(input=_r(t), lhs=TensorComb(lhs), rhs=TensorComb(rhs))

    _check("hopf.subset_quotient_bijection", name, lemma_hosts, bijection, results)


def _subsets(m: int):
    for mask in range(1 << m):
        yield frozenset(i + 1 for i in range(m) if mask >> i & 1)


def _subsets_of(s: frozenset):
    items = sorted(s)
    for r in range(len(items) + 1):
        for c in itertools.combinations(items, r):
            yield frozenset(c)


def _commutative_axioms(u: TestUniverse, ops: HopfOps, tags, pairs, results):
    name = u.describe()

    def algebra_morphism(ab):
        a, b = ab
        lhs = comm.forget(canonicalize(ops.product(a, b)))
        rhs = comm.bare_product(comm.forget(a), comm.forget(b))
        if lhs != rhs:
            raise _Failure(input=f"{_r(a)} , {_r(b)}", lhs=comm.render_bare(lhs),
                           rhs=comm.render_bare(rhs))

    _check("commutative.projection_algebra_morphism", name, pairs, algebra_morphism, results)

    def coalgebra_morphism(t):
        lhs = comm.project_tensor(ops.coproduct(t))
        rhs = comm.bare_coproduct(comm.forget(t))
        if lhs != rhs:
            raise _Failure(input=_r(t), lhs=lhs, rhs=rhs)

    _check("commutative.projection_coalgebra_morphism", name, tags, coalgebra_morphism, results)

    def counit(t):
        if comm.bare_counit(comm.project(LinComb.of(t))) != hopf.counit(LinComb.of(t)):
            raise _Failure(input=_r(t))

    _check("commutative.projection_counit", name, tags, counit, results)

    def antipode(t):
        lhs = comm.project(ops.antipode(t))
        rhs = comm.bare_antipode(comm.forget(t))
        if lhs != rhs:
            raise _Failure(input=_r(t), lhs=lhs, rhs=rhs)

    _check("commutative.projection_antipode", name, tags, antipode, results)

    bare_pairs = [(comm.forget(a), comm.forget(b)) for a, b in pairs]

    def commutes(ab):
        a, b = ab
        if comm.bare_product(a, b) != comm.bare_product(b, a):
            raise _Failure(a=comm.render_bare(a), b=comm.render_bare(b))

    _check("commutative.product_commutative", name, bare_pairs, commutes, results)

    bare = sorted({comm.forget(t) for t in tags}, key=comm.BareGraph.sort_key)

    def bare_hopf(g):
        d = comm.bare_coproduct(g)
        lhs = comm.BareTensorComb(((a1, a2, b), c * c2) for (a, b), c in d.items()
                                  for (a1, a2), c2 in comm.bare_coproduct(a).items())
        rhs = comm.BareTensorComb(((a, b1, b2), c * c2) for (a, b), c in d.items()
                                  for (b1, b2), c2 in comm.bare_coproduct(b).items())
        if lhs != rhs:
            raise _Failure(input=comm.render_bare(g), axiom="coassociativity", lhs=lhs, rhs=rhs)
        g_lin = comm.BareLinComb.of(g)
        left = comm.BareLinComb((b, c) for (a, b), c in d.items() if a.is_empty())
        right = comm.BareLinComb((a, c) for (a, b), c in d.items() if b.is_empty())
        if left != g_lin or right != g_lin:
            raise _Failure(input=comm.render_bare(g), axiom="counit", left=left, right=right)
        want = comm.BareLinComb.of(comm.BARE_EMPTY) if g.is_empty() else comm.BareLinComb.zero()
        s_id = comm.BareLinComb(
            (comm.bare_product(h, b), c * ch) for (a, b), c in d.items()
            for h, ch in comm.bare_antipode(a).items())
        id_s = comm.BareLinComb(
            (comm.bare_product(a, h), c * ch) for (a, b), c in d.items()
            for h, ch in comm.bare_antipode(b).items())
        if s_id != want or id_s != want:
            raise _Failure(input=comm.render_bare(g), axiom="antipode", s_id=s_id, id_s=id_s)

    _check("commutative.hopf_axioms", name, bare, bare_hopf, results)

    def bare_bialgebra(ab):
        a, b = ab
        lhs = comm.bare_coproduct(comm.bare_product(a, b))
        rhs = comm.bare_tensor_product(comm.bare_coproduct(a), comm.bare_coproduct(b))
        if lhs != rhs:
            raise _Failure(a=comm.render_bare(a), b=comm.render_bare(b), lhs=lhs, rhs=rhs)

    _check("commutative.bialgebra_compatibility", name, bare_pairs, bare_bialgebra, results)


def run_axiom_suite(u: TestUniverse, ops: HopfOps = REFERENCE) -> VerificationReport:
    """Check every algebraic law over the universe; failures go in the report."""
    tags = u.tags()
    pairs = u.pairs()
    triples = u.triples()
    results: list[AxiomResult] = []
    _core_axioms(u, tags, results)
    _algebra_axioms(u, ops, tags, pairs, triples, results)
    _hopf_axioms(u, ops, tags, pairs, results)
    _commutative_axioms(u, ops, tags, pairs, results)
    return VerificationReport(ops.name, results)


def run_standard_suite(max_edges: int = 3, samples: int = 200, sample_max_edges: int = 5,
                       seed: int = 0, ops: HopfOps = REFERENCE) -> VerificationReport:
    """Exhaustive universe up to ``max_edges`` plus a seeded sample above it."""
    report = run_axiom_suite(TestUniverse(max_edges=max_edges), ops)
    if samples > 0 and sample_max_edges > max_edges:
        sampled = TestUniverse(max_edges=sample_max_edges, mode="sampled", seed=seed,
                               count=samples, min_edges=max_edges + 1)
        report = report.merge(run_axiom_suite(sampled, ops))
    return report
