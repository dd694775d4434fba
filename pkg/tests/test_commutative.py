import itertools

import pytest
from hypothesis import given, settings

from taghopf.algebra import LinComb, product
from taghopf.commutative import (
    BARE_EMPTY,
    BareGraph,
    BareLinComb,
    BareTensorComb,
    bare_antipode,
    bare_canonicalize,
    bare_coproduct,
    bare_counit,
    bare_product,
    forget,
    make_bare,
    parse_bare,
    project,
    project_tensor,
    render_bare,
)
from taghopf.errors import CapacityError, TagSyntaxError
from taghopf.graph import EMPTY, make_tag
from taghopf.hopf import antipode, coproduct
from taghopf.verify import enumerate_tags

from .conftest import tags

DOUBLE = make_bare(2, [(1, 2), (1, 2)])
EDGE = make_bare(2, [(1, 2)])
LOOP = make_bare(1, [(1, 1)])


def brute_bare_isomorphic(a: BareGraph, b: BareGraph) -> bool:
    if a.vertex_count != b.vertex_count or len(a.edges) != len(b.edges):
        return False
    target = sorted(b.edges)
    for perm in itertools.permutations(range(1, a.vertex_count + 1)):
        mapped = sorted(tuple(sorted((perm[u - 1], perm[v - 1]))) for u, v in a.edges)
        if mapped == target:
            return True
    return False


class TestForget:
    def test_examples(self, bubble):
        assert forget(EMPTY) == BARE_EMPTY
        assert forget(bubble) == DOUBLE

    def test_product_witness(self, edge, bubble):
        x = LinComb.of(product(edge, bubble)) - LinComb.of(product(bubble, edge))
        assert x != 0
        assert project(x) == 0

    def test_all_orders_forget_alike(self, triangle):
        for perm in itertools.permutations(triangle.edges):
            assert forget(make_tag(3, perm)) == forget(triangle)


class TestBareCanonicalize:
    def test_swapped_double_edge(self):
        assert bare_canonicalize(make_bare(2, [(2, 1), (1, 2)])) == bare_canonicalize(DOUBLE)

    def test_path_differs_from_two_edges(self):
        path = make_bare(3, [(1, 2), (2, 3)])
        pair = make_bare(4, [(1, 2), (3, 4)])
        assert bare_canonicalize(path) != bare_canonicalize(pair)

    def test_triangle_all_labellings(self):
        keys = {
            bare_canonicalize(make_bare(3, [(p[0], p[1]), (p[1], p[2]), (p[0], p[2])]))
            for p in itertools.permutations((1, 2, 3))
        }
        assert len(keys) == 1

    @settings(max_examples=150, deadline=None)
    @given(tags(max_edges=5, max_vertices=5), tags(max_edges=5, max_vertices=5))
    def test_complete_invariant(self, a, b):
        ga = BareGraph(a.vertex_count, tuple(sorted(a.edges)))
        gb = BareGraph(b.vertex_count, tuple(sorted(b.edges)))
        same = bare_canonicalize(ga) == bare_canonicalize(gb)
        assert same == brute_bare_isomorphic(ga, gb)

    def test_regular_graphs_are_separated(self):
        # colour refinement alone cannot split these: a 6-cycle vs two triangles
        hexagon = make_bare(6, [(i, i % 6 + 1) for i in range(1, 7)])
        triangles = make_bare(6, [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)])
        prism = make_bare(6, [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6), (1, 4), (2, 5), (3, 6)])
        k33 = make_bare(6, [(a, b) for a in (1, 2, 3) for b in (4, 5, 6)])
        assert bare_canonicalize(hexagon) != bare_canonicalize(triangles)
        assert bare_canonicalize(prism) != bare_canonicalize(k33)

    def test_component_capacity(self):
        big = make_bare(11, [(i, i + 1) for i in range(1, 11)])
        with pytest.raises(CapacityError):
            bare_canonicalize(big)


class TestBareCoproduct:
    def test_double_edge(self):
        want = BareTensorComb({(DOUBLE, BARE_EMPTY): 1, (BARE_EMPTY, DOUBLE): 1, (EDGE, LOOP): 2})
        assert bare_coproduct(DOUBLE) == want

    def test_term_count(self):
        for t in enumerate_tags(4):
            assert sum(bare_coproduct(forget(t)).values()) == 2 ** len(t.edges)

    def test_counit(self):
        assert bare_counit(BARE_EMPTY) == 1
        assert bare_counit(DOUBLE) == 0
        assert bare_counit(BareLinComb([(BARE_EMPTY, 4), (EDGE, 1)])) == 4


class TestMorphism:
    def test_algebra(self):
        small = enumerate_tags(2)
        for a, b in itertools.product(small, small):
            assert forget(product(a, b)) == bare_product(forget(a), forget(b))

    def test_coalgebra(self):
        for t in enumerate_tags(3):
            assert project_tensor(coproduct(t)) == bare_coproduct(forget(t))

    def test_antipode(self):
        for t in enumerate_tags(3):
            assert project(antipode(t)) == bare_antipode(forget(t))

    def test_product_is_commutative(self):
        small = [forget(t) for t in enumerate_tags(2)]
        for a, b in itertools.product(small, small):
            assert bare_product(a, b) == bare_product(b, a)

    def test_bare_antipode_inverse(self):
        for t in enumerate_tags(3):
            g = forget(t)
            acc = BareLinComb.zero()
            for (a, b), c in bare_coproduct(g).items():
                acc = acc + (bare_antipode(a) * BareLinComb.of(b)).scale(c)
            assert acc == (BareLinComb.of(BARE_EMPTY) if g.is_empty() else 0)


class TestText:
    def test_roundtrip(self):
        assert parse_bare("b{2;(1,2)(1,2)}") == DOUBLE
        assert render_bare(make_bare(3, [(2, 3), (1, 2)])) == render_bare(make_bare(3, [(1, 2), (1, 3)]))

    def test_malformed(self):
        with pytest.raises(TagSyntaxError):
            parse_bare("g{2;(1,2)}")
