import itertools

import pytest
from hypothesis import given, settings

from taghopf.errors import EndpointRangeError, IsolatedVertexError, TagError, TagSyntaxError
from taghopf.graph import (
    EMPTY,
    Tag,
    canonicalize,
    connected_components,
    is_isomorphic,
    make_tag,
    min_spanning_forest,
    parse_tag,
    render_tag,
)
from taghopf.verify import brute_canonical, brute_min_spanning_forests, enumerate_tags

from .conftest import brute_tag_isomorphic, relabel, tags


class TestMakeTag:
    def test_unit(self):
        assert make_tag(0, []) == EMPTY
        assert EMPTY.is_empty()

    def test_bubble(self, bubble):
        assert bubble.vertex_count == 2
        assert bubble.edges == ((1, 2), (1, 2))

    def test_tadpole(self, tadpole):
        assert tadpole.edges == ((1, 1),)

    def test_endpoints_are_sorted(self):
        assert make_tag(2, [(2, 1)]).edges == ((1, 2),)

    @pytest.mark.parametrize("n, edges", [(2, [(1, 3)]), (2, [(0, 1)]), (1, [(1, 2)])])
    def test_out_of_range(self, n, edges):
        with pytest.raises(EndpointRangeError):
            make_tag(n, edges)

    def test_isolated_vertex(self):
        with pytest.raises(IsolatedVertexError, match="isolated vertex not representable"):
            make_tag(3, [(1, 2)])
        with pytest.raises(IsolatedVertexError):
            make_tag(1, [])

    def test_bad_types(self):
        with pytest.raises(TagError):
            make_tag(-1, [])
        with pytest.raises(TagError):
            make_tag(2, [(1.0, 2)])


class TestCanonicalize:
    def test_bubble_is_fixed(self, bubble):
        assert canonicalize(bubble) == bubble

    def test_edge_order_matters(self):
        a = make_tag(2, [(1, 1), (1, 2)])
        b = make_tag(2, [(1, 2), (1, 1)])
        assert not brute_tag_isomorphic(a, b)
        assert canonicalize(a) != canonicalize(b)
        # a 3-path whose middle edge comes second vs first
        c = make_tag(4, [(1, 2), (2, 3), (3, 4)])
        d = make_tag(4, [(2, 3), (1, 2), (3, 4)])
        assert not brute_tag_isomorphic(c, d)
        assert canonicalize(c) != canonicalize(d)

    def test_reordered_two_path_is_isomorphic(self):
        # reversing the path swaps which end is met first, so the reordered
        # 2-path is the same TAG (vertex map 1<->3 fixes both positions)
        a = make_tag(3, [(2, 3), (1, 2)])
        b = make_tag(3, [(1, 2), (2, 3)])
        assert brute_tag_isomorphic(a, b)
        assert canonicalize(a) == canonicalize(b)

    def test_relabelled_two_paths(self):
        a = make_tag(3, [(2, 3), (1, 3)])
        b = make_tag(3, [(1, 2), (2, 3)])
        assert brute_tag_isomorphic(a, b)
        assert canonicalize(a) == canonicalize(b) == make_tag(3, [(1, 2), (1, 3)])

    @settings(max_examples=200, deadline=None)
    @given(tags(max_edges=5))
    def test_idempotent(self, t):
        c = canonicalize(t)
        assert canonicalize(c) == c

    def test_matches_brute_force_up_to_three_edges(self):
        for t in enumerate_tags(3):
            if t.vertex_count > 5:
                continue
            for perm in itertools.permutations(range(1, t.vertex_count + 1)):
                s = relabel(t, perm)
                assert canonicalize(s) == brute_canonical(s) == t


class TestIsomorphism:
    def test_renamed_bubble(self, bubble):
        assert is_isomorphic(bubble, make_tag(2, [(2, 1), (1, 2)]))

    def test_path_with_swapped_order(self):
        a = make_tag(3, [(1, 2), (2, 3)])
        b = make_tag(3, [(2, 3), (1, 2)])
        assert brute_tag_isomorphic(a, b)
        assert is_isomorphic(a, b)
        c = make_tag(4, [(1, 2), (2, 3), (3, 4)])
        d = make_tag(4, [(2, 3), (1, 2), (3, 4)])
        assert not brute_tag_isomorphic(c, d)
        assert not is_isomorphic(c, d)

    def test_unit(self):
        assert is_isomorphic(EMPTY, EMPTY)

    @settings(max_examples=100, deadline=None)
    @given(tags(max_edges=4, max_vertices=5), tags(max_edges=4, max_vertices=5))
    def test_agrees_with_brute_force(self, a, b):
        assert is_isomorphic(a, b) == brute_tag_isomorphic(a, b)

    def test_equivalence_relation_up_to_three_edges(self):
        pool = []
        for t in enumerate_tags(3):
            perms = itertools.islice(itertools.permutations(range(1, t.vertex_count + 1)), 3)
            pool.extend(relabel(t, p) for p in perms)
        rel = {(i, j): is_isomorphic(a, b) for i, a in enumerate(pool) for j, b in enumerate(pool)}
        n = len(pool)
        for i in range(n):
            assert rel[i, i]
            for j in range(n):
                assert rel[i, j] == rel[j, i]
        # transitivity via equal neighbourhoods of related elements
        rows = [frozenset(j for j in range(n) if rel[i, j]) for i in range(n)]
        for i in range(n):
            for j in rows[i]:
                assert rows[j] == rows[i]


class TestComponents:
    def test_bubble(self, bubble):
        comps = connected_components(bubble)
        assert len(comps) == 1
        assert comps[0].vertices == (1, 2) and comps[0].positions == (1, 2)

    def test_two_components(self):
        comps = connected_components(make_tag(4, [(1, 2), (3, 4)]))
        assert [c.vertices for c in comps] == [(1, 2), (3, 4)]
        assert [c.positions for c in comps] == [(1,), (2,)]

    def test_unit(self):
        assert connected_components(EMPTY) == []

    def test_ordered_by_smallest_vertex(self):
        comps = connected_components(make_tag(4, [(2, 4), (1, 3)]))
        assert [c.vertices for c in comps] == [(1, 3), (2, 4)]


class TestSpanningForest:
    def test_bubble(self, bubble):
        assert brute_min_spanning_forests(bubble)[0] == (1,)
        assert min_spanning_forest(bubble) == {1}

    def test_triangle(self, triangle):
        assert brute_min_spanning_forests(triangle)[0] == (1, 2)
        assert min_spanning_forest(triangle) == {1, 2}

    def test_tadpole(self, tadpole):
        assert min_spanning_forest(tadpole) == frozenset()

    def test_unique_lexicographic_minimum_up_to_four_edges(self):
        for t in enumerate_tags(4):
            got = tuple(sorted(min_spanning_forest(t)))
            forests = brute_min_spanning_forests(t)
            assert got == forests[0]
            assert len(forests) == 1 or forests[1] > got
            # acyclic and spanning: one edge fewer than vertices per component
            assert len(got) == t.vertex_count - len(connected_components(t))


class TestText:
    def test_parse_bubble(self, bubble):
        assert parse_tag("g{2;(1,2)(1,2)}") == bubble

    def test_parse_unit(self):
        assert parse_tag("g{0;}") == EMPTY

    def test_whitespace(self, bubble):
        assert parse_tag(" g{ 2 ; (1, 2) (2,1) }\n") == bubble

    def test_render_canonicalizes(self):
        assert render_tag(parse_tag("g{3;(2,3)(1,3)}")) == "g{3;(1,2)(1,3)}"
        assert render_tag(parse_tag("g{3;(2,3)(1,3)}"), canonical=False) == "g{3;(2,3)(1,3)}"

    @pytest.mark.parametrize("text", ["g{2;(1,2)", "h{1;(1,1)}", "g{1;(1,1),}", "g{a;}", ""])
    def test_malformed(self, text):
        with pytest.raises(TagSyntaxError):
            parse_tag(text)

    def test_range_and_isolated_diagnostics_differ(self):
        with pytest.raises(EndpointRangeError):
            parse_tag("g{2;(1,3)}")
        with pytest.raises(IsolatedVertexError):
            parse_tag("g{3;(1,2)}")

    def test_roundtrip_on_canonical_tags(self):
        for t in enumerate_tags(3):
            assert parse_tag(render_tag(t)) == t

    @settings(max_examples=100, deadline=None)
    @given(tags(max_edges=5))
    def test_render_of_parse_is_canonical_render(self, t):
        raw = render_tag(t, canonical=False)
        assert render_tag(parse_tag(raw)) == render_tag(canonicalize(t))

    def test_str(self, bubble):
        assert str(bubble) == "g{2;(1,2)(1,2)}"


def test_tag_is_hashable_and_ordered(edge, bubble):
    assert len({edge, bubble, Tag(2, ((1, 2),))}) == 2
    assert edge < bubble
