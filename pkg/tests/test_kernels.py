import itertools

from hypothesis import given, settings

from taghopf import _kernels
from taghopf.verify import brute_canonical

from .conftest import tags


def test_backend_name():
    assert _kernels.BACKEND in ("python", "cython")


def test_canonical_edges_small_cases(backend):
    assert backend.canonical_edges(()) == ()
    assert backend.canonical_edges(((7, 7),)) == ((1, 1),)
    assert backend.canonical_edges(((5, 9), (5, 9))) == ((1, 2), (1, 2))
    assert backend.canonical_edges(((2, 3), (1, 3))) == ((1, 2), (1, 3))


@settings(max_examples=300, deadline=None)
@given(tags(max_edges=6, max_vertices=6))
def test_canonical_edges_is_permutation_minimum(t):
    want = brute_canonical(t).edges
    for mod in (_kernels.python_backend, _kernels.compiled_backend):
        if mod is not None:
            assert mod.canonical_edges(t.edges) == want


def test_many_symmetric_components(backend):
    # disjoint parallel pairs keep many labelling states alive at once
    edges = []
    for k in range(8):
        edges.append((2 * k + 1, 2 * k + 2))
    edges += edges[::-1]
    got = backend.canonical_edges(tuple(edges))
    assert got[:8] == tuple((2 * k + 1, 2 * k + 2) for k in range(8))
    assert got[8:] == got[:8][::-1]


def test_split_subset_bubble(backend):
    bubble = ((1, 2), (1, 2))
    assert backend.split_subset(bubble, 0b00) == ((), ((1, 2), (1, 2)))
    assert backend.split_subset(bubble, 0b01) == (((1, 2),), ((1, 1),))
    assert backend.split_subset(bubble, 0b11) == (((1, 2), (1, 2)), ())


@settings(max_examples=150, deadline=None)
@given(tags(max_edges=6))
def test_backends_agree_on_coproduct_counts(t):
    py = _kernels.python_backend.coproduct_counts(t.edges, 0, 1 << len(t.edges))
    assert sum(py.values()) == 2 ** len(t.edges)
    if _kernels.compiled_backend is not None:
        assert _kernels.compiled_backend.coproduct_counts(t.edges, 0, 1 << len(t.edges)) == py


def test_coproduct_counts_chunks_merge(backend):
    edges = ((1, 2), (2, 3), (1, 3), (3, 3), (1, 4))
    whole = backend.coproduct_counts(edges, 0, 32)
    merged = {}
    for lo, hi in itertools.pairwise([0, 5, 13, 32]):
        for k, c in backend.coproduct_counts(edges, lo, hi).items():
            merged[k] = merged.get(k, 0) + c
    assert merged == whole
