import itertools

import pytest
from hypothesis import strategies as st

from taghopf import _kernels
from taghopf.graph import Tag, make_tag


@pytest.fixture
def edge():
    return make_tag(2, [(1, 2)])


@pytest.fixture
def tadpole():
    return make_tag(1, [(1, 1)])


@pytest.fixture
def bubble():
    return make_tag(2, [(1, 2), (1, 2)])


@pytest.fixture
def triangle():
    return make_tag(3, [(1, 2), (2, 3), (1, 3)])


@pytest.fixture
def path2():
    return make_tag(3, [(1, 2), (1, 3)])


BACKENDS = [pytest.param(_kernels.python_backend, id="python")]
if _kernels.compiled_backend is not None:
    BACKENDS.append(pytest.param(_kernels.compiled_backend, id="cython"))


@pytest.fixture(params=BACKENDS)
def backend(request):
    return request.param


@st.composite
def tags(draw, min_edges=0, max_edges=4, max_vertices=6):
    """Valid Tags with arbitrary (non-canonical) vertex numbering."""
    m = draw(st.integers(min_edges, max_edges))
    used = 0
    edges = []
    for _ in range(m):
        pair = []
        for _ in range(2):
            x = draw(st.integers(1, min(used + 1, max_vertices)))
            if x > used:
                used += 1
                x = used
            pair.append(x)
        edges.append(tuple(sorted(pair)))
    perm = draw(st.permutations(range(1, used + 1)))
    return make_tag(used, [(perm[u - 1], perm[v - 1]) for u, v in edges])


def brute_tag_isomorphic(a: Tag, b: Tag) -> bool:
    """Search all vertex bijections for one that maps edge i onto edge i."""
    if a.vertex_count != b.vertex_count or len(a.edges) != len(b.edges):
        return False
    for perm in itertools.permutations(range(1, a.vertex_count + 1)):
        if all(
            tuple(sorted((perm[u - 1], perm[v - 1]))) == eb
            for (u, v), eb in zip(a.edges, b.edges)
        ):
            return True
    return False


def relabel(t: Tag, perm) -> Tag:
    return make_tag(t.vertex_count, [(perm[u - 1], perm[v - 1]) for u, v in t.edges])


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    if test_acceptance.ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
