import random

import pytest
from hypothesis import given, strategies as st

from rainbowlab.colorings import (Coloring, canonicalize, color_classes, colors_on,
                                  vertex_palette)
from rainbowlab.construct import construct_k2n, monochrome, rainbow
from rainbowlab.errors import DomainError, StructuralError
from rainbowlab.graphs import U, V, GraphSpec, bicolumns, edge_list, members

K3 = GraphSpec.complete(3)
K5 = GraphSpec.complete(5)
K6 = GraphSpec.complete(6)
K6_ENDS = edge_list(K6)


def test_canonicalize_examples():
    assert canonicalize(Coloring(K3, [7, 7, 2])).colors == (0, 0, 1)
    assert canonicalize(Coloring(K3, [0, 1, 2])).colors == (0, 1, 2)


def test_length_mismatch_is_structural():
    with pytest.raises(StructuralError):
        Coloring(K3, [0, 1])
    with pytest.raises(StructuralError):
        Coloring(K3, [0, 1, -1])


def test_canonicalize_idempotent_random_k6():
    rng = random.Random(6)
    for _ in range(1000):
        c = Coloring(K6, [rng.randrange(15) for _ in range(15)])
        once = canonicalize(c)
        assert canonicalize(once) == once
        assert sorted(map(sorted, color_classes(once))) == sorted(map(sorted, color_classes(c)))


@given(st.lists(st.integers(0, 40), min_size=10, max_size=10))
def test_classes_partition_edges(colors):
    c = Coloring(K5, colors)
    classes = color_classes(c)
    assert len(classes) == len(set(colors))
    assert all(classes)
    assert sorted(e for cl in classes for e in cl) == list(range(10))
    assert [min(cl) for cl in classes] == sorted(min(cl) for cl in classes)


def test_classes_examples():
    assert color_classes(monochrome(K5)) == [frozenset(range(10))]
    assert len(color_classes(rainbow(K5))) == 10
    sizes = [len(cl) for cl in color_classes(construct_k2n(4))]
    assert len(sizes) == 6 and sorted(sizes) == [1, 1, 1, 1, 2, 2]


def test_colors_on():
    assert colors_on(rainbow(K5), [0, 3, 5, 9]) == 4
    assert colors_on(monochrome(K5), [2, 7]) == 1
    assert colors_on(monochrome(K5), []) == 0
    full = members(GraphSpec.bipartite2(3), bicolumns(3))[0]
    assert colors_on(construct_k2n(3), full) == 5
    with pytest.raises(DomainError):
        colors_on(rainbow(K5), [10])


def test_vertex_palette():
    assert len(vertex_palette(rainbow(K5), 0)) == 4
    assert vertex_palette(monochrome(K5), 3) == {0}
    assert len(vertex_palette(construct_k2n(10), U)) == 10
    with pytest.raises(DomainError):
        vertex_palette(rainbow(K5), 5)


@given(st.lists(st.integers(0, 5), min_size=15, max_size=15))
def test_palette_size_vs_degree(colors):
    c = Coloring(K6, colors)
    for x in K6.vertices():
        incident = [e for e in range(15) if x in K6_ENDS[e]]
        distinct = len({colors[e] for e in incident}) == len(incident)
        assert len(vertex_palette(c, x)) <= K6.degree(x)
        assert (len(vertex_palette(c, x)) == K6.degree(x)) == distinct


def test_proper():
    assert rainbow(K5).is_proper()
    assert not monochrome(K5).is_proper()
    b = GraphSpec.bipartite2(2)
    assert Coloring(b, [0, 1, 1, 0]).is_proper()
    assert not Coloring(b, [0, 1, 0, 2]).is_proper()
    assert vertex_palette(Coloring(b, [0, 1, 1, 0]), V) == {0, 1}
