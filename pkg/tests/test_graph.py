import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gfree.graph import DegreeBounds, Graph, GraphError, degeneracy, disjoint_union, join
from gfree.named import (
    clique_plus_independent,
    complete,
    complete_bipartite,
    complete_minus_hamiltonian_cycle,
    construct_named,
    cycle,
    empty,
    path,
    petersen,
)
from oracles import brute_degeneracy


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(0, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Graph(n, chosen)


def test_basic_accessors():
    g = Graph(4, [(0, 1), (1, 2), (2, 0)])
    assert g.n == 4 and g.m == 3
    assert g.degrees() == [2, 2, 2, 0]
    assert g.max_degree == 2 and g.min_degree == 0
    assert list(g.edges()) == [(0, 1), (0, 2), (1, 2)]
    assert g.neighbors(1) == [0, 2]


@pytest.mark.parametrize("edges, exc", [([(0, 0)], "self-loop"), ([(0, 3)], "out of range")])
def test_invalid_edges(edges, exc):
    with pytest.raises(GraphError, match=exc):
        Graph(3, edges)


def test_from_rows_rejects_asymmetry():
    with pytest.raises(GraphError):
        Graph.from_rows([0b10, 0b00])
    assert Graph.from_rows([0b10, 0b01]) == complete(2)


def test_duplicate_edges_collapse():
    assert Graph(2, [(0, 1), (1, 0)]).m == 1


def test_complement_examples():
    c5 = cycle(5)
    assert c5.complement() == Graph(5, [(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)])
    assert complete(6).complement() == empty(6)
    # complement of K3 + 3K1 is 3K1 plus a disjoint K3
    h = clique_plus_independent(3, 3)
    assert h.complement() == disjoint_union(empty(3), complete(3))


def test_join_counts():
    h = join(complete(3), empty(3))
    assert (h.n, h.m) == (6, 12)
    assert clique_plus_independent(6, 4).m == 39


def test_induced_subgraph():
    assert complete(5).induced_subgraph([0, 2, 4]) == complete(3)
    with pytest.raises(GraphError):
        complete(3).induced_subgraph([5])


def test_named_builders():
    assert complete_minus_hamiltonian_cycle(3).m == 9
    assert complete_minus_hamiltonian_cycle(3).n == 6
    assert list(cycle(5).edges()) == [(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]
    assert path(4).m == 3
    assert complete_bipartite(4, 4).m == 16
    assert petersen().degrees() == [3] * 10
    for bad in (lambda: cycle(2), lambda: complete_minus_hamiltonian_cycle(1), lambda: complete_bipartite(0, 2)):
        with pytest.raises(GraphError):
            bad()


@pytest.mark.parametrize("desc, n, m", [("K5", 5, 10), ("C7", 7, 7), ("P4", 4, 3), ("K4,4", 8, 16),
                                        ("3K1", 3, 0), ("K6+4K1", 10, 39), ("K6-C6", 6, 9),
                                        ("Petersen", 10, 15), ("g6:A_", 2, 1)])
def test_construct_named(desc, n, m):
    g = construct_named(desc)
    assert (g.n, g.m) == (n, m)


def test_construct_named_rejects_garbage():
    with pytest.raises(GraphError):
        construct_named("Q9")


def test_degeneracy_examples():
    for n in range(3, 9):
        assert degeneracy(cycle(n)).value == 2
    assert degeneracy(complete(5)).value == 4
    k44 = complete_bipartite(4, 4)
    assert brute_degeneracy(k44) == 4
    assert degeneracy(k44).value == 4
    assert degeneracy(Graph(0)).value == 0 and degeneracy(Graph(0)).ordering == ()


def test_degeneracy_ordering_is_witness():
    rng = random.Random(3)
    for _ in range(50):
        n = rng.randint(1, 12)
        g = Graph(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < 0.4])
        d = degeneracy(g)
        assert sorted(d.ordering) == list(range(n))
        for i, v in enumerate(d.ordering):
            later = set(d.ordering[i + 1:])
            assert len(set(g.neighbors(v)) & later) <= d.value


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_complement_involution(g):
    assert g.complement().complement() == g
    assert g.m + g.complement().m == g.n * (g.n - 1) // 2


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=7))
def test_degeneracy_between_min_and_max_degree(g):
    d = degeneracy(g).value
    assert g.min_degree <= d <= g.max_degree
    assert d == brute_degeneracy(g)


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=6), graphs(max_n=6))
def test_join_and_union_counts(g, h):
    j, u = join(g, h), disjoint_union(g, h)
    assert j.n == u.n == g.n + h.n
    assert j.m == g.m + h.m + g.n * h.n
    assert u.m == g.m + h.m
    assert j.complement() == disjoint_union(g.complement(), h.complement())


def test_relabel_roundtrip():
    g = petersen()
    perm = [3, 1, 4, 0, 9, 2, 6, 5, 8, 7]
    inv = [0] * 10
    for i, p in enumerate(perm):
        inv[p] = i
    assert g.relabel(perm).relabel(inv) == g


def test_degree_bounds():
    assert DegreeBounds([3, 1, 1]).k == 3
    for bad in ([1, 2], [-1], []):
        with pytest.raises(ValueError):
            DegreeBounds(bad)
