import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from derecon import graph6
from derecon.canon import canonical_form
from derecon.families import cycle, double_broom, path, star
from derecon.graph import DomainError, Graph, disjoint_union, edge_degree, union_all


@st.composite
def graphs(draw, max_order=8):
    n = draw(st.integers(0, max_order))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [e for e, keep in zip(pairs, mask) if keep])


def test_graph_rejects_loops_and_out_of_range():
    with pytest.raises(DomainError):
        Graph(3, [(1, 1)])
    with pytest.raises(DomainError):
        Graph(3, [(0, 3)])


def test_graph_collapses_duplicate_edges():
    g = Graph(3, [(0, 1), (1, 0), (0, 1)])
    assert g.size == 1
    assert g.edges == {(0, 1)}


def test_isolated_vertices_are_kept():
    g = Graph(5, [(0, 1)])
    assert g.order == 5
    assert len(g.components()) == 4


def test_edge_degree_left_leaf_of_double_broom():
    g = double_broom(3, 4, 5)
    # vertex 5 is the first left leaf, attached to path vertex 0
    assert edge_degree(g, (0, 5)) == 3


@pytest.mark.parametrize("l", [3, 4, 7])
def test_edge_degree_on_cycles(l):
    g = cycle(l)
    assert all(edge_degree(g, e) == 2 for e in g.edges)


def test_edge_degree_single_edge_with_isolated_vertices():
    g = Graph(4, [(1, 2)])
    assert edge_degree(g, (2, 1)) == 0


def test_edge_degree_missing_edge():
    with pytest.raises(DomainError):
        edge_degree(path(3), (0, 2))


@given(graphs())
def test_edge_degree_sums_to_squared_degrees(g):
    deg = g.degrees()
    for u, v in g.edges:
        shared = sum(1 for f in g.edges if f != (u, v) and len({u, v} & set(f)) == 1)
        assert edge_degree(g, (u, v)) == deg[u] + deg[v] - 2 == shared
    assert sum(edge_degree(g, e) + 2 for e in g.edges) == sum(d * d for d in deg)


def test_disjoint_union_examples():
    u = disjoint_union(star(2), Graph(1))
    assert (u.order, u.size) == (4, 2)
    assert u.degrees()[3] == 0
    g = double_broom(2, 2, 3)
    assert disjoint_union(g, Graph(0)) == g


@settings(max_examples=40)
@given(graphs(5), graphs(5), graphs(5))
def test_disjoint_union_commutative_associative(a, b, c):
    assert canonical_form(disjoint_union(a, b)) == canonical_form(disjoint_union(b, a))
    left = disjoint_union(disjoint_union(a, b), c)
    right = disjoint_union(a, disjoint_union(b, c))
    assert canonical_form(left) == canonical_form(right)
    assert union_all([a, b, c]) == left


def test_components_and_induced():
    g = union_all([path(3), Graph(1), cycle(3)])
    comps = g.components()
    assert comps == [[0, 1, 2], [3], [4, 5, 6]]
    assert g.induced(comps[2]) == cycle(3)


def _nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.order))
    h.add_edges_from(g.edges)
    return h


@given(graphs(12))
def test_graph6_matches_networkx(g):
    ours = graph6.encode(g)
    theirs = nx.to_graph6_bytes(_nx(g), header=False).decode().strip()
    assert ours == theirs
    back = nx.from_graph6_bytes(ours.encode())
    assert {tuple(sorted(e)) for e in back.edges} == set(g.edges)
    assert graph6.decode(ours) == g


def test_graph6_large_order_field():
    rng = random.Random(7)
    g = Graph(70, [(i, j) for i in range(70) for j in range(i + 1, 70) if rng.random() < 0.05])
    text = graph6.encode(g)
    assert text.startswith("~")
    assert text == nx.to_graph6_bytes(_nx(g), header=False).decode().strip()
    assert graph6.decode(text) == g


def test_graph6_known_strings():
    assert graph6.encode(Graph(0)) == "?"
    assert graph6.encode(path(2)) == "A_"
    assert graph6.decode(">>graph6<<A_") == path(2)
    with pytest.raises(DomainError):
        graph6.decode("A__")
    with pytest.raises(DomainError):
        graph6.decode("A@")  # padding bit set
