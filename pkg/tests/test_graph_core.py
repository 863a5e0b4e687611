import math

import pytest
from hypothesis import given

from powercw.generators import complete, cycle, grid, path
from powercw.graph import (
    INFINITE,
    Graph,
    GraphError,
    complement,
    component_masks,
    connected_components,
    diameter,
    disjoint_union,
    distances_from,
    from_edges,
    girth,
    induced_subgraph,
    is_co_connected,
)
from strategies import connected_graphs, graphs


def test_from_edges_builds_p3_and_collapses_duplicates():
    assert from_edges(3, [(0, 1), (1, 2)]) == path(3)
    g = from_edges(3, [(0, 1), (1, 0), (1, 2)])
    assert g == path(3) and g.m == 2


def test_from_edges_rejects_out_of_range_vertex():
    with pytest.raises(GraphError):
        from_edges(2, [(0, 2)])


def test_self_loop_rejected():
    with pytest.raises(GraphError):
        from_edges(2, [(1, 1)])


def test_distances_examples():
    assert distances_from(path(4), 0) == [0, 1, 2, 3]
    assert distances_from(disjoint_union(complete(3), Graph(1)), 0) == [0, 1, 1, INFINITE]
    for s in range(5):
        assert sorted(distances_from(cycle(5), s)) == [0, 1, 1, 2, 2]


def test_diameter_examples():
    assert diameter(path(5)) == 4
    assert diameter(disjoint_union(complete(3), path(3))) == 2
    for n in range(2, 7):
        assert diameter(complete(n)) == 1


def test_diameter_of_empty_graph_is_an_error():
    with pytest.raises(GraphError):
        diameter(Graph(0))


def test_girth_examples():
    assert girth(cycle(5)) == 5
    assert girth(path(6)) == INFINITE
    assert girth(grid(3)) == 4


def test_derived_operation_examples():
    assert complement(complete(3)) == Graph(3)
    sub, keep = induced_subgraph(path(4), {0, 1, 3})
    assert keep == [0, 1, 3]
    assert sub == Graph(3, [(0, 1)])
    assert is_co_connected(path(4))
    assert not is_co_connected(complete(3))


@given(graphs())
def test_complement_is_an_involution(g):
    assert complement(complement(g)) == g


@given(graphs(min_n=1))
def test_nested_induced_subgraphs_agree(g):
    y = [v for v in range(g.n) if v % 3 != 1]
    x = y[::2]
    outer, keep_y = induced_subgraph(g, y)
    pos = {v: i for i, v in enumerate(keep_y)}
    twice, _ = induced_subgraph(outer, [pos[v] for v in x])
    direct, _ = induced_subgraph(g, x)
    assert twice == direct


@given(connected_graphs())
def test_connected_diameter_one_iff_complete(g):
    is_complete = g.m == g.n * (g.n - 1) // 2
    assert (diameter(g) == 1) == (is_complete and g.n >= 2)


@given(graphs(min_n=1))
def test_diameter_one_iff_components_are_cliques(g):
    # Max over components: K_2 + K_1 has diameter 1 without being complete.
    pieces = [induced_subgraph(g, c)[0] for c in connected_components(g)]
    cliques = all(h.m == h.n * (h.n - 1) // 2 for h in pieces)
    assert (diameter(g) == 1) == (cliques and g.m > 0)


@given(graphs())
def test_girth_infinite_iff_forest(g):
    forest = g.m <= g.n - len(component_masks(g))
    assert (girth(g) == INFINITE) == forest


@given(connected_graphs(max_n=9))
def test_triangle_inequality(g):
    rows = [distances_from(g, s) for s in range(g.n)]
    for a in range(g.n):
        for b in range(g.n):
            assert rows[a][b] == rows[b][a]
            for c in range(g.n):
                assert rows[a][c] <= rows[a][b] + rows[b][c]


@given(graphs())
def test_components_partition_vertices(g):
    comps = connected_components(g)
    assert sorted(v for c in comps for v in c) == list(range(g.n))
    for c in comps:
        d = distances_from(g, c[0])
        assert all(not math.isinf(d[v]) for v in c)
