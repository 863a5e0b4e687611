from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from powercw.experiments import _twin_violations, graphs_up_to
from powercw.generators import complete, complete_split, cycle, path, star, subdivide_edges
from powercw.graph import Graph, diameter, is_co_connected, is_connected
from powercw.iso import is_isomorphic
from powercw.oracles import brute_is_module, brute_is_prime
from powercw.powers import graph_power
from powercw.structure import (
    NotAModule,
    NotConnectedCoConnected,
    are_twins,
    distance_array,
    is_in_class_g,
    is_module,
    is_prime,
    maximal_modules_partition,
    module_closure,
    quotient,
    substitute_cliques,
    twin_classes,
    two_paths,
)
from strategies import connected_graphs, graphs


def _sorted_blocks(blocks):
    return sorted(tuple(sorted(b)) for b in blocks)


def test_twin_class_examples():
    assert _sorted_blocks(twin_classes(complete(5))) == [(0, 1, 2, 3, 4)]
    assert _sorted_blocks(twin_classes(path(4))) == [(0,), (1,), (2,), (3,)]
    assert _sorted_blocks(twin_classes(complete_split(2, 3))) == [(0, 1), (2, 3, 4)]


def test_maximal_module_examples():
    assert _sorted_blocks(maximal_modules_partition(path(4))) == [(0,), (1,), (2,), (3,)]
    # P_4 = 0-1-2-3 with 4 a false twin of 0.
    g = Graph(5, [(0, 1), (1, 2), (2, 3), (4, 1)])
    assert _sorted_blocks(maximal_modules_partition(g)) == [(0, 4), (1,), (2,), (3,)]
    with pytest.raises(NotConnectedCoConnected):
        maximal_modules_partition(cycle(4))


def test_quotient_examples():
    assert quotient(complete(6), [[0, 1], [2, 3], [4, 5]]) == complete(3)
    cs = complete_split(2, 3)
    assert is_isomorphic(quotient(cs, twin_classes(cs)), complete(2))
    with pytest.raises(NotAModule):
        quotient(path(4), [[0, 2], [1], [3]])


def test_substitute_examples():
    assert substitute_cliques(path(3), [1, 1, 1]) == path(3)
    assert is_isomorphic(substitute_cliques(complete(2), [2, 2]), complete(4))
    by_hand = Graph(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
    assert is_isomorphic(substitute_cliques(path(3), [1, 2, 1]), by_hand)


def test_prime_examples():
    assert is_prime(path(4))
    assert not is_prime(complete(3))
    assert is_prime(cycle(5))


def test_is_prime_matches_brute_force_up_to_seven_vertices():
    for g in graphs_up_to(7):
        assert is_prime(g) == brute_is_prime(g), g


@given(graphs(max_n=7), st.integers(0, 127))
def test_module_tests_agree(g, seed):
    mask = seed & ((1 << g.n) - 1)
    xs = [v for v in range(g.n) if mask >> v & 1]
    assert is_module(g, mask) == brute_is_module(g, xs)
    closed = module_closure(g, mask) if mask else 0
    assert closed & mask == mask
    if mask:
        assert brute_is_module(g, [v for v in range(g.n) if closed >> v & 1])


@given(graphs(max_n=7))
def test_twin_classes_are_exactly_twin_pairs(g):
    where = {v: i for i, b in enumerate(twin_classes(g)) for v in b}
    for u, v in combinations(range(g.n), 2):
        same = where[u] == where[v]
        assert same == are_twins(g, u, v)


@given(connected_graphs(min_n=2, max_n=7))
def test_maximal_modules_are_modules_and_maximal(g):
    if not is_co_connected(g):
        return
    blocks = maximal_modules_partition(g)
    assert sorted(v for b in blocks for v in b) == list(range(g.n))
    for b in blocks:
        assert brute_is_module(g, b)
    for a, b in combinations(blocks, 2):
        # Merging two blocks never gives a proper module.
        assert not brute_is_module(g, list(a) + list(b)) or len(a) + len(b) == g.n
    assert is_prime(quotient(g, blocks)) or len(blocks) <= 2


@pytest.mark.parametrize("k", [2, 3])
def test_power_commutes_with_clique_substitution(k):
    for g in graphs_up_to(7, start=2):
        if not (is_connected(g) and is_co_connected(g)):
            continue
        blocks = maximal_modules_partition(g)
        rhs = substitute_cliques(graph_power(quotient(g, blocks), k), [len(b) for b in blocks])
        assert is_isomorphic(graph_power(g, k), rhs)


def test_substitution_identity_needs_k_at_least_two():
    # The false-twin block {0, 4} is a non-clique module, and G^1 = G keeps it so.
    g = Graph(5, [(0, 1), (1, 2), (2, 3), (4, 1)])
    blocks = maximal_modules_partition(g)
    rhs = substitute_cliques(quotient(g, blocks), [len(b) for b in blocks])
    assert not is_isomorphic(g, rhs)


def test_two_path_examples():
    runs = two_paths(cycle(6))
    assert len(runs) == 1 and runs[0].cyclic and sorted(runs[0].vertices) == list(range(6))
    assert [r.vertices for r in two_paths(path(5))] == [(1, 2, 3)]
    k4 = subdivide_edges(complete(4), 2, which=[(0, 1)])
    assert [r.vertices for r in two_paths(k4)] == [(4,)]


def test_class_g_examples():
    assert is_in_class_g(complete(4), 0, 1) == []
    assert is_in_class_g(cycle(5), 0, 2) == []
    long_k4 = subdivide_edges(complete(4), 9, which=[(0, 1)])
    paths = is_in_class_g(long_k4, 1, 2)
    assert paths is not None and sorted(paths[0].vertices) == list(range(4, 12))
    # What is left is K_4 minus an edge, whose diameter is 2.
    assert is_in_class_g(long_k4, 1, 1) is None
    assert is_in_class_g(long_k4, 0, 2) is None
    p100 = path(100)
    paths = is_in_class_g(p100, 1, 2)
    assert paths is not None and paths[0].vertices == tuple(range(1, 99))


def test_distance_array_examples():
    assert distance_array(path(6), 0, [5], 3).values == (4,)
    assert distance_array(path(6), 2, [2, 4], 3).values == (0, 2)
    assert distance_array(path(8), 0, [7], 4).values == (5,)


@given(connected_graphs(min_n=4, max_n=7), st.integers(2, 6), st.data())
def test_equal_distance_arrays_give_power_twins(core, length, data):
    pick = data.draw(st.sampled_from(core.edges)) if core.m else None
    if pick is None:
        return
    g = subdivide_edges(core, length, which=[pick])
    d = 2 * diameter(core)
    checked, bad = _twin_violations(g, 1, d)
    assert bad == 0
