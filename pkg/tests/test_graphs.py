"""Graph representation, parsing, and the shared primitive queries."""
from __future__ import annotations

import random

import pytest

from effdom import (
    ParseError,
    WeightedGraph,
    connected_components,
    distance_levels,
    is_simplicial,
    parse_graph,
    render_graph,
    square,
    universal_in,
)
from effdom.graphs import components_within

from tests.helpers import (
    complete,
    cycle,
    path,
    random_connected_graph,
    star,
)

# ===== CONSTRUCTION INVARIANTS =====


def test_from_edges_sorts_adjacency():
    g = WeightedGraph.from_edges(3, [(2, 0), (1, 2)])
    assert g.adj == ((2,), (2,), (0, 1))
    assert g.weights == (1, 1, 1)
    assert g.m == 2


def test_rejects_loop_and_duplicate():
    with pytest.raises(ValueError):
        WeightedGraph.from_edges(2, [(0, 0)])
    with pytest.raises(ValueError):
        WeightedGraph.from_edges(2, [(0, 1), (1, 0)])


def test_rejects_asymmetric_adjacency():
    with pytest.raises(ValueError):
        WeightedGraph(2, ((1,), ()), (1, 1))


def test_rejects_bad_weights():
    with pytest.raises(ValueError):
        WeightedGraph.from_edges(1, [], weights=(-1,))
    with pytest.raises(ValueError):
        WeightedGraph.from_edges(1, [], weights=(1.5,))


def test_graph_is_immutable():
    g = path(2)
    with pytest.raises(AttributeError):
        g.n = 5


def test_accessors():
    g = path(4, weights=(5, 1, 1, 9))
    assert g.neighbors(1) == (0, 2)
    assert g.nbset(2) == {1, 3}
    assert g.closed(0) == {0, 1}
    assert g.degree(1) == 2
    assert g.has_edge(2, 3) and not g.has_edge(0, 3)
    assert g.edges() == [(0, 1), (1, 2), (2, 3)]
    assert g.weight_of((0, 3)) == 14


def test_induced_subgraph_and_map():
    g = cycle(5)
    sub, keep = g.induced([0, 1, 3])
    assert keep == [0, 1, 3]
    assert sub.edges() == [(0, 1)]


# ===== PARSING =====


def test_parse_k2():
    g = parse_graph("p ed 2 1\ne 1 2\n")
    assert g == path(2)


def test_parse_weighted_p3():
    g = parse_graph("c a comment\np ed 3 2\nw 2 7\ne 1 2\ne 2 3\n")
    assert g == path(3, weights=(1, 7, 1))


def test_parse_vertex_out_of_range():
    with pytest.raises(ParseError) as info:
        parse_graph("p ed 2 1\ne 1 3\n")
    assert "3" in str(info.value)


def test_parse_errors_name_line_numbers():
    with pytest.raises(ParseError) as info:
        parse_graph("p ed 2 1\ne 1 2\ne 1 2\n")
    assert info.value.line == 3


def test_parse_duplicate_header_and_loop():
    with pytest.raises(ParseError):
        parse_graph("p ed 1 0\np ed 1 0\n")
    with pytest.raises(ParseError):
        parse_graph("p ed 2 1\ne 1 1\n")


def test_parse_edge_count_mismatch():
    with pytest.raises(ParseError):
        parse_graph("p ed 3 2\ne 1 2\n")


def test_round_trip_random_graphs():
    rng = random.Random(20260822)
    for _ in range(25):
        n = rng.randint(1, 12)
        g = random_connected_graph(rng, n, 0.3,
                                   weights=[rng.randint(0, 50)
                                            for _ in range(n)])
        assert parse_graph(render_graph(g)) == g


# ===== DISTANCE LEVELS =====


def test_levels_on_p4():
    lv = distance_levels(path(4), 0)
    assert lv.level(0) == (0,)
    assert lv.level(1) == (1,)
    assert lv.level(2) == (2,)
    assert lv.level(3) == (3,)
    assert lv.eccentricity == 3


def test_levels_on_c6():
    lv = distance_levels(cycle(6), 0)
    assert lv.level(1) == (1, 5)
    assert lv.level(2) == (2, 4)
    assert lv.level(3) == (3,)


def test_levels_unreachable():
    g = WeightedGraph.from_edges(3, [(1, 2)])
    lv = distance_levels(g, 0)
    assert lv.level(1) == ()
    assert set(lv.reachable()) == {0}


def test_levels_partition_component():
    rng = random.Random(7)
    for _ in range(20):
        g = random_connected_graph(rng, rng.randint(1, 10), 0.3)
        for v in range(g.n):
            lv = distance_levels(g, v)
            seen = [u for i in range(g.n) for u in lv.level(i)]
            assert sorted(seen) == list(range(g.n))


# ===== SQUARE =====


def test_square_p4():
    assert square(path(4)).edges() == [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]


def test_square_k3_fixed_point():
    assert square(complete(3)) == complete(3)


def test_square_c6_complement_of_matching():
    sq = square(cycle(6))
    non_edges = [(u, v) for u in range(6) for v in range(u + 1, 6)
                 if not sq.has_edge(u, v)]
    assert non_edges == [(0, 3), (1, 4), (2, 5)]


def test_square_preserves_weights():
    g = path(4, weights=(3, 1, 4, 1))
    assert square(g).weights == g.weights


def test_square_complete_when_diameter_two():
    g = star(4)
    assert square(g) == complete(5).with_weights(g.weights)


# ===== COMPONENTS / UNIVERSAL / SIMPLICIAL =====


def test_components():
    assert connected_components(path(2)) == ((0, 1),)
    g = WeightedGraph.from_edges(4, [(0, 1), (2, 3)])
    assert connected_components(g) == ((0, 1), (2, 3))
    assert connected_components(WeightedGraph.from_edges(3, [])) == \
        ((0,), (1,), (2,))


def test_components_within_subset():
    g = path(5)
    assert components_within(g, [0, 1, 3]) == ((0, 1), (3,))


def test_universal_in():
    assert universal_in(complete(3), range(3)) == (0, 1, 2)
    assert universal_in(path(3), range(3)) == (1,)
    assert universal_in(path(4), range(4)) == ()


def test_universal_in_subset():
    g = path(4)
    assert universal_in(g, [1, 2]) == (1, 2)


def test_is_simplicial():
    p3 = path(3)
    assert not is_simplicial(p3, 1)
    assert is_simplicial(p3, 0)
    assert all(is_simplicial(complete(4), v) for v in range(4))
