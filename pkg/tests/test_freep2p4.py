"""Candidate procedure for graphs with no induced P2+P4."""
from __future__ import annotations

import random

from effdom import (
    Status,
    brute_force_wed,
    candidate_p2p4,
    check_induced,
    connected_components,
    distance_levels,
    find_induced,
    is_cograph,
    is_efficient_dominating,
    run_robust,
    universal_in,
)

from tests.helpers import (
    all_graphs,
    connected_graphs_upto,
    cycle,
    path,
    random_connected_graph,
    random_weights,
    star,
)


def _call(g, anchor):
    return candidate_p2p4(g, anchor, distance_levels(g, anchor))


def _in_class(g):
    return find_induced(g, "P2+P4") is None


# ===== SPEC-LEVEL EXAMPLES =====


def test_c6_anchor():
    r = _call(cycle(6), 0)
    assert r.kind == "candidate" and r.vertices == (0, 3)


def test_p4_anchor():
    r = _call(path(4), 0)
    assert r.kind == "candidate" and r.vertices == (0, 3)


def test_star_leaf_unsuccessful():
    r = _call(star(4), 1)
    assert r.kind == "unsuccessful"


def test_c6_solved():
    out = run_robust(cycle(6), candidate_p2p4)
    assert out.status is Status.SOLVED
    assert (out.vertices, out.weight) == ((0, 3), 2)


def test_foreign_graph_witnessed():
    # a K2 far away from a P4 is the defining obstruction
    from effdom import WeightedGraph
    edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7)]
    g = WeightedGraph.from_edges(8, edges)  # P8 contains P2+P4
    out = run_robust(g, candidate_p2p4)
    if out.status is Status.NOT_IN_CLASS:
        assert check_induced(g, out.witness.pattern, out.witness.vertices)


# ===== ORACLE EQUIVALENCE =====


def test_oracle_equivalence_exhaustive_n5():
    rng = random.Random(83)
    for g in connected_graphs_upto(5):
        if g.n < 2 or not _in_class(g):
            continue
        g = g.with_weights(random_weights(rng, g.n, 1, 9))
        res = brute_force_wed(g)
        out = run_robust(g, candidate_p2p4)
        assert out.status is not Status.NOT_IN_CLASS
        assert (out.status is Status.SOLVED) == res.exists
        if res.exists:
            assert out.weight == res.best_weight
            assert out.vertices == res.best_set


def test_oracle_equivalence_random_filtered():
    rng = random.Random(89)
    done = 0
    while done < 120:
        n = rng.randint(2, 10)
        g = random_connected_graph(rng, n, rng.choice((0.3, 0.55)),
                                   random_weights(rng, n, 1, 9))
        if not _in_class(g):
            continue
        res = brute_force_wed(g)
        out = run_robust(g, candidate_p2p4)
        assert out.status is not Status.NOT_IN_CLASS
        assert (out.status is Status.SOLVED) == res.exists
        if res.exists:
            assert out.weight == res.best_weight
        done += 1


# ===== STRUCTURAL PROPERTIES =====


def test_cograph_eds_are_one_universal_per_component():
    # over every cograph on up to five vertices and every subset
    for n in range(1, 6):
        for g in all_graphs(n):
            if is_cograph(g) is None:
                continue
            comps = connected_components(g)
            universal_sets = []
            for comp in comps:
                universal_sets.append(set(universal_in(g, comp)))
            for bits in range(1 << n):
                d = [v for v in range(n) if bits >> v & 1]
                expected = all(
                    len(set(d) & set(comp)) == 1
                    and next(iter(set(d) & set(comp))) in uni
                    for comp, uni in zip(comps, universal_sets))
                assert is_efficient_dominating(g, d) == expected


def test_second_level_has_unique_deep_dominator():
    # class members with an e.d. through v: every N2 vertex has exactly
    # one neighbor in N3 intersected with the solution
    rng = random.Random(97)
    done = 0
    while done < 60:
        n = rng.randint(4, 10)
        g = random_connected_graph(rng, n, 0.3)
        if not _in_class(g):
            continue
        res = brute_force_wed(g)
        if not res.exists:
            continue
        dset = set(res.best_set)
        for v in res.best_set:
            lv = distance_levels(g, v)
            # solution members sit pairwise at distance >= 3, so the first
            # two levels around v are solution-free ...
            assert not (set(lv.level(1)) | set(lv.level(2))) & dset
            # ... and each second-level vertex is dominated from level 3
            n3d = set(lv.level(3)) & dset
            for x in lv.level(2):
                assert len(g.nbset(x) & n3d) == 1
        done += 1
