"""Robust driver: validator, anchor sweep, and component dispatch."""
from __future__ import annotations

import random

import pytest

from effdom import (
    Candidate,
    NotInClass,
    Outcome,
    Status,
    Unsuccessful,
    WeightedGraph,
    brute_force_wed,
    candidate_p5,
    check_induced,
    is_efficient_dominating,
    run_robust,
    solve,
)
from effdom.framework import CLASS_TAGS

from tests.helpers import (
    complete,
    cycle,
    path,
    random_connected_graph,
    star,
)

# ===== VALIDATOR =====


def test_validator_c6():
    g = cycle(6)
    assert is_efficient_dominating(g, (0, 3))
    assert not is_efficient_dominating(g, (0, 2))  # vertex 1 hit twice


def test_validator_star_center():
    assert is_efficient_dominating(star(3), (0,))
    assert not is_efficient_dominating(star(3), (1,))


def test_validator_empty_set():
    assert not is_efficient_dominating(path(2), ())
    assert is_efficient_dominating(WeightedGraph.from_edges(0, []), ())


# ===== RUN_ROBUST =====


def _take_anchor(g, anchor, levels):
    return Candidate((anchor,))


def _never(g, anchor, levels):
    return Unsuccessful()


def test_run_robust_picks_lighter_endpoint():
    g = path(2, weights=(5, 2))
    out = run_robust(g, _take_anchor)
    assert out == Outcome.solved((1,), 2)


def test_run_robust_all_unsuccessful():
    out = run_robust(path(3), _never)
    assert out.status is Status.NO_ED and not out.caveat


def test_run_robust_caveat_propagates():
    out = run_robust(path(3), lambda g, a, lv: Unsuccessful(caveat=True))
    assert out.status is Status.NO_ED and out.caveat


def test_run_robust_c5_with_p5_procedure():
    assert run_robust(cycle(5), candidate_p5).status is Status.NO_ED


def test_run_robust_rejects_disconnected():
    g = WeightedGraph.from_edges(4, [(0, 1), (2, 3)])
    with pytest.raises(ValueError):
        run_robust(g, _take_anchor)
    with pytest.raises(ValueError):
        run_robust(WeightedGraph.from_edges(0, []), _take_anchor)


def test_run_robust_discards_invalid_candidates():
    # every candidate fails validation on P3 except the midpoint
    out = run_robust(path(3, weights=(1, 7, 1)), _take_anchor)
    assert out == Outcome.solved((1,), 7)


def test_run_robust_verifies_witnesses():
    def bogus(g, anchor, levels):
        return NotInClass("P4", (0, 1, 2))

    with pytest.raises(ValueError):
        run_robust(path(3), bogus)


def test_run_robust_honest_witness_aborts():
    def spot_p4(g, anchor, levels):
        return NotInClass("P4", (0, 1, 2, 3))

    out = run_robust(path(4), spot_p4)
    assert out.status is Status.NOT_IN_CLASS
    assert out.witness.pattern == "P4"
    assert check_induced(path(4), "P4", out.witness.vertices)


def test_run_robust_parallel_matches_sequential():
    rng = random.Random(99)
    for _ in range(10):
        n = rng.randint(2, 9)
        g = random_connected_graph(rng, n, 0.3,
                                   weights=[rng.randint(1, 9)
                                            for _ in range(n)])
        assert run_robust(g, candidate_p5, parallel=True) == \
            run_robust(g, candidate_p5, parallel=False)


# ===== SOLVE (COMPONENT DISPATCH) =====


def test_solve_2k2_brute():
    g = WeightedGraph.from_edges(4, [(0, 1), (2, 3)])
    out = solve(g, "brute")
    assert out.status is Status.SOLVED and out.weight == 2
    assert is_efficient_dominating(g, out.vertices)


def test_solve_k2_plus_c4_no_ed():
    g = WeightedGraph.from_edges(6, [(0, 1), (2, 3), (3, 4), (4, 5), (2, 5)])
    assert solve(g, "brute").status is Status.NO_ED


def test_solve_p4_auto():
    out = solve(path(4), "auto")
    assert out == Outcome.solved((0, 3), 2)


def test_solve_unknown_tag():
    with pytest.raises(ValueError):
        solve(path(2), "nosuch")


def test_solve_empty_graph():
    assert solve(WeightedGraph.from_edges(0, []), "brute") == \
        Outcome.solved((), 0)


def test_solve_singleton_shortcut():
    g = WeightedGraph.from_edges(1, [], weights=(4,))
    for tag in ("2p2", "p5", "p5-square", "p6s122", "2p3s122", "p2p4",
                "auto", "brute"):
        assert solve(g, tag) == Outcome.solved((0,), 4)


def test_weight_additivity_over_components():
    rng = random.Random(202)
    done = 0
    while done < 15:
        g1 = random_connected_graph(rng, rng.randint(1, 7), 0.3)
        g2 = random_connected_graph(rng, rng.randint(1, 7), 0.3)
        o1, o2 = solve(g1, "brute"), solve(g2, "brute")
        if o1.status is not Status.SOLVED or o2.status is not Status.SOLVED:
            continue
        edges = g1.edges() + [(u + g1.n, v + g1.n) for u, v in g2.edges()]
        both = WeightedGraph.from_edges(g1.n + g2.n, edges)
        out = solve(both, "brute")
        assert out.status is Status.SOLVED
        assert out.weight == o1.weight + o2.weight
        assert is_efficient_dominating(both, out.vertices)
        done += 1


def test_not_in_class_witness_maps_back_to_input_ids():
    # component {4..8} induces the P5; ids must come back untranslated
    edges = [(0, 1)] + [(i, i + 1) for i in range(4, 8)]
    g = WeightedGraph.from_edges(9, edges)
    out = solve(g, "p5")
    assert out.status is Status.NOT_IN_CLASS
    assert out.witness.pattern == "P5"
    assert check_induced(g, "P5", out.witness.vertices)
    assert min(out.witness.vertices) >= 4


def test_solve_never_returns_invalid_set():
    rng = random.Random(4242)
    for _ in range(60):
        n = rng.randint(1, 9)
        g = random_connected_graph(rng, n, rng.choice((0.15, 0.35, 0.7)),
                                   weights=[rng.randint(1, 9)
                                            for _ in range(n)])
        for tag in CLASS_TAGS:
            out = solve(g, tag, k=2)
            if out.status is Status.SOLVED:
                assert is_efficient_dominating(g, out.vertices)
                assert g.weight_of(out.vertices) == out.weight


def test_auto_matches_oracle_on_random_graphs():
    rng = random.Random(512)
    for _ in range(40):
        n = rng.randint(2, 9)
        g = random_connected_graph(rng, n, 0.3,
                                   weights=[rng.randint(1, 9)
                                            for _ in range(n)])
        res = brute_force_wed(g)
        out = solve(g, "auto")
        assert out.status is not Status.NOT_IN_CLASS  # auto always answers
        assert (out.status is Status.SOLVED) == res.exists
        if res.exists:
            assert out.weight == res.best_weight


def test_class_tags_stable():
    assert set(CLASS_TAGS) == {
        "2p2", "p5", "p5-square", "p6s122", "2p3s122", "p2p4",
        "2bwed", "brute", "exact-cover", "auto"}
