"""Candidate procedure for graphs with no induced P6 and no induced S122.

Written in unittest style: these cases predate the pytest-parametrized
suites and keep their original shape.
"""
from __future__ import annotations

import random
import unittest

from effdom import (
    Status,
    brute_force_wed,
    candidate_p6s122,
    check_induced,
    distance_levels,
    find_induced,
    run_robust,
    universal_in,
)

from tests.helpers import (
    connected_graphs_upto,
    cycle,
    path,
    random_connected_graph,
    random_weights,
    star,
)


def _call(g, anchor):
    return candidate_p6s122(g, anchor, distance_levels(g, anchor))


def _in_class(g):
    return (find_induced(g, "P6") is None
            and find_induced(g, "S122") is None)


class CandidateExamples(unittest.TestCase):
    def test_c6_anchor(self):
        r = _call(cycle(6), 0)
        self.assertEqual(r.kind, "candidate")
        self.assertEqual(r.vertices, (0, 3))

    def test_p4_anchor(self):
        r = _call(path(4), 0)
        self.assertEqual(r.kind, "candidate")
        self.assertEqual(r.vertices, (0, 3))

    def test_p7_anchor_sees_p6(self):
        r = _call(path(7), 0)
        self.assertEqual(r.kind, "not_in_class")
        self.assertEqual(r.witness.pattern, "P6")
        self.assertTrue(check_induced(path(7), "P6", r.witness.vertices))

    def test_star_center(self):
        r = _call(star(4), 0)
        self.assertEqual(r.kind, "candidate")
        self.assertEqual(r.vertices, (0,))


class RobustRuns(unittest.TestCase):
    def test_c6_solved(self):
        out = run_robust(cycle(6), candidate_p6s122)
        self.assertIs(out.status, Status.SOLVED)
        self.assertEqual(out.vertices, (0, 3))
        self.assertEqual(out.weight, 2)

    def test_c7_no_ed(self):
        out = run_robust(cycle(7), candidate_p6s122)
        self.assertIs(out.status, Status.NO_ED)

    def test_oracle_equivalence_exhaustive_n5(self):
        rng = random.Random(29)
        for g in connected_graphs_upto(5):
            if g.n < 2 or not _in_class(g):
                continue
            g = g.with_weights(random_weights(rng, g.n, 1, 9))
            res = brute_force_wed(g)
            out = run_robust(g, candidate_p6s122)
            self.assertIsNot(out.status, Status.NOT_IN_CLASS)
            self.assertEqual(out.status is Status.SOLVED, res.exists)
            if res.exists:
                self.assertEqual(out.weight, res.best_weight)
                self.assertEqual(out.vertices, res.best_set)

    def test_oracle_equivalence_random_filtered(self):
        rng = random.Random(31)
        done = 0
        while done < 120:
            n = rng.randint(2, 11)
            g = random_connected_graph(rng, n, rng.choice((0.25, 0.5)),
                                       random_weights(rng, n, 1, 9))
            if not _in_class(g):
                continue
            res = brute_force_wed(g)
            out = run_robust(g, candidate_p6s122)
            self.assertIsNot(out.status, Status.NOT_IN_CLASS)
            self.assertEqual(out.status is Status.SOLVED, res.exists)
            if res.exists:
                self.assertEqual(out.weight, res.best_weight)
            done += 1


class StructuralProperties(unittest.TestCase):
    def test_second_level_domination_inclusion(self):
        # on class members with an e.d. through anchor v, an N2 vertex x
        # dominated from N3 by d has every other N3-neighbor adjacent to
        # d, i.e. N(x) cap N3 lies inside the closed neighborhood of d
        rng = random.Random(37)
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
                levels = distance_levels(g, v)
                n2 = set(levels.level(2))
                n3 = set(levels.level(3))
                for x in n2:
                    doms = g.closed(x) & dset
                    self.assertEqual(len(doms), 1)
                    d = next(iter(doms))
                    if d in n3:
                        self.assertLessEqual(g.nbset(x) & n3,
                                             g.closed(d))
            done += 1

    def test_distinct_component_universals_share_no_n2_vertex(self):
        rng = random.Random(41)
        done = 0
        while done < 60:
            n = rng.randint(4, 10)
            g = random_connected_graph(rng, n, 0.3)
            if not _in_class(g):
                continue
            res = brute_force_wed(g)
            if not res.exists:
                continue
            for v in res.best_set:
                levels = distance_levels(g, v)
                n2 = set(levels.level(2))
                n3 = sorted(levels.level(3))
                if not n3:
                    continue
                from effdom.graphs import components_within
                comps = components_within(g, n3)
                universals = [universal_in(g, comp) for comp in comps]
                for i in range(len(comps)):
                    for j in range(i + 1, len(comps)):
                        for u1 in universals[i]:
                            for u2 in universals[j]:
                                self.assertFalse(
                                    g.nbset(u1) & g.nbset(u2) & n2)
            done += 1


if __name__ == "__main__":  # pragma: no cover
    unittest.main()
