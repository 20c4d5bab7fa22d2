"""Minimum-weight efficient domination: exact oracles, class solvers, CLI.

A set D of vertices in a graph G is an efficient dominating set (e.d.)
when every vertex of G has exactly one member of D in its closed
neighborhood.  This package decides whether a weighted graph has an e.d.
and finds one of minimum total vertex weight, via

* exact exponential oracles (``effdom.oracle``),
* polynomial solvers for several graph classes defined by forbidden
  induced subgraphs (``effdom.free2p2``, ``effdom.freep5``,
  ``effdom.freep6s122``, ``effdom.free2p3s122``, ``effdom.freep2p4``),
* a polynomial solver for e.d. sets restricted to low-degree vertices
  (``effdom.degreebounded``), and
* a generator for hard unit-weight instances built from monotone
  1-in-3 satisfiability (``effdom.reduction``).

The ``effdom`` command line tool fronts all of it.
"""

from __future__ import annotations

from .graphs import (WeightedGraph, DistanceLevels, ParseError, parse_graph,
                     render_graph, distance_levels, square,
                     connected_components, universal_in, is_simplicial)
from .patterns import (PATTERN_IDS, find_induced, check_induced, Cotree,
                       is_cograph, is_cluster, is_co_connected)
from .framework import (Outcome, Status, Witness, ProcResult, Candidate,
                        Unsuccessful, NotInClass, is_efficient_dominating,
                        run_robust, solve)
from .oracle import (OracleResult, brute_force_wed, brute_force_kbwed,
                     exact_cover_ed, exact_mwis, one_in_three_brute)
from .free2p2 import (solve_2p2, maximal_homogeneous_sets,
                      characteristic_graph, is_thin_spider, SpiderPartition)
from .freep5 import candidate_p5, solve_p5_square, cograph_mwis
from .freep6s122 import candidate_p6s122
from .free2p3s122 import candidate_2p3s122
from .freep2p4 import candidate_p2p4
from .degreebounded import (solve_kbwed, solve_x_restricted, XInstance,
                            ConflictMultigraph, build_conflict_multigraph,
                            one_orientations)
from .reduction import (MonotoneCnf, ReductionGraph, parse_monotone_cnf,
                        build_reduction, extract_assignment, assignment_to_ed)

__version__ = "0.1.0"

__all__ = [
    "WeightedGraph", "DistanceLevels", "ParseError", "parse_graph",
    "render_graph", "distance_levels", "square", "connected_components",
    "universal_in", "is_simplicial",
    "PATTERN_IDS", "find_induced", "check_induced", "Cotree", "is_cograph",
    "is_cluster", "is_co_connected",
    "Outcome", "Status", "Witness", "ProcResult", "Candidate", "Unsuccessful",
    "NotInClass", "is_efficient_dominating", "run_robust", "solve",
    "OracleResult", "brute_force_wed", "brute_force_kbwed", "exact_cover_ed",
    "exact_mwis", "one_in_three_brute",
    "solve_2p2", "maximal_homogeneous_sets", "characteristic_graph",
    "is_thin_spider", "SpiderPartition",
    "candidate_p5", "solve_p5_square", "cograph_mwis",
    "candidate_p6s122", "candidate_2p3s122", "candidate_p2p4",
    "solve_kbwed", "solve_x_restricted", "XInstance", "ConflictMultigraph",
    "build_conflict_multigraph", "one_orientations",
    "MonotoneCnf", "ReductionGraph", "parse_monotone_cnf", "build_reduction",
    "extract_assignment", "assignment_to_ed",
    "__version__",
]
