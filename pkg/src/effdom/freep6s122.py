"""Per-anchor candidate procedure for {P6, S122}-free graphs.

With the anchor in the solution, distance levels past 4 certify a long
induced path.  The rest of the solution lives in the third level: each
component of that subgraph contributes exactly one universal vertex, the
fourth level is covered entirely by a single vertex seeing all of it,
and nothing else is eligible.

Selection detail: among the universal vertices of a component, only
those whose level-2 neighborhoods are inclusion-maximal can take part in
an e.d. (a smaller neighborhood would leave some level-2 vertex to be
covered from a second component, which the class forbids).  Weight
minimization happens inside that filtered set.  Every returned candidate
is validated by the driver, so the filter only affects completeness, not
soundness, off class.
"""

from __future__ import annotations

from .framework import (Candidate, NotInClass, ProcResult, Unsuccessful)
from .graphs import WeightedGraph, DistanceLevels, components_within
from .freep5 import _bfs_path_witness


def _maximal_by_inclusion(vertices: list[int],
                          nbhd: dict[int, frozenset[int]]) -> list[int]:
    out = []
    for u in vertices:
        if any(v != u and nbhd[u] < nbhd[v] for v in vertices):
            continue
        out.append(u)
    return out


def candidate_p6s122(g: WeightedGraph, anchor: int,
                     levels: DistanceLevels) -> ProcResult:
    if levels.eccentricity >= 5:
        return NotInClass("P6", _bfs_path_witness(g, levels, 5))
    n2set = set(levels.level(2))
    n4set = set(levels.level(4))

    if n4set:
        seers = [x for x in levels.level(3) if n4set <= g.nbset(x)]
        if not seers:
            return Unsuccessful()
        seer_set = set(seers)
    else:
        seer_set = set()

    comps = components_within(g, levels.level(3))
    eligible: list[list[int]] = []
    for comp in comps:
        members = set(comp)
        universal = [u for u in comp if members <= (g.nbset(u) | {u})]
        if not universal:
            return Unsuccessful()
        nb2 = {u: frozenset(g.nbset(u) & n2set) for u in universal}
        eligible.append(_maximal_by_inclusion(universal, nb2))

    def cheapest(pool: list[int]) -> int | None:
        return min(pool, key=lambda u: (g.weights[u], u), default=None)

    if not n4set:
        picks = [cheapest(e) for e in eligible]
        return Candidate((anchor, *picks))

    # one component hosts the vertex covering all of the fourth level;
    # the other components must pick vertices away from it
    hosts = [cheapest([u for u in e if u in seer_set]) for e in eligible]
    others = [cheapest([u for u in e if u not in seer_set]) for e in eligible]
    missing = [i for i, u in enumerate(others) if u is None]
    best: tuple[int, tuple[int, ...]] | None = None
    for i, host in enumerate(hosts):
        if host is None or any(j != i for j in missing):
            continue
        ds = tuple(sorted(
            [anchor, host] + [others[j] for j in range(len(comps))
                              if j != i]))
        key = (g.weight_of(ds), ds)
        if best is None or key < best:
            best = key
    if best is None:
        return Unsuccessful()
    return Candidate(best[1])
