"""Per-anchor candidate procedure for (P2+P4)-free graphs.

With the anchor fixed, everything at distance 3 or more induces a
cograph, splitting into components each of which contributes exactly one
universal vertex to any solution through the anchor.  Components whose
universal vertices all sit at distance 4 are settled immediately; the
rest interact with the second level, and a short case analysis over how
level-2 vertices see the candidate pools pins the remaining choices
down to at most two weight comparisons.

Two spots deliberately deviate from the obvious greedy:

* when some level-2 vertex sees one pool completely, the pool's member
  is recovered through a second level-2 witness (the cheapest vertex
  covering all of level 2 need not be compatible with the forced picks
  from the other pools, and chasing the witness is what stays correct);
* in the final two-way case both variants are validated before the
  weight comparison, since the cheaper one is not always feasible.

Every early exit below is a sound per-anchor skip: whenever it fires,
no solution through this anchor exists in any (P2+P4)-free graph, so no
ambiguity flag is ever needed.
"""

from __future__ import annotations

from .framework import (Candidate, NotInClass, ProcResult, Unsuccessful,
                        is_efficient_dominating)
from .graphs import WeightedGraph, DistanceLevels, components_within
from .patterns import find_induced, is_cograph


def _bfs_down(g: WeightedGraph, levels: DistanceLevels, top: int) -> list[int]:
    """Smallest-id BFS path anchor..top, one vertex per level."""
    path = [min(levels.level(top))]
    for d in range(top - 1, 0, -1):
        path.append(min(u for u in g.adj[path[-1]]
                        if levels.level_of[u] == d))
    path.append(levels.anchor)
    path.reverse()
    return path


def candidate_p2p4(g: WeightedGraph, anchor: int,
                   levels: DistanceLevels) -> ProcResult:
    n2 = levels.level(2)
    if not n2:
        return Candidate((anchor,))
    if levels.eccentricity >= 6:
        p = _bfs_down(g, levels, 6)
        return NotInClass("P2+P4", (p[5], p[6], p[0], p[1], p[2], p[3]))

    rest = [u for u in range(g.n)
            if levels.level_of[u] is not None and levels.level_of[u] >= 3]
    sub, idmap = g.induced(rest)
    if rest and is_cograph(sub) is None:
        quad = find_induced(sub, "P4")
        w = min(levels.level(1))
        return NotInClass("P2+P4", (anchor, w, *(idmap[q] for q in quad)))

    # split components by whether a universal vertex reaches level 3;
    # live pools keep ALL universal vertices (deep ones included -- they
    # are exactly the picks invisible from level 2)
    forced: list[int] = []        # one pick per outer-only component
    pools: list[list[int]] = []
    n3_elsewhere: dict[int, int] = {}    # vertex -> its component index
    comps = components_within(g, rest)
    universal: list[list[int]] = []
    for comp in comps:
        s = set(comp)
        need = len(comp) - 1
        universal.append([u for u in comp if len(g.nbset(u) & s) == need])
    for ci, comp in enumerate(comps):
        for u in comp:
            if levels.level_of[u] == 3:
                n3_elsewhere[u] = ci
    for ci, comp in enumerate(comps):
        uni = universal[ci]
        if any(levels.level_of[u] == 3 for u in uni):
            pools.append(uni)
            continue
        if not uni:
            return Unsuccessful()
        if len(uni) > 1:
            # two adjacent interchangeable deep vertices next to any other
            # component's level-3 vertex certify the excluded pattern
            t = next((u for u, cj in n3_elsewhere.items() if cj != ci), None)
            if t is not None:
                x = min(u for u in g.adj[t] if levels.level_of[u] == 2)
                w = min(u for u in g.adj[x] if levels.level_of[u] == 1)
                p, q = sorted(uni)[:2]
                return NotInClass("P2+P4", (p, q, anchor, w, x, t))
            return Unsuccessful()
        forced.append(uni[0])

    k = len(pools)
    if k == 0:
        return Unsuccessful()

    n2 = sorted(n2)
    n2set = set(n2)
    seen_count = [{x: len(g.nbset(x) & set(pool)) for x in n2}
                  for pool in pools]
    coverage = {y: len(g.nbset(y) & n2set)
                for pool in pools for y in pool}

    if k == 1:
        full = [y for y in pools[0] if coverage[y] == len(n2)]
        if not full:
            return Unsuccessful()
        y = min(full, key=lambda u: (g.weights[u], u))
        return Candidate((anchor, y, *forced))

    # a level-2 vertex missing two of one pool pairs them against a path
    # into a different pool
    for x in n2:
        for i, pool in enumerate(pools):
            if seen_count[i][x] >= len(pool) - 1:
                continue
            zz = sorted(u for u in pool if not g.has_edge(x, u))[:2]
            w = min(u for u in g.adj[x] if levels.level_of[u] == 1)
            y = next((u for j, p2 in enumerate(pools) if j != i
                      for u in sorted(p2) if g.has_edge(x, u)), None)
            if y is None:
                return Unsuccessful()
            return NotInClass("P2+P4", (zz[0], zz[1], anchor, w, x, y))

    shut = [None] * k            # per pool: its zero-coverage vertex
    for i, pool in enumerate(pools):
        quiet = [y for y in pool if coverage[y] == 0]
        if quiet:
            shut[i] = min(quiet)
    closed = sum(1 for z in shut if z is not None)

    if closed == k:
        best: tuple[int, tuple[int, ...]] | None = None
        for i, pool in enumerate(pools):
            others = [shut[j] for j in range(k) if j != i]
            for y in pool:
                if y == shut[i]:
                    continue
                ds = tuple(sorted([anchor, y, *others, *forced]))
                key = (g.weight_of(ds), ds)
                if best is None or key < best:
                    best = key
        if best is None:
            return Unsuccessful()
        return Candidate(best[1])

    if closed == k - 1:
        i = shut.index(None)
        full = [y for y in pools[i] if coverage[y] == len(n2)]
        if not full:
            return Unsuccessful()
        y = min(full, key=lambda u: (g.weights[u], u))
        others = [shut[j] for j in range(k) if j != i]
        return Candidate(tuple(sorted([anchor, y, *others, *forced])))

    # some x sees one pool completely -> all other picks are its unique
    # non-neighbors, and the seen pool's pick comes from a second witness
    for x in sorted(n2):
        for i, pool in enumerate(pools):
            if seen_count[i][x] != len(pool):
                continue
            picks: dict[int, int] = {}
            for j, p2 in enumerate(pools):
                if j == i:
                    continue
                if seen_count[j][x] == len(p2):
                    return Unsuccessful()
                picks[j] = next(u for u in p2 if not g.has_edge(x, u))
            j = min(j for j in picks if coverage[picks[j]] > 0)
            x2 = min(u for u in g.adj[picks[j]] if u in n2set)
            if seen_count[i][x2] == len(pool):
                return Unsuccessful()
            y = next(u for u in pool if not g.has_edge(x2, u))
            ds = [anchor, y] + list(picks.values()) + forced
            return Candidate(tuple(sorted(ds)))

    # now every level-2 vertex misses exactly one vertex of every pool
    miss = [{i: next(u for u in pool if not g.has_edge(x, u))
             for i, pool in enumerate(pools)} for x in n2]
    pair = None
    base = miss[0]
    deviants: dict[int, int] = {}      # pool index -> position in n2
    for pos in range(1, len(n2)):
        diff = [i for i in range(k) if miss[pos][i] != base[i]]
        if len(diff) >= 2:
            pair = (0, pos, diff[0], diff[1])
            break
        if len(diff) == 1 and diff[0] not in deviants:
            deviants[diff[0]] = pos
            if len(deviants) == 2:
                (i1, p1), (i2, p2) = sorted(deviants.items())[:2]
                pair = (p1, p2, i1, i2)
                break
    if pair is None:
        return Unsuccessful()
    pa, pb, i, j = pair
    a, b = miss[pb][i], miss[pa][i]
    c, d = miss[pb][j], miss[pa][j]
    rest_picks = []
    for r in range(k):
        if r in (i, j):
            continue
        if miss[pa][r] != miss[pb][r]:
            return Unsuccessful()
        rest_picks.append(miss[pa][r])
    best = None
    for duo in ((a, d), (b, c)):
        ds = tuple(sorted([anchor, *duo, *rest_picks, *forced]))
        if len(set(ds)) != len(ds) or not is_efficient_dominating(g, ds):
            continue
        key = (g.weight_of(ds), ds)
        if best is None or key < best:
            best = key
    if best is None:
        return Unsuccessful()
    return Candidate(best[1])
