"""Exact polynomial solver for degree-bounded efficient domination, k <= 2.

A degree-bounded solution may only use vertices whose degree does not
exceed the bound ``k``.  Bound 0 admits only the all-vertex solution on
edgeless graphs; bound 1 is settled per component by the degree-one
vertices; bound 2 reduces, through a cascade of weight-preserving path
reductions, to the choice of exactly one endpoint from every edge of a
perfect matching on the candidate side.  That final choice is captured by
orienting a conflict multigraph so that every vertex gets out-degree
exactly one; the feasible orientations are few and are enumerated
directly, keeping the cheapest resulting vertex set.

One subtlety deserves a note: a matching edge that touches only a single
outside vertex becomes a *loop* of the conflict multigraph, and a loop
may legitimately stay unused (its unattached endpoint is then forced into
the solution).  A tree-shaped conflict graph carrying several loops
therefore yields one candidate per loop rather than none.  All loop
handling is validated against brute force in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass

from .framework import Outcome, is_efficient_dominating
from .graphs import WeightedGraph, connected_components

__all__ = [
    "XInstance", "HEdge", "ConflictMultigraph", "solve_kbwed",
    "solve_x_restricted", "build_conflict_multigraph", "one_orientations",
]


# ===== INSTANCE AND CONFLICT-GRAPH TYPES =====

@dataclass(frozen=True)
class XInstance:
    """A host graph together with the candidate pool ``x``.

    Solutions must be drawn entirely from ``x``, whose members all have
    degree at most two in the host.  Vertices outside the pool can never
    join a solution yet must still be dominated exactly once.
    """

    graph: WeightedGraph
    x: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", frozenset(self.x))
        for v in self.x:
            if not 0 <= v < self.graph.n:
                raise ValueError(f"candidate vertex {v} is not in the host")
            if len(self.graph.adj[v]) > 2:
                raise ValueError(
                    f"candidate vertex {v} has degree "
                    f"{len(self.graph.adj[v])} > 2")

    @property
    def y(self) -> frozenset[int]:
        """The barred side: every host vertex outside the pool."""
        return frozenset(range(self.graph.n)) - self.x


@dataclass(frozen=True)
class HEdge:
    """One conflict edge, backed by the matching edge (x_left, x_right).

    ``y_left`` is the outside neighbor of ``x_left``, ``y_right`` that of
    ``x_right``.  A loop (equal y fields) models a matching edge whose
    ``x_right`` endpoint has no outside neighbor at all.  Orienting the
    edge out of ``y_left`` selects ``x_left`` -- the endpoint dominating
    ``y_left`` -- and symmetrically; a loop left unused selects
    ``x_right``.
    """

    y_left: int
    y_right: int
    x_left: int
    x_right: int

    @property
    def is_loop(self) -> bool:
        return self.y_left == self.y_right


@dataclass(frozen=True)
class ConflictMultigraph:
    """Multigraph on the barred vertices; one edge per matched pair."""

    vertices: tuple[int, ...]
    edges: tuple[HEdge, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(sorted(self.vertices)))
        object.__setattr__(self, "edges", tuple(self.edges))
        members = set(self.vertices)
        for e in self.edges:
            if e.y_left not in members or e.y_right not in members:
                raise ValueError(f"edge {e} leaves the vertex set")

    def multiplicity(self, a: int, b: int) -> int:
        """Number of edges joining ``a`` and ``b`` (loops when a == b)."""
        return sum(1 for e in self.edges
                   if {e.y_left, e.y_right} == ({a, b} if a != b else {a}))


# ===== ORIENTATION CENSUS =====

def one_orientations(h: ConflictMultigraph) -> list[tuple[int, ...]]:
    """Enumerate the selections induced by out-degree-one orientations.

    Every result assigns, per entry of ``h.edges`` in order, the matching
    endpoint pulled into the solution.  With ``s`` vertices and ``c``
    non-loop edges, a connected conflict graph admits: no orientation
    when ``c > s``; exactly two when ``c == s`` (the unique cycle walked
    both ways, all other edges oriented toward it, loops unused); and one
    per loop when ``c == s - 1`` (all edges oriented toward the loop's
    vertex, the other loops unused).  Disconnected input is a contract
    error.
    """
    s = len(h.vertices)
    if s == 0:
        return [()] if not h.edges else []
    index = {v: i for i, v in enumerate(h.vertices)}
    regular = [(ei, e) for ei, e in enumerate(h.edges) if not e.is_loop]
    loops = [(ei, e) for ei, e in enumerate(h.edges) if e.is_loop]
    adj: list[list[tuple[int, int]]] = [[] for _ in range(s)]
    for ei, e in regular:
        a, b = index[e.y_left], index[e.y_right]
        adj[a].append((ei, b))
        adj[b].append((ei, a))

    seen = [False] * s
    seen[0] = True
    queue = [0]
    reached = 1
    while queue:
        v = queue.pop()
        for _, u in adj[v]:
            if not seen[u]:
                seen[u] = True
                reached += 1
                queue.append(u)
    if reached != s:
        raise ValueError("conflict multigraph must be connected")

    def endpoint_at(ei: int, slot: int) -> int:
        e = h.edges[ei]
        return e.x_left if index[e.y_left] == slot else e.x_right

    c = len(regular)
    if c > s:
        return []

    if c == s:
        # Unicyclic: peel leaves (their unique live edge points toward the
        # cycle and is oriented out of the leaf), then walk the cycle.
        degree = [len(adj[v]) for v in range(s)]
        removed_e: set[int] = set()
        removed_v = [False] * s
        tree_out: list[tuple[int, int]] = []  # (edge index, out-of slot)
        stack = [v for v in range(s) if degree[v] == 1]
        while stack:
            v = stack.pop()
            if removed_v[v]:
                continue
            live = [(ei, u) for ei, u in adj[v] if ei not in removed_e]
            ei, u = live[0]
            tree_out.append((ei, v))
            removed_e.add(ei)
            removed_v[v] = True
            degree[u] -= 1
            if degree[u] == 1 and not removed_v[u]:
                stack.append(u)
        cycle = [v for v in range(s) if not removed_v[v]]
        start = min(cycle)
        walk: list[tuple[int, int]] = []  # (slot, forward edge index)
        v, prev_ei = start, -1
        for _ in range(len(cycle)):
            ei, u = min((ei, u) for ei, u in adj[v]
                        if ei not in removed_e and ei != prev_ei)
            walk.append((v, ei))
            v, prev_ei = u, ei
        if v != start:
            raise AssertionError("cycle walk did not close")
        base = [0] * len(h.edges)
        for ei, slot in tree_out:
            base[ei] = endpoint_at(ei, slot)
        for ei, e in loops:
            base[ei] = e.x_right
        forward = list(base)
        backward = list(base)
        m = len(walk)
        for i, (slot, ei) in enumerate(walk):
            forward[ei] = endpoint_at(ei, slot)
            backward[ei] = endpoint_at(ei, walk[(i + 1) % m][0])
        return [tuple(forward), tuple(backward)]

    # Tree: c == s - 1 for connected input.  One orientation per loop.
    results: list[tuple[int, ...]] = []
    for li, loop in loops:
        root = index[loop.y_left]
        sel = [0] * len(h.edges)
        visited = [False] * s
        visited[root] = True
        queue = [root]
        while queue:
            v = queue.pop()
            for ei, u in adj[v]:
                if not visited[u]:
                    visited[u] = True
                    sel[ei] = endpoint_at(ei, u)
                    queue.append(u)
        sel[li] = loop.x_left
        for lj, other in loops:
            if lj != li:
                sel[lj] = other.x_right
        results.append(tuple(sel))
    return results


# ===== CONFLICT-GRAPH CONSTRUCTION =====

def _conflict_edges(adj: dict[int, set[int]], xset: set[int],
                    pairs: list[tuple[int, int]]) -> list[HEdge]:
    """One conflict edge per matched candidate pair, loops included."""
    edges: list[HEdge] = []
    for a, b in pairs:
        ya = next((u for u in adj[a] if u not in xset), None)
        yb = next((u for u in adj[b] if u not in xset), None)
        if ya is None and yb is None:
            raise ValueError(
                f"matched pair ({a}, {b}) touches no outside vertex")
        if ya is not None and yb is not None:
            if ya == yb:
                raise ValueError(
                    f"matched pair ({a}, {b}) shares outside neighbor {ya}")
            edges.append(HEdge(ya, yb, a, b))
        elif ya is not None:
            edges.append(HEdge(ya, ya, a, b))
        else:
            edges.append(HEdge(yb, yb, b, a))
    return edges


def build_conflict_multigraph(inst: XInstance) -> ConflictMultigraph:
    """Build the conflict multigraph of an already-reduced instance.

    The candidate subgraph must be a perfect matching (no isolated
    candidates, no candidate path longer than two) and no matched pair
    may share an outside neighbor; violations raise :class:`ValueError`.
    """
    g = inst.graph
    xset = set(inst.x)
    adj = {v: set(g.adj[v]) for v in range(g.n)}
    pairs: set[tuple[int, int]] = set()
    for v in sorted(xset):
        mates = [u for u in adj[v] if u in xset]
        if len(mates) != 1:
            raise ValueError(
                f"candidate {v} has {len(mates)} candidate neighbors; the "
                "candidate subgraph of a reduced instance is a perfect "
                "matching")
        pairs.add((min(v, mates[0]), max(v, mates[0])))
    ys = tuple(v for v in range(g.n) if v not in xset)
    return ConflictMultigraph(ys, tuple(_conflict_edges(adj, xset,
                                                        sorted(pairs))))


# ===== REDUCTION PIPELINE (INTERNAL) =====

def _components(adj: dict[int, set[int]], comp: list[int]) -> list[list[int]]:
    alive = [v for v in comp if v in adj]
    unseen = set(alive)
    out: list[list[int]] = []
    for v in sorted(alive):
        if v not in unseen:
            continue
        blob = {v}
        queue = [v]
        unseen.discard(v)
        while queue:
            u = queue.pop()
            for t in adj[u]:
                if t in unseen:
                    unseen.discard(t)
                    blob.add(t)
                    queue.append(t)
        out.append(sorted(blob))
    return out


def _drop(adj: dict[int, set[int]], vs) -> None:
    dead = set(vs)
    for v in dead:
        for u in adj[v]:
            if u not in dead:
                adj[u].discard(v)
        del adj[v]


def _candidate_paths(adj: dict[int, set[int]], xset: set[int],
                     xs: list[int]) -> list[list[int]]:
    """Connected pieces of the candidate subgraph, each ordered as a path."""
    paths: list[list[int]] = []
    visited: set[int] = set()
    for v in sorted(xs):
        if v in visited:
            continue
        blob = {v}
        queue = [v]
        while queue:
            u = queue.pop()
            for t in adj[u]:
                if t in xset and t not in blob:
                    blob.add(t)
                    queue.append(t)
        visited |= blob
        if len(blob) == 1:
            paths.append([v])
            continue
        ends = sorted(u for u in blob
                      if sum(1 for t in adj[u] if t in xset) <= 1)
        if not ends:
            raise AssertionError(
                "candidate subgraph contains a cycle inside a larger "
                "component")
        path = [ends[0]]
        prev, cur = -1, ends[0]
        while len(path) < len(blob):
            nxt = next(t for t in adj[cur] if t in xset and t != prev)
            path.append(nxt)
            prev, cur = cur, nxt
        paths.append(path)
    return paths


def _cycle_order(adj: dict[int, set[int]], comp: list[int]) -> list[int]:
    start = min(comp)
    order = [start]
    prev, cur = start, min(adj[start])
    while cur != start:
        order.append(cur)
        prev, cur = cur, next(t for t in adj[cur] if t != prev)
    return order


def _best_cycle_class(adj: dict[int, set[int]], w: dict[int, int],
                      comp: list[int]) -> list[int] | None:
    """Cheapest of the three every-third-vertex classes of a cycle."""
    n = len(comp)
    if n % 3:
        return None
    order = _cycle_order(adj, comp)
    best = None
    for r in range(3):
        picks = sorted(order[r::3])
        key = (sum(w[v] for v in picks), tuple(picks))
        if best is None or key < best[0]:
            best = (key, picks)
    return best[1]


def _reduce_component(comp: list[int], adj: dict[int, set[int]],
                      w: dict[int, int], xset: set[int], chosen: list[int],
                      reprs: dict[int, tuple[int, ...]],
                      stack: list[list[int]]) -> bool:
    """Shrink one connected piece until it is settled.

    Returns False as soon as the piece provably admits no solution;
    otherwise appends forced picks to ``chosen``, pushes split-off pieces
    onto ``stack`` and returns True.  Every pass through the loop removes
    at least one vertex, so the loop terminates.

    ``reprs`` maps a surviving endpoint of a contracted path to the full
    vertex pattern that selecting it stands for; ``w`` carries the
    matching aggregated weights.  Tie-breaking therefore compares the
    patterns that would actually be emitted, which keeps every choice
    lexicographically exact even across contractions.
    """

    def rep(v: int) -> tuple[int, ...]:
        return reprs.get(v, (v,))
    while True:
        comp = [v for v in comp if v in adj]
        # Edges between two barred vertices never matter: neither endpoint
        # can enter a solution, and domination is counted over closed
        # neighborhoods of candidates only.  Dropping them may split the
        # piece.  A barred vertex left without neighbors is undominatable.
        for v in comp:
            if v in xset:
                continue
            for u in [u for u in adj[v] if u not in xset]:
                adj[v].discard(u)
                adj[u].discard(v)
        for v in comp:
            if v not in xset and not adj[v]:
                return False
        pieces = _components(adj, comp)
        if not pieces:
            return True
        if len(pieces) > 1:
            stack.extend(pieces)
            return True
        comp = pieces[0]
        xs = [v for v in comp if v in xset]
        ys = [v for v in comp if v not in xset]
        if not xs:
            return False
        # A component that is itself a candidate cycle: solutions are the
        # three every-third-vertex classes, present only when the length
        # is divisible by three.
        if not ys and len(comp) >= 3 and all(len(adj[v]) == 2 for v in comp):
            picks = _best_cycle_class(adj, w, comp)
            if picks is None:
                return False
            chosen.extend(picks)
            return True
        paths = _candidate_paths(adj, xset, xs)

        # Candidate path of length divisible by three: its interior picks
        # are forced (second, fifth, ... vertices), the endpoints stay
        # out, and the whole path can be deleted.
        hit = next((p for p in paths if len(p) % 3 == 0), None)
        if hit is not None:
            k = len(hit)
            chosen.extend(hit[i] for i in range(1, k - 1) if (i + 1) % 3 == 2)
            dead = set(hit)
            _drop(adj, dead)
            comp = [v for v in comp if v not in dead]
            continue

        # Long candidate path with length = 2 (mod 3), at least 5: exactly
        # one endpoint-side pattern of the path joins the solution (first,
        # fourth, ... versus second, fifth, ... vertices).  Contract the
        # interior to a single edge whose endpoints stand for the two
        # patterns, folding the pattern weights onto them.
        hit = next((p for p in paths if len(p) % 3 == 2 and len(p) >= 5),
                   None)
        if hit is not None:
            k = len(hit)
            first, last = hit[0], hit[-1]
            w[first] = sum(w[hit[i]] for i in range(0, k, 3))
            w[last] = sum(w[hit[i]] for i in range(1, k, 3))
            reprs[first] = tuple(sorted(
                x for i in range(0, k, 3) for x in rep(hit[i])))
            reprs[last] = tuple(sorted(
                x for i in range(1, k, 3) for x in rep(hit[i])))
            interior = hit[1:-1]
            _drop(adj, interior)
            adj[first].add(last)
            adj[last].add(first)
            dead = set(interior)
            comp = [v for v in comp if v not in dead]
            continue

        # Matched pair whose endpoints share an outside neighbor: the two
        # endpoints have identical closed neighborhoods, so the heavier
        # one (larger id on ties) is never needed and can be deleted.
        hit = None
        for p in paths:
            if len(p) != 2:
                continue
            a, b = p
            if any(u in adj[b] for u in adj[a] if u not in xset):
                hit = (a, b)
                break
        if hit is not None:
            a, b = hit
            drop = a if (w[a], rep(a)) > (w[b], rep(b)) else b
            _drop(adj, (drop,))
            comp = [v for v in comp if v != drop]
            continue

        # Long candidate path with length = 1 (mod 3), at least 4: the
        # interior picks are forced and both endpoints are forced into
        # the solution; delete the interior and leave the endpoints to be
        # picked up as forced singletons.
        hit = next((p for p in paths if len(p) % 3 == 1 and len(p) >= 4),
                   None)
        if hit is not None:
            k = len(hit)
            chosen.extend(hit[i] for i in range(3, k - 3) if (i + 1) % 3 == 1)
            interior = hit[1:-1]
            _drop(adj, interior)
            dead = set(interior)
            comp = [v for v in comp if v not in dead]
            continue

        # All reductions exhausted and no barred vertices: the component
        # is a single candidate or a matched pair; either endpoint of a
        # pair dominates both, so take the cheapest vertex.
        if not ys:
            if len(comp) > 2:
                raise AssertionError("candidate-only component survived "
                                     "the path reductions")
            chosen.append(min(comp, key=lambda v: (w[v], rep(v))))
            return True

        # Forced singletons: an isolated candidate can only be dominated
        # by itself.  Two of them sharing a neighbor would dominate it
        # twice; one of them pulls its whole second neighborhood out of
        # the running, and any edge inside that second neighborhood dooms
        # the matched pair it belongs to.
        singles = sorted(p[0] for p in paths if len(p) == 1)
        guard_of: dict[int, int] = {}
        for v in singles:
            for u in adj[v]:
                if u in guard_of:
                    return False
                guard_of[u] = v
        if singles:
            v = singles[0]
            n1 = set(adj[v])
            n2: set[int] = set()
            for u in n1:
                n2 |= adj[u]
            n2 -= n1
            n2.discard(v)
            if any(adj[u] & n2 for u in n2):
                return False
            chosen.append(v)
            dead = {v} | n1 | n2
            _drop(adj, dead)
            comp = [t for t in comp if t not in dead]
            continue

        # Irreducible: only matched pairs remain.  Choosing one endpoint
        # per pair so that every barred vertex is dominated exactly once
        # is an out-degree-one orientation of the conflict multigraph.
        pairs = [(p[0], p[1]) for p in paths]
        h = ConflictMultigraph(tuple(ys),
                               tuple(_conflict_edges(adj, xset, pairs)))
        sels = one_orientations(h)
        if not sels:
            return False
        best = min(sels, key=lambda sel: (
            sum(w[v] for v in sel),
            tuple(sorted(x for v in sel for x in rep(v)))))
        chosen.extend(best)
        return True


def _solve_core(adj: dict[int, set[int]], w: dict[int, int],
                xset: set[int]) -> set[int] | None:
    """Run the reduction pipeline over every piece of the working graph."""
    chosen: list[int] = []
    reprs: dict[int, tuple[int, ...]] = {}
    stack: list[list[int]] = [sorted(adj)]
    while stack:
        comp = stack.pop()
        if not _reduce_component(comp, adj, w, xset, chosen, reprs, stack):
            return None
    # A chosen contracted endpoint stands for its whole path pattern.
    return {x for v in chosen for x in reprs.get(v, (v,))}


# ===== PUBLIC SOLVERS =====

def _solve_component_kbwed(g: WeightedGraph, comp: list[int],
                           k: int) -> list[int] | None:
    if k == 1:
        if len(comp) == 1:
            return list(comp)
        if len(comp) == 2:
            return [min(comp, key=lambda v: (g.weights[v], v))]
        ones = [v for v in comp if len(g.adj[v]) == 1]
        cover = dict.fromkeys(comp, 0)
        for d in ones:
            cover[d] += 1
            for u in g.adj[d]:
                cover[u] += 1
        if ones and all(c == 1 for c in cover.values()):
            return ones
        return None
    # k == 2
    if len(comp) >= 3 and all(len(g.adj[v]) == 2 for v in comp):
        adj = {v: set(g.adj[v]) for v in comp}
        w = {v: g.weights[v] for v in comp}
        return _best_cycle_class(adj, w, comp)
    adj = {v: set(g.adj[v]) for v in comp}
    w = {v: g.weights[v] for v in comp}
    xset = {v for v in comp if len(g.adj[v]) <= 2}
    res = _solve_core(adj, w, xset)
    return None if res is None else sorted(res)


def solve_kbwed(g: WeightedGraph, k: int) -> Outcome:
    """Minimum-weight efficient domination using only degree-<= k vertices.

    Exact for every input graph; degree bounds above two are out of scope
    (the unrestricted problem is intractable there) and raise
    :class:`ValueError`.  Bound 0 admits only edgeless graphs, solved by
    the full vertex set.  Bound 1 is decided per component by the
    degree-one vertices.  Bound 2 dispatches cycle components to a
    residue-class scan and everything else to the restricted pipeline
    with the degree-<= 2 vertices as candidate pool.
    """
    if k not in (0, 1, 2):
        raise ValueError("degree bound k must be 0, 1, or 2")
    if k == 0:
        if any(g.adj[v] for v in range(g.n)):
            return Outcome.no_ed()
        return Outcome.solved(tuple(range(g.n)), sum(g.weights))
    chosen: list[int] = []
    for comp in connected_components(g):
        picks = _solve_component_kbwed(g, list(comp), k)
        if picks is None:
            return Outcome.no_ed()
        chosen.extend(picks)
    ds = sorted(chosen)
    if not is_efficient_dominating(g, ds):
        raise AssertionError("bounded solver produced an invalid set")
    return Outcome.solved(ds, sum(g.weights[v] for v in ds))


def solve_x_restricted(inst: XInstance) -> Outcome:
    """Minimum-weight efficient domination within the candidate pool.

    The host must not be a single cycle (cycles take the residue-class
    path in :func:`solve_kbwed`).  The pipeline deletes barred-to-barred
    edges, splits components, reduces candidate paths by their length
    residue, forces isolated candidates, and finally reads the remaining
    matched-pair choice off the conflict multigraph's out-degree-one
    orientations.  Each reduction strictly shrinks the working graph.
    """
    g = inst.graph
    if (g.n >= 3 and all(len(g.adj[v]) == 2 for v in range(g.n))
            and len(connected_components(g)) == 1):
        raise ValueError("cycle hosts are dispatched by solve_kbwed")
    adj = {v: set(g.adj[v]) for v in range(g.n)}
    w = dict(enumerate(g.weights))
    res = _solve_core(adj, w, set(inst.x))
    if res is None:
        return Outcome.no_ed()
    ds = sorted(res)
    if not (set(ds) <= inst.x and is_efficient_dominating(g, ds)):
        raise AssertionError("restricted solver produced an invalid set")
    return Outcome.solved(ds, sum(g.weights[v] for v in ds))
