"""Induced-subgraph patterns and cograph recognition.

The class solvers recognize their target graph classes by forbidden
induced subgraphs.  The catalog below names each pattern and fixes a
canonical vertex order; ``find_induced`` returns the lexicographically
least witness tuple in that order, which makes witnesses deterministic
and lets every not-in-class verdict ship a checkable certificate.

Patterns (edges on vertices 0..k-1):

* ``P2`` .. ``P7``: induced paths, consecutive vertices adjacent.
* ``2P2``, ``2P3``, ``P2+P3``, ``P2+P4``: disjoint unions of paths, with
  no edges between the parts.
* ``S122``: a five-vertex path 0-1-2-3-4 plus vertex 5 adjacent to the
  middle vertex 2 (a spider with one leg of length 1 and two of length 2).
* ``claw``: center 0 adjacent to leaves 1, 2, 3.

``is_cograph`` builds a cotree by the classic complement-components
recursion: a graph is a cograph iff every induced subgraph on >= 2
vertices is disconnected or co-disconnected.  Internal nodes alternate
union/join and have >= 2 children; leaves carry the vertex ids.
"""

from __future__ import annotations

from collections import deque

from .graphs import WeightedGraph

__all__ = [
    "PATTERN_IDS",
    "pattern_order",
    "pattern_edges",
    "find_induced",
    "check_induced",
    "Cotree",
    "is_cograph",
    "is_cluster",
    "is_co_connected",
    "co_components",
]


def _path(k: int) -> tuple[int, frozenset[tuple[int, int]]]:
    return k, frozenset((i, i + 1) for i in range(k - 1))


def _union(a, b):
    ka, ea = a
    kb, eb = b
    return ka + kb, ea | frozenset((u + ka, v + ka) for u, v in eb)


_CATALOG: dict[str, tuple[int, frozenset[tuple[int, int]]]] = {
    "P2": _path(2),
    "P3": _path(3),
    "P4": _path(4),
    "P5": _path(5),
    "P6": _path(6),
    "P7": _path(7),
    "2P2": _union(_path(2), _path(2)),
    "2P3": _union(_path(3), _path(3)),
    "P2+P3": _union(_path(2), _path(3)),
    "P2+P4": _union(_path(2), _path(4)),
    "S122": (6, frozenset([(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)])),
    "claw": (4, frozenset([(0, 1), (0, 2), (0, 3)])),
}

PATTERN_IDS: tuple[str, ...] = tuple(_CATALOG)


def pattern_order(pattern: str) -> int:
    return _CATALOG[pattern][0]


def pattern_edges(pattern: str) -> frozenset[tuple[int, int]]:
    return _CATALOG[pattern][1]


def _adjacency_requirements(pattern: str) -> list[list[bool]]:
    k, edges = _CATALOG[pattern]
    req = [[False] * k for _ in range(k)]
    for u, v in edges:
        req[u][v] = req[v][u] = True
    return req


def find_induced(g: WeightedGraph, pattern: str) -> tuple[int, ...] | None:
    """Lexicographically least tuple inducing ``pattern``, or None.

    The tuple is in pattern order: position i of the result plays pattern
    vertex i.  Plain backtracking, choosing the smallest admissible host
    vertex at each position, which yields the lex-least witness directly.
    """
    k = pattern_order(pattern)
    if g.n < k:
        return None
    req = _adjacency_requirements(pattern)
    chosen: list[int] = []
    used = [False] * g.n

    def place(i: int) -> bool:
        if i == k:
            return True
        reqs = req[i]
        for v in range(g.n):
            if used[v]:
                continue
            ok = True
            for j in range(i):
                if (chosen[j] in g.nbset(v)) != reqs[j]:
                    ok = False
                    break
            if not ok:
                continue
            chosen.append(v)
            used[v] = True
            if place(i + 1):
                return True
            chosen.pop()
            used[v] = False
        return False

    if place(0):
        return tuple(chosen)
    return None


def check_induced(g: WeightedGraph, pattern: str, vertices) -> bool:
    """True when ``vertices`` (in pattern order) induce exactly ``pattern``."""
    k = pattern_order(pattern)
    vs = tuple(vertices)
    if len(vs) != k or len(set(vs)) != k:
        return False
    if any(not 0 <= v < g.n for v in vs):
        return False
    edges = pattern_edges(pattern)
    for i in range(k):
        for j in range(i + 1, k):
            want = (i, j) in edges or (j, i) in edges
            if g.has_edge(vs[i], vs[j]) != want:
                return False
    return True


# ===== cograph machinery =====


class Cotree:
    """Cotree node: kind 'leaf' (with vertex) or 'union'/'join' (children)."""

    __slots__ = ("kind", "vertex", "children")

    def __init__(self, kind: str, vertex: int | None = None,
                 children: tuple["Cotree", ...] = ()):
        if kind == "leaf":
            assert vertex is not None and not children
        else:
            assert kind in ("union", "join") and len(children) >= 2
        self.kind = kind
        self.vertex = vertex
        self.children = children

    def leaves(self) -> list[int]:
        if self.kind == "leaf":
            return [self.vertex]
        out: list[int] = []
        for c in self.children:
            out.extend(c.leaves())
        return out

    def __repr__(self) -> str:
        if self.kind == "leaf":
            return f"Leaf({self.vertex})"
        return f"{self.kind.capitalize()}({', '.join(map(repr, self.children))})"


def _components_within(g: WeightedGraph, vs: list[int]) -> list[list[int]]:
    inside = set(vs)
    seen: set[int] = set()
    comps = []
    for s in vs:
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in g.adj[v]:
                if u in inside and u not in seen:
                    seen.add(u)
                    comp.append(u)
                    queue.append(u)
        comps.append(sorted(comp))
    return comps


def _co_components_within(g: WeightedGraph, vs: list[int]) -> list[list[int]]:
    """Components of the complement, restricted to ``vs``.

    BFS in the complement with the shrinking-candidate-set trick: the
    unvisited non-neighbors of the current vertex join its component, so
    each vertex leaves the candidate pool exactly once.
    """
    pool = set(vs)
    comps = []
    while pool:
        s = min(pool)
        pool.remove(s)
        comp = [s]
        queue = deque([s])
        while queue:
            v = queue.popleft()
            hop = pool - g.nbset(v)
            if hop:
                pool -= hop
                comp.extend(hop)
                queue.extend(hop)
        comps.append(sorted(comp))
    return comps


def co_components(g: WeightedGraph, vertices=None) -> list[list[int]]:
    vs = sorted(vertices) if vertices is not None else list(range(g.n))
    return _co_components_within(g, vs)


def is_co_connected(g: WeightedGraph) -> bool:
    if g.n == 0:
        return True
    return len(_co_components_within(g, list(range(g.n)))) == 1


def is_cluster(g: WeightedGraph, vertices=None) -> list[list[int]] | None:
    """Clique partition of the induced subgraph, or None if not P3-free.

    The returned cliques are the connected components, each sorted,
    ordered by smallest member.
    """
    vs = set(vertices) if vertices is not None else set(range(g.n))
    comps = _components_within(g, sorted(vs))
    for comp in comps:
        size = len(comp)
        for v in comp:
            if len(g.nbset(v) & vs) != size - 1:
                return None
    return comps


def is_cograph(g: WeightedGraph) -> Cotree | None:
    """Cotree of g, or None when g contains an induced P4.

    Recursion: a multi-component set becomes a union node over the
    (connected) components; a connected set splits into >= 2 co-components
    under a join node; a set that is both connected and co-connected on
    >= 2 vertices is prime, so g is not a cograph.
    """
    if g.n == 0:
        return None

    def build(vs: list[int]) -> Cotree | None:
        if len(vs) == 1:
            return Cotree("leaf", vertex=vs[0])
        comps = _components_within(g, vs)
        if len(comps) > 1:
            children = []
            for comp in comps:
                sub = build(comp)
                if sub is None:
                    return None
                children.append(sub)
            return Cotree("union", children=tuple(children))
        cocomps = _co_components_within(g, vs)
        if len(cocomps) > 1:
            children = []
            for comp in cocomps:
                sub = build(comp)
                if sub is None:
                    return None
                children.append(sub)
            return Cotree("join", children=tuple(children))
        return None

    return build(list(range(g.n)))
