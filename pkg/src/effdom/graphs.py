"""Core graph model: weighted simple graphs, BFS level structures, squares.

The whole package works on finite simple graphs with nonnegative integer
vertex weights.  Vertices are 0-based ints internally; the text format
(see :func:`parse_graph`) is 1-based.  A set D of vertices is an efficient
dominating set (e.d.) when every vertex of the graph has exactly one member
of D in its closed neighborhood; the solvers in this package decide
existence and minimize total weight over such sets.

Two facts from this module are load-bearing for the solvers:

* ``distance_levels`` partitions the component of an anchor vertex into
  distance classes N0 = {anchor}, N1, N2, ... and edges only run inside a
  class or between consecutive classes.
* ``square`` joins every pair of vertices at distance <= 2.  A set D is an
  e.d. of G exactly when D is independent in the square and the closed
  neighborhoods of its members cover all of V, which is the bridge the
  square-based solver rides.
"""

from __future__ import annotations

from dataclasses import dataclass
from collections import deque

__all__ = [
    "WeightedGraph",
    "DistanceLevels",
    "ParseError",
    "parse_graph",
    "render_graph",
    "distance_levels",
    "square",
    "connected_components",
    "universal_in",
    "is_simplicial",
]

MAX_WEIGHT = 2**32  # exclusive; keeps int64 accumulators exact in the kernels


class WeightedGraph:
    """Immutable simple graph with sorted adjacency and natural weights.

    ``adj[v]`` is a sorted tuple of the neighbors of ``v``; ``weights[v]``
    is a nonnegative int.  Construction validates symmetry, absence of
    loops, and weight bounds, so downstream code can trust the invariants.
    """

    __slots__ = ("n", "adj", "weights", "_nbsets", "_m")

    def __init__(self, n: int, adj: tuple[tuple[int, ...], ...],
                 weights: tuple[int, ...]):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        if len(adj) != n or len(weights) != n:
            raise ValueError("adjacency/weight arrays must have length n")
        for v, row in enumerate(adj):
            prev = -1
            for u in row:
                if not 0 <= u < n:
                    raise ValueError(f"neighbor {u} of {v} out of range")
                if u == v:
                    raise ValueError(f"loop at vertex {v}")
                if u <= prev:
                    raise ValueError(f"adjacency of {v} not sorted/unique")
                prev = u
        for v, w in enumerate(weights):
            if not isinstance(w, int) or isinstance(w, bool):
                raise ValueError(f"weight of vertex {v} is not an int")
            if not 0 <= w < MAX_WEIGHT:
                raise ValueError(f"weight of vertex {v} out of range")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", tuple(tuple(row) for row in adj))
        object.__setattr__(self, "weights", tuple(weights))
        nbsets = tuple(frozenset(row) for row in self.adj)
        for v, row in enumerate(self.adj):
            for u in row:
                if v not in nbsets[u]:
                    raise ValueError(f"edge {v}-{u} not symmetric")
        object.__setattr__(self, "_nbsets", nbsets)
        object.__setattr__(self, "_m", sum(len(r) for r in self.adj) // 2)

    def __setattr__(self, name, value):  # pragma: no cover - safety net
        raise AttributeError("WeightedGraph is immutable")

    # ===== basic accessors =====

    @property
    def m(self) -> int:
        return self._m

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def nbset(self, v: int) -> frozenset[int]:
        return self._nbsets[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._nbsets[u]

    def closed(self, v: int) -> frozenset[int]:
        return self._nbsets[v] | {v}

    def edges(self) -> list[tuple[int, int]]:
        return [(v, u) for v in range(self.n) for u in self.adj[v] if v < u]

    def weight_of(self, vertices) -> int:
        return sum(self.weights[v] for v in vertices)

    def __eq__(self, other) -> bool:
        return (isinstance(other, WeightedGraph) and self.n == other.n
                and self.adj == other.adj and self.weights == other.weights)

    def __hash__(self) -> int:
        return hash((self.n, self.adj, self.weights))

    def __repr__(self) -> str:
        return f"WeightedGraph(n={self.n}, m={self.m})"

    # ===== constructors =====

    @staticmethod
    def from_edges(n: int, edges, weights=None) -> "WeightedGraph":
        """Build a graph from an iterable of 0-based endpoint pairs."""
        rows: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range")
            if u == v:
                raise ValueError(f"loop edge at {u}")
            if v in rows[u]:
                raise ValueError(f"duplicate edge ({u},{v})")
            rows[u].add(v)
            rows[v].add(u)
        if weights is None:
            weights = (1,) * n
        return WeightedGraph(n, tuple(tuple(sorted(r)) for r in rows),
                             tuple(weights))

    def with_weights(self, weights) -> "WeightedGraph":
        return WeightedGraph(self.n, self.adj, tuple(weights))

    def induced(self, vertices) -> tuple["WeightedGraph", list[int]]:
        """Induced subgraph plus the sub-to-original vertex id map."""
        keep = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(keep)}
        rows = tuple(tuple(pos[u] for u in self.adj[v] if u in pos)
                     for v in keep)
        sub = WeightedGraph(len(keep), rows,
                            tuple(self.weights[v] for v in keep))
        return sub, keep


@dataclass(frozen=True)
class DistanceLevels:
    """BFS distance classes around an anchor vertex.

    ``level_of[v]`` is the distance from the anchor, or None when v is
    unreachable.  ``levels[i]`` is the sorted tuple of vertices at distance
    exactly i; ``levels[0] == (anchor,)``.  ``level(i)`` is empty beyond the
    last nonempty class, which lets callers probe N5, N6, ... freely.
    """

    anchor: int
    level_of: tuple[int | None, ...]
    levels: tuple[tuple[int, ...], ...]

    def level(self, i: int) -> tuple[int, ...]:
        return self.levels[i] if 0 <= i < len(self.levels) else ()

    @property
    def eccentricity(self) -> int:
        return len(self.levels) - 1

    def reachable(self) -> list[int]:
        return [v for v, d in enumerate(self.level_of) if d is not None]


def distance_levels(g: WeightedGraph, anchor: int) -> DistanceLevels:
    """BFS from ``anchor``; vertices in other components get level None."""
    if not 0 <= anchor < g.n:
        raise ValueError(f"anchor {anchor} out of range")
    dist: list[int | None] = [None] * g.n
    dist[anchor] = 0
    queue = deque([anchor])
    while queue:
        v = queue.popleft()
        for u in g.adj[v]:
            if dist[u] is None:
                dist[u] = dist[v] + 1
                queue.append(u)
    depth = max(d for d in dist if d is not None)
    levels = [[] for _ in range(depth + 1)]
    for v, d in enumerate(dist):
        if d is not None:
            levels[d].append(v)
    return DistanceLevels(anchor, tuple(dist),
                          tuple(tuple(lev) for lev in levels))


def square(g: WeightedGraph) -> WeightedGraph:
    """Graph on the same vertices joining every pair at distance <= 2.

    Weights carry over unchanged.  For large graphs the neighborhood
    merging runs on packed bitsets; the result is identical.
    """
    if g.n >= 512:
        from . import kernels
        return kernels.square_packed(g)
    rows = []
    for v in range(g.n):
        acc = set(g.adj[v])
        for u in g.adj[v]:
            acc.update(g.adj[u])
        acc.discard(v)
        rows.append(tuple(sorted(acc)))
    return WeightedGraph(g.n, tuple(rows), g.weights)


def components_within(g: WeightedGraph, vertices) -> tuple[tuple[int, ...], ...]:
    """Connected components of the subgraph induced on ``vertices``.

    Same ordering conventions as :func:`connected_components`, but the
    returned tuples use the original vertex ids.
    """
    pool = set(vertices)
    comps = []
    for s in sorted(pool):
        if s not in pool:
            continue
        pool.discard(s)
        comp = [s]
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in g.adj[v]:
                if u in pool:
                    pool.discard(u)
                    comp.append(u)
                    queue.append(u)
        comps.append(tuple(sorted(comp)))
    return tuple(comps)


def connected_components(g: WeightedGraph) -> tuple[tuple[int, ...], ...]:
    """Vertex sets of the connected components, each sorted, ordered by
    smallest member."""
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in g.adj[v]:
                if not seen[u]:
                    seen[u] = True
                    comp.append(u)
                    queue.append(u)
        comps.append(tuple(sorted(comp)))
    return tuple(comps)


def universal_in(g: WeightedGraph, subset) -> tuple[int, ...]:
    """Vertices of ``subset`` adjacent to every other vertex of ``subset``."""
    sub = set(subset)
    out = []
    for v in sorted(sub):
        if sub <= g.nbset(v) | {v}:
            out.append(v)
    return tuple(out)


def is_simplicial(g: WeightedGraph, v: int) -> bool:
    """True when the open neighborhood of v induces a clique."""
    nbrs = g.adj[v]
    for i, a in enumerate(nbrs):
        sa = g.nbset(a)
        for b in nbrs[i + 1:]:
            if b not in sa:
                return False
    return True


# ===== text format =====
#
# The file format is DIMACS-flavored:
#
#   c  free-text comment
#   p ed <n> <m>          exactly one, before any w/e line
#   w <v> <weight>        optional, 1-based vertex, default weight 1
#   e <u> <v>             1-based endpoints, u != v, no duplicates
#
# Parsing is strict: unknown line types, malformed counts, out-of-range
# ids, duplicate header/edge/weight lines are all rejected with the
# offending 1-based line number in the message.


class ParseError(ValueError):
    def __init__(self, line: int | None, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


def parse_graph(text: str) -> WeightedGraph:
    n = -1
    m_declared = 0
    weights: dict[int, int] = {}
    edges: set[tuple[int, int]] = set()
    header_line = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        tokens = line.split()
        kind = tokens[0]
        if kind == "c":
            continue
        if kind == "p":
            if header_line is not None:
                raise ParseError(lineno, "duplicate problem line")
            if len(tokens) != 4 or tokens[1] != "ed":
                raise ParseError(lineno, "problem line must be 'p ed <n> <m>'")
            try:
                n = int(tokens[2])
                m_declared = int(tokens[3])
            except ValueError:
                raise ParseError(lineno, "problem line counts must be ints")
            if n < 0 or m_declared < 0:
                raise ParseError(lineno, "problem line counts must be >= 0")
            header_line = lineno
            continue
        if kind == "w":
            if header_line is None:
                raise ParseError(lineno, "weight line before problem line")
            if len(tokens) != 3:
                raise ParseError(lineno, "weight line must be 'w <v> <weight>'")
            try:
                v = int(tokens[1])
                wt = int(tokens[2])
            except ValueError:
                raise ParseError(lineno, "weight line fields must be ints")
            if not 1 <= v <= n:
                raise ParseError(lineno, f"vertex id {v} out of range")
            if v in weights:
                raise ParseError(lineno, f"duplicate weight for vertex {v}")
            if not 0 <= wt < MAX_WEIGHT:
                raise ParseError(lineno, f"weight {wt} out of range")
            weights[v] = wt
            continue
        if kind == "e":
            if header_line is None:
                raise ParseError(lineno, "edge line before problem line")
            if len(tokens) != 3:
                raise ParseError(lineno, "edge line must be 'e <u> <v>'")
            try:
                u = int(tokens[1])
                v = int(tokens[2])
            except ValueError:
                raise ParseError(lineno, "edge endpoints must be ints")
            if not (1 <= u <= n and 1 <= v <= n):
                bad = u if not 1 <= u <= n else v
                raise ParseError(lineno, f"edge endpoint {bad} out of range")
            if u == v:
                raise ParseError(lineno, f"loop edge at vertex {u}")
            key = (min(u, v), max(u, v))
            if key in edges:
                raise ParseError(lineno, f"duplicate edge {key[0]}-{key[1]}")
            edges.add(key)
            continue
        raise ParseError(lineno, f"unknown line type {kind!r}")
    if header_line is None:
        raise ParseError(None, "missing problem line")
    if len(edges) != m_declared:
        raise ParseError(None, f"problem line declares {m_declared} edges, "
                               f"file has {len(edges)}")
    wt = tuple(weights.get(v + 1, 1) for v in range(n))
    return WeightedGraph.from_edges(n, [(u - 1, v - 1) for u, v in edges], wt)


def render_graph(g: WeightedGraph) -> str:
    """Canonical text rendering; parse_graph(render_graph(g)) == g."""
    out = [f"p ed {g.n} {g.m}"]
    for v in range(g.n):
        if g.weights[v] != 1:
            out.append(f"w {v + 1} {g.weights[v]}")
    for u, v in sorted(g.edges()):
        out.append(f"e {u + 1} {v + 1}")
    return "\n".join(out) + "\n"
