"""Shared builders and generators for the test suite.

Everything here is test infrastructure: small named graphs, exhaustive
enumeration of connected graphs on up to six vertices, structured family
builders (thin spiders, comb caterpillars, planted cographs), and the
independent structural checks (girth, bipartiteness) used to audit the
hardness-instance generator.
"""
from __future__ import annotations

import random
from collections import deque
from itertools import combinations

from effdom import WeightedGraph, find_induced

# ===== SMALL NAMED GRAPHS =====


def path(k: int, weights=None) -> WeightedGraph:
    return WeightedGraph.from_edges(k, [(i, i + 1) for i in range(k - 1)],
                                    weights)


def cycle(k: int, weights=None) -> WeightedGraph:
    edges = [(i, (i + 1) % k) for i in range(k)]
    return WeightedGraph.from_edges(k, edges, weights)


def complete(k: int, weights=None) -> WeightedGraph:
    return WeightedGraph.from_edges(k, combinations(range(k), 2), weights)


def star(leaves: int, weights=None) -> WeightedGraph:
    """K_{1,leaves} with the center at vertex 0."""
    return WeightedGraph.from_edges(leaves + 1,
                                    [(0, i) for i in range(1, leaves + 1)],
                                    weights)


# ===== STRUCTURAL CHECKS (independent of the package under test) =====


def is_connected(g: WeightedGraph) -> bool:
    if g.n == 0:
        return False
    seen = {0}
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for u in g.adj[v]:
            if u not in seen:
                seen.add(u)
                queue.append(u)
    return len(seen) == g.n


def is_bipartite(g: WeightedGraph) -> bool:
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in g.adj[v]:
                if color[u] == -1:
                    color[u] = 1 - color[v]
                    queue.append(u)
                elif color[u] == color[v]:
                    return False
    return True


def girth(g: WeightedGraph) -> int | None:
    """Length of a shortest cycle, or None for a forest (BFS per vertex)."""
    best: int | None = None
    for s in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in g.adj[v]:
                if dist[u] == -1:
                    dist[u] = dist[v] + 1
                    parent[u] = v
                    queue.append(u)
                elif parent[v] != u:
                    cyc = dist[v] + dist[u] + 1
                    if best is None or cyc < best:
                        best = cyc
    return best


# ===== EXHAUSTIVE ENUMERATION =====

# Labeled connected graphs on 1..6 vertices, counted per vertex count.
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 4, 4: 38, 5: 728, 6: 26704}


def all_graphs(n: int):
    """Yield every labeled simple graph on exactly n vertices."""
    pairs = list(combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if bits >> i & 1]
        yield WeightedGraph.from_edges(n, edges)


def connected_graphs(n: int):
    """Yield every labeled connected simple graph on exactly n vertices."""
    for g in all_graphs(n):
        if is_connected(g):
            yield g


def connected_graphs_upto(nmax: int):
    for n in range(1, nmax + 1):
        yield from connected_graphs(n)


# ===== STRUCTURED FAMILIES =====


def thin_spider(legs: int, weights=None) -> WeightedGraph:
    """Clique 0..legs-1; vertex legs+i is the pendant partner of i."""
    edges = list(combinations(range(legs), 2))
    edges += [(i, legs + i) for i in range(legs)]
    return WeightedGraph.from_edges(2 * legs, edges, weights)


def comb_caterpillar(teeth: int, weights=None) -> WeightedGraph:
    """Spine path 0..teeth-1; vertex teeth+i is the tooth of spine i."""
    edges = [(i, i + 1) for i in range(teeth - 1)]
    edges += [(i, teeth + i) for i in range(teeth)]
    return WeightedGraph.from_edges(2 * teeth, edges, weights)


def random_weights(rng: random.Random, n: int, lo: int = 1,
                   hi: int = 100) -> tuple[int, ...]:
    return tuple(rng.randint(lo, hi) for _ in range(n))


def random_connected_graph(rng: random.Random, n: int,
                           extra_edge_prob: float = 0.25,
                           weights=None) -> WeightedGraph:
    """Random spanning tree plus independently kept extra edges."""
    edges = set()
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        a, b = order[i], order[rng.randrange(i)]
        edges.add((min(a, b), max(a, b)))
    for u, v in combinations(range(n), 2):
        if (u, v) not in edges and rng.random() < extra_edge_prob:
            edges.add((u, v))
    return WeightedGraph.from_edges(n, edges, weights)


def random_cograph(rng: random.Random, n: int, weights=None) -> WeightedGraph:
    """Random cograph via a random cotree over a shuffled vertex order."""
    verts = list(range(n))
    rng.shuffle(verts)
    edges: list[tuple[int, int]] = []

    def build(vs: list[int], join: bool) -> None:
        if len(vs) <= 1:
            return
        cut = rng.randint(1, len(vs) - 1)
        left, right = vs[:cut], vs[cut:]
        if join:
            edges.extend((min(a, b), max(a, b)) for a in left for b in right)
        build(left, not join)
        build(right, not join)

    build(verts, rng.random() < 0.5)
    return WeightedGraph.from_edges(n, edges, weights)


def planted_universal_cograph(rng: random.Random, n: int,
                              weights=None) -> WeightedGraph:
    """Connected cograph that owns a universal vertex (vertex n-1).

    The join with the planted vertex keeps the graph connected and
    guarantees an efficient dominating set (the universal vertex alone
    when it is the unique one of minimum closed weight).
    """
    base = random_cograph(rng, n - 1)
    edges = base.edges() + [(v, n - 1) for v in range(n - 1)]
    return WeightedGraph.from_edges(n, edges, weights)


# ===== P5-FREE SAMPLER =====


def p5free_with_ed(rng: random.Random, max_n: int = 16) -> WeightedGraph:
    """One random P5-free graph that has an efficient dominating set.

    Mixes three sources so the pool is not a single shape: planted
    cographs (always admit the universal vertex as an e.d. candidate),
    thin spiders (independent ends form an e.d.), and sparse rejection
    samples kept only when P5-free.  Existence of an e.d. is certified
    by the caller against the brute-force oracle, not assumed here.
    """
    while True:
        kind = rng.random()
        if kind < 0.4:
            n = rng.randint(2, max_n)
            g = planted_universal_cograph(rng, n)
        elif kind < 0.7:
            legs = rng.randint(1, max_n // 2)
            g = thin_spider(legs)
        else:
            n = rng.randint(4, min(10, max_n))
            g = random_connected_graph(rng, n, 0.35)
            if find_induced(g, "P5") is not None:
                continue
        if find_induced(g, "P5") is not None:  # audit structured sources too
            continue
        return g.with_weights(random_weights(rng, g.n))
