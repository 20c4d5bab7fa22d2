"""Reference solvers used to cross-check the polynomial algorithms.

Two independent routes are kept deliberately separate:

* exhaustive subset scans (:func:`brute_force_wed`,
  :func:`brute_force_kbwed`, :func:`exact_mwis`), hard-capped at 25
  vertices, and
* an exact-cover backtracker (:func:`exact_cover_ed`) over the closed
  neighborhoods, which handles the larger instances produced by the
  satisfiability reduction.

The subset scans report the number of efficient dominating sets and the
lexicographically smallest optimum.  The backtracker guarantees the
optimal weight and a deterministic optimal set, but prunes equal-weight
branches, so among several optima it may return one that is not the
lexicographically smallest; its ``count`` field is always None.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING

from . import kernels
from .graphs import WeightedGraph

if TYPE_CHECKING:  # pragma: no cover
    from .reduction import MonotoneCnf

log = logging.getLogger(__name__)

BRUTE_LIMIT = 25


@dataclass(frozen=True)
class OracleResult:
    exists: bool
    best_weight: int | None
    best_set: tuple[int, ...] | None
    count: int | None


@dataclass(frozen=True)
class CnfResult:
    satisfiable: bool
    assignment: tuple[bool, ...] | None


def _mask_vertices(mask: int) -> tuple[int, ...]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def _closed_masks(g: WeightedGraph) -> list[int]:
    masks = []
    for v in range(g.n):
        m = 1 << v
        for u in g.adj[v]:
            m |= 1 << u
        masks.append(m)
    return masks


def _check_limit(g: WeightedGraph, max_n: int, what: str) -> None:
    if g.n > max_n:
        raise ValueError(
            f"{what} refuses n={g.n} > {max_n}; raise max_n explicitly "
            f"if you really want the exponential scan")


def brute_force_wed(g: WeightedGraph, max_n: int = BRUTE_LIMIT) -> OracleResult:
    """Scan all vertex subsets for efficient dominating sets."""
    _check_limit(g, max_n, "brute_force_wed")
    if g.n == 0:
        return OracleResult(True, 0, (), 1)
    full = (1 << g.n) - 1
    count, bw, bm = kernels.ed_scan(_closed_masks(g), g.weights, full, g.n)
    if bw is None:
        return OracleResult(False, None, None, count)
    return OracleResult(True, bw, _mask_vertices(bm), count)


def brute_force_kbwed(g: WeightedGraph, k: int,
                      max_n: int = BRUTE_LIMIT) -> OracleResult:
    """Like :func:`brute_force_wed` restricted to vertices of degree <= k."""
    _check_limit(g, max_n, "brute_force_kbwed")
    if k < 0:
        raise ValueError("degree bound must be nonnegative")
    if g.n == 0:
        return OracleResult(True, 0, (), 1)
    allowed = 0
    for v in range(g.n):
        if g.degree(v) <= k:
            allowed |= 1 << v
    count, bw, bm = kernels.ed_scan(_closed_masks(g), g.weights, allowed, g.n)
    if bw is None:
        return OracleResult(False, None, None, count)
    return OracleResult(True, bw, _mask_vertices(bm), count)


def exact_mwis(g: WeightedGraph, max_n: int = BRUTE_LIMIT) -> tuple[int, tuple[int, ...]]:
    """Maximum-weight independent set by exhaustive scan (ties: lex)."""
    _check_limit(g, max_n, "exact_mwis")
    if g.n == 0:
        return 0, ()
    masks = []
    for v in range(g.n):
        m = 0
        for u in g.adj[v]:
            m |= 1 << u
        masks.append(m)
    bw, bm = kernels.mwis_scan(masks, g.weights, g.n)
    return bw, _mask_vertices(bm)


# ===== exact cover over closed neighborhoods =====


def exact_cover_ed(g: WeightedGraph) -> OracleResult:
    """Minimum-weight e.d. via exact cover of the closed neighborhoods.

    Choosing vertex d covers N[d]; a set is efficiently dominating
    exactly when the chosen closed neighborhoods partition V.  The search
    branches on the uncovered vertex with the fewest remaining choices,
    propagates forced choices, and prunes on weight.
    """
    n = g.n
    if n == 0:
        return OracleResult(True, 0, (), None)
    cmask = _closed_masks(g)
    # rows conflicting with row d: every d' whose closed neighborhood
    # meets N[d], i.e. the union of closed masks over N[d]
    conflict = []
    for d in range(n):
        c = cmask[d]
        for u in g.adj[d]:
            c |= cmask[u]
        conflict.append(c)
    full = (1 << n) - 1
    wts = g.weights
    best: list = [None, None]  # weight, chosen tuple
    nodes = 0

    def descend(covered: int, forbidden: int, chosen: list[int],
                cur_w: int) -> None:
        nonlocal nodes
        nodes += 1
        if nodes % 100000 == 0:
            log.debug("exact_cover_ed: %d nodes, depth %d", nodes, len(chosen))
        if best[0] is not None and cur_w >= best[0]:
            return
        # propagate forced choices until a real branch point appears
        while True:
            if covered == full:
                best[0] = cur_w
                best[1] = tuple(sorted(chosen))
                return
            branch_v = -1
            branch_avail = 0
            branch_size = n + 1
            uncovered = full & ~covered
            v = 0
            forced = None
            while uncovered:
                if uncovered & 1:
                    avail = cmask[v] & ~forbidden
                    if avail == 0:
                        return
                    size = avail.bit_count()
                    if size == 1:
                        forced = avail
                        break
                    if size < branch_size:
                        branch_size = size
                        branch_v = v
                        branch_avail = avail
                uncovered >>= 1
                v += 1
            if forced is not None:
                d = forced.bit_length() - 1
                covered |= cmask[d]
                forbidden |= conflict[d]
                chosen.append(d)
                cur_w += wts[d]
                if best[0] is not None and cur_w >= best[0]:
                    return
                continue
            break
        picks = sorted(_mask_vertices(branch_avail),
                       key=lambda d: (wts[d], d))
        for d in picks:
            descend(covered | cmask[d], forbidden | conflict[d],
                    chosen + [d], cur_w + wts[d])

    descend(0, 0, [], 0)
    if best[0] is None:
        return OracleResult(False, None, None, None)
    return OracleResult(True, best[0], best[1], None)


# ===== one-in-three satisfiability =====


def one_in_three_brute(cnf: "MonotoneCnf", max_n: int = BRUTE_LIMIT) -> CnfResult:
    """Exhaustively test exactly-one-per-clause satisfiability.

    The witness is the satisfying assignment whose set of true variables
    is lexicographically least as a sorted tuple (so the empty formula
    yields all-false and a single clause yields its first variable),
    matching the global tie-break used for vertex sets.  True-sets are
    enumerated depth-first in exactly that order; a branch dies as soon
    as adding a variable would give some clause two true members.
    """
    nv = cnf.num_vars
    if nv > max_n:
        raise ValueError(
            f"one_in_three_brute refuses {nv} > {max_n} variables")
    clauses = cnf.clauses
    by_var: list[list[int]] = [[] for _ in range(nv + 1)]
    for ci, clause in enumerate(clauses):
        for x in clause:
            by_var[x].append(ci)
    counts = [0] * len(clauses)
    chosen: list[int] = []
    best: tuple[int, ...] | None = None

    def descend(lo: int) -> None:
        nonlocal best
        if best is None and all(c == 1 for c in counts):
            best = tuple(chosen)
            return
        for x in range(lo, nv + 1):
            if best is not None:
                return
            if any(counts[ci] >= 1 for ci in by_var[x]):
                continue
            for ci in by_var[x]:
                counts[ci] += 1
            chosen.append(x)
            descend(x + 1)
            chosen.pop()
            for ci in by_var[x]:
                counts[ci] -= 1

    descend(1)
    if best is None:
        return CnfResult(False, None)
    true_set = set(best)
    return CnfResult(True, tuple(i in true_set for i in range(1, nv + 1)))
