"""Hot numeric kernels: exhaustive subset scans and packed-bitset helpers.

The exact oracles enumerate all 2^n vertex subsets of graphs with n <= 25.
That loop is the hottest code in the package, so it exists twice:

* a numba ``@njit`` kernel over uint64 neighborhood masks, and
* a pure-numpy fallback that scans subsets in chunked bit matrices.

The numba path is used when available; setting ``EFFDOM_NO_NUMBA=1`` in the
environment (or a failed numba import) selects the numpy path.  Both
backends are exposed under stable names so the test suite and
``benchmarks/bench_kernels.py`` can compare them directly.

Masks encode vertex sets as machine words (bit v = vertex v).  The
tie-break used everywhere in the package is: smaller total weight first,
then the lexicographically smaller sorted vertex tuple.  On masks the
tuple comparison reduces to a two-word bit trick, see ``mask_lex_less``.

Weight sums stay exact: single weights are < 2^32 and n <= 25, so int64
accumulators cannot overflow.
"""

from __future__ import annotations

import os

import numpy as np

__all__ = [
    "USING_NUMBA",
    "mask_lex_less",
    "ed_scan",
    "ed_scan_numpy",
    "mwis_scan",
    "mwis_scan_numpy",
    "packed_adjacency",
    "square_packed",
]

_CHUNK = 1 << 14

USING_NUMBA = False
if os.environ.get("EFFDOM_NO_NUMBA", "") != "1":
    try:
        from numba import njit as _njit
        USING_NUMBA = True
    except Exception:  # pragma: no cover - numba is an install-time dep
        USING_NUMBA = False

if not USING_NUMBA:
    def _njit(*a, **k):  # identity decorator so the kernels stay importable
        if len(a) == 1 and callable(a[0]) and not k:
            return a[0]
        return lambda f: f


def mask_lex_less(a: int, b: int) -> bool:
    """True when mask ``a``'s sorted vertex tuple precedes ``b``'s.

    At the lowest differing bit p, the mask holding p contributes the
    smaller element -- unless the other mask has nothing above p, in which
    case the other tuple is a proper prefix and precedes.
    """
    if a == b:
        return False
    d = a ^ b
    p = d & (-d)
    above = ~((p << 1) - 1)
    if a & p:
        return (b & above) != 0
    return (a & above) == 0


@_njit(cache=True)
def _ed_scan_words(closed, wts, allowed, full, limit):
    """Scan all subsets; return (count, best_w, best_mask).

    A subset is accepted when the closed neighborhoods of its members are
    pairwise disjoint and cover ``full``, i.e. the subset is an e.d.
    best_mask is 0 and best_w is -1 when nothing is accepted (the empty
    set is an e.d. only of the empty graph, handled by the caller).
    """
    count = np.int64(0)
    best_w = np.int64(-1)
    best_mask = np.uint64(0)
    one = np.uint64(1)
    for s in range(1, limit):
        su = np.uint64(s)
        if su & ~allowed:
            continue
        acc = np.uint64(0)
        w = np.int64(0)
        ok = True
        rest = su
        while rest:
            p = rest & (~rest + one)
            v = 0
            t = p
            while t > one:
                t >>= one
                v += 1
            if acc & closed[v]:
                ok = False
                break
            acc |= closed[v]
            w += wts[v]
            rest ^= p
        if not ok or acc != full:
            continue
        count += 1
        if best_w < 0 or w < best_w:
            best_w = w
            best_mask = su
        elif w == best_w:
            d = su ^ best_mask
            q = d & (~d + one)
            above = ~((q << one) - one)
            if su & q:
                if best_mask & above:
                    best_mask = su
            else:
                if not (su & above):
                    best_mask = su
    return count, best_w, best_mask


@_njit(cache=True)
def _mwis_scan_words(openm, wts, limit):
    """Max-weight independent set scan; ties to the lex-smaller mask.

    The empty set (weight 0) is always a candidate.
    """
    best_w = np.int64(0)
    best_mask = np.uint64(0)
    one = np.uint64(1)
    for s in range(1, limit):
        su = np.uint64(s)
        w = np.int64(0)
        ok = True
        rest = su
        while rest:
            p = rest & (~rest + one)
            v = 0
            t = p
            while t > one:
                t >>= one
                v += 1
            if su & openm[v]:
                ok = False
                break
            w += wts[v]
            rest ^= p
        if not ok:
            continue
        if w > best_w:
            best_w = w
            best_mask = su
        elif w == best_w:
            d = su ^ best_mask
            q = d & (~d + one)
            above = ~((q << one) - one)
            if su & q:
                if best_mask & above:
                    best_mask = su
            else:
                if not (su & above):
                    best_mask = su
    return best_w, best_mask


# ===== numpy fallback =====


def _subset_bits(start: int, stop: int, n: int) -> np.ndarray:
    idx = np.arange(start, stop, dtype=np.int64)
    return ((idx[:, None] >> np.arange(n, dtype=np.int64)[None, :]) & 1)


def ed_scan_numpy(closed_masks, weights, allowed_mask, n):
    """Chunked numpy version of the e.d. subset scan."""
    a_closed = np.zeros((n, n), dtype=np.int16)
    for v, mask in enumerate(closed_masks):
        for u in range(n):
            if (mask >> u) & 1:
                a_closed[v, u] = 1
    wts = np.asarray(weights, dtype=np.int64)
    banned = np.array([1 - ((allowed_mask >> v) & 1) for v in range(n)],
                      dtype=np.int64)
    count = 0
    best_w = None
    best_mask = None
    for start in range(0, 1 << n, _CHUNK):
        stop = min(start + _CHUNK, 1 << n)
        bits = _subset_bits(start, stop, n)
        use = (bits @ banned) == 0
        if start == 0:
            use[0] = False
        cov = bits @ a_closed
        valid = use & (cov == 1).all(axis=1)
        if not valid.any():
            continue
        count += int(valid.sum())
        w = bits @ wts
        w_valid = w[valid]
        local_best = int(w_valid.min())
        if best_w is None or local_best <= best_w:
            subset_ids = np.flatnonzero(valid)[w_valid == local_best]
            for sid in subset_ids:
                mask = start + int(sid)
                if (best_w is None or local_best < best_w
                        or mask_lex_less(mask, best_mask)):
                    best_w = local_best
                    best_mask = mask
    return count, best_w, best_mask


def mwis_scan_numpy(open_masks, weights, n):
    """Chunked numpy version of the max-weight independent set scan."""
    a_open = np.zeros((n, n), dtype=np.int16)
    for v, mask in enumerate(open_masks):
        for u in range(n):
            if (mask >> u) & 1:
                a_open[v, u] = 1
    wts = np.asarray(weights, dtype=np.int64)
    best_w = 0
    best_mask = 0
    for start in range(0, 1 << n, _CHUNK):
        stop = min(start + _CHUNK, 1 << n)
        bits = _subset_bits(start, stop, n)
        conflict = (bits * (bits @ a_open)).sum(axis=1) > 0
        valid = ~conflict
        w = bits @ wts
        w[~valid] = -1
        local_best = int(w.max())
        if local_best < best_w:
            continue
        subset_ids = np.flatnonzero(w == local_best)
        for sid in subset_ids:
            mask = start + int(sid)
            if local_best > best_w or mask_lex_less(mask, best_mask):
                best_w = local_best
                best_mask = mask
    return best_w, best_mask


# ===== dispatchers =====


def ed_scan(closed_masks, weights, allowed_mask, n):
    """Count and best (weight, lex) e.d. among subsets of ``allowed_mask``.

    Returns (count, best_weight, best_mask); the latter two are None when
    no nonempty subset qualifies.
    """
    if n == 0:
        return 1, 0, 0
    if USING_NUMBA:
        closed = np.array(closed_masks, dtype=np.uint64)
        wts = np.array(weights, dtype=np.int64)
        full = np.uint64((1 << n) - 1)
        count, bw, bm = _ed_scan_words(closed, wts, np.uint64(allowed_mask),
                                       full, 1 << n)
        if bw < 0:
            return int(count), None, None
        return int(count), int(bw), int(bm)
    return ed_scan_numpy(closed_masks, weights, allowed_mask, n)


def mwis_scan(open_masks, weights, n):
    """Best (weight, lex) independent set; the empty set is admissible."""
    if n == 0:
        return 0, 0
    if USING_NUMBA:
        openm = np.array(open_masks, dtype=np.uint64)
        wts = np.array(weights, dtype=np.int64)
        bw, bm = _mwis_scan_words(openm, wts, 1 << n)
        return int(bw), int(bm)
    return mwis_scan_numpy(open_masks, weights, n)


# ===== packed bitsets =====


def packed_adjacency(g, closed: bool = False) -> np.ndarray:
    """(n, ceil(n/64)) uint64 matrix; row v holds the bitset of N(v)."""
    n = g.n
    words = (n + 63) // 64 if n else 1
    bits = np.zeros((n, words), dtype=np.uint64)
    if g.m:
        edges = np.array(g.edges(), dtype=np.int64)
        u, v = edges[:, 0], edges[:, 1]
        np.bitwise_or.at(bits, (u, v >> 6), np.uint64(1) << (v & 63).astype(np.uint64))
        np.bitwise_or.at(bits, (v, u >> 6), np.uint64(1) << (u & 63).astype(np.uint64))
    if closed:
        idx = np.arange(n, dtype=np.int64)
        np.bitwise_or.at(bits, (idx, idx >> 6),
                         np.uint64(1) << (idx & 63).astype(np.uint64))
    return bits


def _unpack_row(row: np.ndarray, n: int) -> np.ndarray:
    flat = np.unpackbits(row.view(np.uint8), bitorder="little")[:n]
    return np.flatnonzero(flat)


def square_packed(g):
    """Packed-bitset implementation behind :func:`effdom.graphs.square`."""
    from .graphs import WeightedGraph
    n = g.n
    bits = packed_adjacency(g)
    rows = []
    selfbit_word = np.arange(n) >> 6
    selfbit = np.uint64(1) << (np.arange(n) & 63).astype(np.uint64)
    for v in range(n):
        nbrs = np.fromiter(g.adj[v], dtype=np.int64, count=len(g.adj[v]))
        acc = bits[v].copy()
        if nbrs.size:
            acc |= np.bitwise_or.reduce(bits[nbrs], axis=0)
        acc[selfbit_word[v]] &= ~selfbit[v]
        rows.append(tuple(int(x) for x in _unpack_row(acc, n)))
    return WeightedGraph(n, tuple(rows), g.weights)
