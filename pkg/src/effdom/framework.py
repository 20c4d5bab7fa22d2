"""Outcome types and the anchor-sweep driver shared by all class solvers.

Every solver reports one of three verdicts:

* ``SOLVED`` with a minimum-weight efficient dominating set,
* ``NO_ED`` -- no e.d. exists (guaranteed only when the input belongs to
  the solver's class; the ``caveat`` flag records when some anchor gave up
  for a reason whose impossibility proof is class-conditional), or
* ``NOT_IN_CLASS`` with a verified induced-pattern witness.

SOLVED and NOT_IN_CLASS answers are unconditionally correct: candidates
are validated by :func:`is_efficient_dominating` before they can win, and
witnesses are re-checked against the pattern catalog.  This is what makes
the solvers safe to run on arbitrary input.

``run_robust`` drives a per-anchor candidate procedure over all vertices
of a connected graph.  The procedure receives the BFS distance levels of
its anchor and may answer with a candidate set containing the anchor,
with "unsuccessful" (no e.d. uses this anchor -- possibly flagged with a
caveat), or with a not-in-class witness.  The cheapest valid candidate
over all anchors wins; ties go to the lexicographically smallest sorted
vertex tuple, the global convention of this package.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .graphs import (WeightedGraph, DistanceLevels, distance_levels,
                     connected_components)
from . import patterns as _patterns


class Status(enum.Enum):
    SOLVED = "solved"
    NO_ED = "no_ed"
    NOT_IN_CLASS = "not_in_class"


@dataclass(frozen=True)
class Witness:
    """A not-in-class certificate: ``vertices`` induce ``pattern``."""
    pattern: str
    vertices: tuple[int, ...]


@dataclass(frozen=True)
class Outcome:
    status: Status
    vertices: tuple[int, ...] | None = None
    weight: int | None = None
    witness: Witness | None = None
    caveat: bool = False

    @staticmethod
    def solved(vertices, weight: int) -> "Outcome":
        return Outcome(Status.SOLVED, tuple(sorted(vertices)), weight)

    @staticmethod
    def no_ed(caveat: bool = False) -> "Outcome":
        return Outcome(Status.NO_ED, caveat=caveat)

    @staticmethod
    def not_in_class(witness: Witness) -> "Outcome":
        return Outcome(Status.NOT_IN_CLASS, witness=witness)


@dataclass(frozen=True)
class ProcResult:
    """Answer of a per-anchor candidate procedure."""
    kind: str  # "candidate" | "unsuccessful" | "not_in_class"
    vertices: tuple[int, ...] | None = None
    witness: Witness | None = None
    caveat: bool = False


def Candidate(vertices) -> ProcResult:
    return ProcResult("candidate", vertices=tuple(sorted(vertices)))


def Unsuccessful(caveat: bool = False) -> ProcResult:
    return ProcResult("unsuccessful", caveat=caveat)


def NotInClass(pattern: str, vertices) -> ProcResult:
    return ProcResult("not_in_class",
                      witness=Witness(pattern, tuple(vertices)))


def is_efficient_dominating(g: WeightedGraph, vertices) -> bool:
    """True when ``vertices`` hit every closed neighborhood exactly once."""
    ds = list(vertices)
    if len(set(ds)) != len(ds):
        return False
    if any(not 0 <= v < g.n for v in ds):
        return False
    count = [0] * g.n
    for d in ds:
        count[d] += 1
        for u in g.adj[d]:
            count[u] += 1
    return all(c == 1 for c in count)


def _verify_witness(g: WeightedGraph, witness: Witness) -> None:
    # candidate procedures are caller-suppliable, so a bogus witness must
    # fail loudly even under -O: raise, don't assert
    if not _patterns.check_induced(g, witness.pattern, witness.vertices):
        raise ValueError(
            f"procedure produced an invalid {witness.pattern} witness "
            f"{witness.vertices}")


def run_robust(g: WeightedGraph, procedure, parallel: bool = False) -> Outcome:
    """Sweep all anchors of a connected graph with ``procedure``.

    Raises ValueError on disconnected input: per-component splitting is
    the caller's job (see :func:`solve`).  With ``parallel`` the anchors
    are evaluated on a thread pool; the reduction is performed in anchor
    order afterwards, so the outcome is identical to the sequential run.
    """
    if g.n == 0:
        raise ValueError("empty graph has no anchors")
    if len(connected_components(g)) != 1:
        raise ValueError("run_robust requires a connected graph")

    def work(anchor: int) -> ProcResult:
        return procedure(g, anchor, distance_levels(g, anchor))

    if parallel and g.n > 1:
        import concurrent.futures
        with concurrent.futures.ThreadPoolExecutor() as pool:
            results = list(pool.map(work, range(g.n)))
    else:
        results = None

    best: tuple[int, tuple[int, ...]] | None = None
    caveat = False
    for anchor in range(g.n):
        r = results[anchor] if results is not None else work(anchor)
        if r.kind == "not_in_class":
            _verify_witness(g, r.witness)
            return Outcome.not_in_class(r.witness)
        if r.kind == "unsuccessful":
            caveat = caveat or r.caveat
            continue
        assert r.kind == "candidate"
        cand = r.vertices
        if anchor not in cand:
            raise AssertionError("candidate does not contain its anchor")
        if not is_efficient_dominating(g, cand):
            continue
        key = (g.weight_of(cand), cand)
        if best is None or key < best:
            best = key
    if best is None:
        return Outcome.no_ed(caveat=caveat)
    return Outcome.solved(best[1], best[0])


# ===== top-level dispatch =====

CLASS_TAGS = ("2p2", "p5", "p5-square", "p6s122", "2p3s122", "p2p4",
              "2bwed", "brute", "exact-cover", "auto")

# membership tests for the auto route, cheapest class first
_AUTO_ORDER: tuple[tuple[str, tuple[str, ...]], ...] = (
    ("2p2", ("2P2",)),
    ("p2p4", ("P2+P4",)),
    ("p5", ("P5",)),
    ("2p3s122", ("2P3", "S122")),
    ("p6s122", ("P6", "S122")),
)


def _oracle_outcome(res) -> Outcome:
    if not res.exists:
        return Outcome.no_ed()
    return Outcome.solved(res.best_set, res.best_weight)


def _solve_connected(g: WeightedGraph, cls: str, k: int,
                     parallel: bool) -> Outcome:
    from . import oracle
    from .free2p2 import solve_2p2
    from .freep5 import candidate_p5, solve_p5_square
    from .freep6s122 import candidate_p6s122
    from .free2p3s122 import candidate_2p3s122
    from .freep2p4 import candidate_p2p4
    from .degreebounded import solve_kbwed

    if cls == "brute":
        return _oracle_outcome(oracle.brute_force_wed(g))
    if cls == "exact-cover":
        return _oracle_outcome(oracle.exact_cover_ed(g))
    if cls == "2bwed":
        return solve_kbwed(g, k)
    if g.n == 1:
        return Outcome.solved((0,), g.weights[0])
    if cls == "2p2":
        return solve_2p2(g)
    if cls == "p5":
        return run_robust(g, candidate_p5, parallel)
    if cls == "p5-square":
        return solve_p5_square(g)
    if cls == "p6s122":
        return run_robust(g, candidate_p6s122, parallel)
    if cls == "2p3s122":
        return run_robust(g, candidate_2p3s122, parallel)
    if cls == "p2p4":
        return run_robust(g, candidate_p2p4, parallel)
    if cls == "auto":
        for tag, forbidden in _AUTO_ORDER:
            if all(_patterns.find_induced(g, p) is None for p in forbidden):
                out = _solve_connected(g, tag, k, parallel)
                if out.status is not Status.NOT_IN_CLASS:
                    return out
                break  # defensive: recognizer and solver disagree
        return _oracle_outcome(oracle.exact_cover_ed(g))
    raise ValueError(f"unknown class tag {cls!r}")


def solve(g: WeightedGraph, cls: str = "auto", k: int = 2,
          parallel: bool = False) -> Outcome:
    """Decide/optimize e.d. existence on ``g`` with the selected solver.

    Disconnected graphs are split into components; a not-in-class verdict
    on any component aborts the whole run (with the witness mapped back to
    the input's vertex ids), otherwise results combine by union/summation
    and any component without an e.d. makes the answer NO_ED.
    """
    if cls not in CLASS_TAGS:
        raise ValueError(f"unknown class tag {cls!r}")
    if g.n == 0:
        return Outcome.solved((), 0)
    parts = []
    for comp in connected_components(g):
        sub, idmap = g.induced(comp)
        out = _solve_connected(sub, cls, k, parallel)
        if out.status is Status.NOT_IN_CLASS:
            w = out.witness
            return Outcome.not_in_class(
                Witness(w.pattern, tuple(idmap[v] for v in w.vertices)))
        parts.append((out, idmap))
    if any(out.status is Status.NO_ED for out, _ in parts):
        # One solidly impossible component settles the whole graph, so the
        # caveat survives only when every NO_ED component carries it.
        caveat = all(out.caveat for out, _ in parts
                     if out.status is Status.NO_ED)
        return Outcome.no_ed(caveat=caveat)
    vertices: list[int] = []
    total = 0
    for out, idmap in parts:
        vertices.extend(idmap[v] for v in out.vertices)
        total += out.weight
    return Outcome.solved(vertices, total)
