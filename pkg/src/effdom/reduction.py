"""Hardness-instance generator: monotone 1-in-3 satisfiability to ED.

Maps a monotone 3-CNF formula F (all literals positive, exactly-one-per-
clause semantics) to a vertex-weighted graph G(F) such that G(F) has an
efficient dominating set if and only if F is exactly-one satisfiable.
The output is bipartite with maximum degree 3, and the length of every
connector path scales with a girth parameter so that all cycles through
clause vertices are long.

Construction, for a formula with n variables and m clauses:

* Each variable i becomes a **cycle** of ``6m`` vertices, six per clause
  block, laid out in a fixed printed order and closed end to end.  A
  cycle whose length is divisible by three carries exactly three exact
  domination patterns (the three residue classes); two of them act as
  the truth values.  An open path would carry only a single pattern and
  could not encode "false", which is why the blocks are closed into a
  cycle.
* Each variable-clause incidence becomes a **connector path** of ``6g``
  interior vertices joining one cycle vertex to the clause vertex, where
  ``g`` is the girth parameter.  The residue pattern on the cycle forces
  the pattern on the connector; only the "true" pattern reaches far
  enough to dominate the clause vertex.
* Each clause j becomes a single **clause vertex** adjacent to its three
  connectors.  It is dominated exactly once precisely when exactly one
  of its variables carries the "true" pattern.

Vertices have unit weight.  The roles table names every vertex; the
naming families are ``v``/``w``/``x`` with overlined partners ``v_bar``
etc., six per block, plus ``C(j)`` for clause vertices.
"""

from __future__ import annotations

from dataclasses import dataclass

from .framework import is_efficient_dominating
from .graphs import WeightedGraph

__all__ = [
    "MonotoneCnf",
    "ReductionGraph",
    "ReductionIntegrityError",
    "parse_monotone_cnf",
    "build_reduction",
    "extract_assignment",
    "assignment_to_ed",
]


class ReductionIntegrityError(ValueError):
    """An efficient dominating set matched none of the residue patterns.

    For graphs produced by :func:`build_reduction` this indicates a bug
    in either the construction or the solver that produced the set: a
    valid efficient dominating set always restricts to one of the three
    residue patterns on every variable cycle.
    """


# ===== FORMULAS =====


@dataclass(frozen=True)
class MonotoneCnf:
    """A monotone 3-CNF: every clause lists three distinct variables.

    Variables are numbered ``1..num_vars``; clause indices are 1-based.
    The intended semantics is exactly-one-per-clause satisfaction.
    """

    num_vars: int
    clauses: tuple[tuple[int, int, int], ...]

    def __post_init__(self) -> None:
        if self.num_vars < 0:
            raise ValueError("num_vars must be >= 0")
        object.__setattr__(
            self, "clauses",
            tuple(tuple(int(x) for x in cl) for cl in self.clauses))
        for cl in self.clauses:
            if len(cl) != 3:
                raise ValueError(f"clause {cl} must have exactly 3 literals")
            if len(set(cl)) != 3:
                raise ValueError(f"clause {cl} repeats a variable")
            for x in cl:
                if not 1 <= x <= self.num_vars:
                    raise ValueError(f"variable {x} out of range 1..{self.num_vars}")

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)

    def clauses_of(self, var: int) -> tuple[int, ...]:
        """1-based indices of the clauses containing ``var``, ascending."""
        if not 1 <= var <= self.num_vars:
            raise ValueError(f"variable {var} out of range 1..{self.num_vars}")
        return tuple(j for j, cl in enumerate(self.clauses, start=1)
                     if var in cl)


def parse_monotone_cnf(text: str) -> MonotoneCnf:
    """Parse DIMACS CNF text whose literals are all positive.

    Accepted lines: comments (``c ...``), one ``p cnf <vars> <clauses>``
    problem line, and clause lines of positive integers terminated by
    ``0`` (a clause may span lines).  Each clause must contain exactly
    three distinct variables.
    """
    num_vars: int | None = None
    declared = 0
    clauses: list[tuple[int, int, int]] = []
    pending: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] == "c":
            continue
        if tokens[0] == "p":
            if num_vars is not None:
                raise ValueError(f"line {lineno}: duplicate problem line")
            if len(tokens) != 4 or tokens[1] != "cnf":
                raise ValueError(
                    f"line {lineno}: problem line must be 'p cnf <vars> <clauses>'")
            try:
                num_vars = int(tokens[2])
                declared = int(tokens[3])
            except ValueError:
                raise ValueError(f"line {lineno}: problem line counts must be ints")
            if num_vars < 0 or declared < 0:
                raise ValueError(f"line {lineno}: problem line counts must be >= 0")
            continue
        if num_vars is None:
            raise ValueError(f"line {lineno}: clause before problem line")
        for tok in tokens:
            try:
                lit = int(tok)
            except ValueError:
                raise ValueError(f"line {lineno}: bad literal {tok!r}")
            if lit == 0:
                if len(pending) != 3:
                    raise ValueError(
                        f"line {lineno}: clause size must be 3, got {len(pending)}")
                if len(set(pending)) != 3:
                    raise ValueError(f"line {lineno}: repeated variable in clause")
                clauses.append((pending[0], pending[1], pending[2]))
                pending.clear()
            elif lit < 0:
                raise ValueError(
                    f"line {lineno}: negative literal {lit} "
                    f"(only monotone formulas are accepted)")
            elif lit > num_vars:
                raise ValueError(
                    f"line {lineno}: literal {lit} exceeds declared "
                    f"variable count {num_vars}")
            else:
                pending.append(lit)
    if num_vars is None:
        raise ValueError("missing problem line")
    if pending:
        raise ValueError("unterminated clause at end of input")
    if len(clauses) != declared:
        raise ValueError(
            f"problem line declares {declared} clauses, input has {len(clauses)}")
    return MonotoneCnf(num_vars, tuple(clauses))


# ===== REDUCTION GRAPH =====

# printed order of the six vertices in one cycle block
_CYCLE_NAMES = ("w_bar", "v", "x_bar", "w", "v_bar", "x")
# printed order of the six vertices in one connector block
_CONNECTOR_NAMES = ("x", "w_bar", "v", "x_bar", "w", "v_bar")

# offsets of each family inside a 6-vertex block
_CYCLE_TRUE = (1, 4)        # v, v_bar
_CYCLE_FALSE = (0, 3)       # w_bar, w
_CYCLE_X = (2, 5)           # x_bar, x
_CONNECTOR_TRUE = (2, 5)    # v, v_bar
_CONNECTOR_FALSE = (1, 4)   # w_bar, w
_CONNECTOR_X = (0, 3)       # x, x_bar


@dataclass(frozen=True)
class ReductionGraph:
    """Graph produced by :func:`build_reduction` plus its bookkeeping.

    ``roles`` maps each 0-based vertex id to a unique role string such
    as ``"v_bar(2,1)"`` (cycle vertex of variable 2, block 1),
    ``"x^3(1,2)"`` (third connector block of the variable-1/clause-2
    connector) or ``"C(2)"`` (clause vertex).  ``incidences`` lists the
    (variable, clause) pairs in id-layout order.
    """

    graph: WeightedGraph
    roles: tuple[str, ...]
    girth_param: int
    formula: MonotoneCnf
    incidences: tuple[tuple[int, int], ...]

    # ----- layout arithmetic -----

    @property
    def blocks(self) -> int:
        """Number of 6-vertex blocks per variable cycle (= clause count)."""
        return self.formula.num_clauses

    def _cycle_base(self, var: int) -> int:
        if not 1 <= var <= self.formula.num_vars:
            raise ValueError(f"variable {var} out of range")
        return (var - 1) * 6 * self.blocks

    def cycle_ids(self, var: int) -> tuple[int, ...]:
        """The ``6m`` vertex ids of a variable cycle, in printed order."""
        base = self._cycle_base(var)
        return tuple(range(base, base + 6 * self.blocks))

    def _connector_slot(self, var: int, clause: int) -> int:
        try:
            return self.incidences.index((var, clause))
        except ValueError:
            raise ValueError(
                f"variable {var} does not occur in clause {clause}") from None

    def connector_interior(self, var: int, clause: int) -> tuple[int, ...]:
        """The ``6g`` interior ids of one connector path, in printed order."""
        width = 6 * self.girth_param
        base = self.formula.num_vars * 6 * self.blocks \
            + self._connector_slot(var, clause) * width
        return tuple(range(base, base + width))

    def clause_vertex(self, clause: int) -> int:
        if not 1 <= clause <= self.formula.num_clauses:
            raise ValueError(f"clause {clause} out of range")
        return (self.formula.num_vars * 6 * self.blocks
                + len(self.incidences) * 6 * self.girth_param + clause - 1)

    # ----- residue patterns -----

    def _pattern(self, var: int, cycle_offsets: tuple[int, int],
                 connector_offsets: tuple[int, int]) -> frozenset[int]:
        ids: set[int] = set()
        base = self._cycle_base(var)
        for b in range(self.blocks):
            for off in cycle_offsets:
                ids.add(base + 6 * b + off)
        for clause in self.formula.clauses_of(var):
            cbase = self.connector_interior(var, clause)[0]
            for b in range(self.girth_param):
                for off in connector_offsets:
                    ids.add(cbase + 6 * b + off)
        return frozenset(ids)

    def true_pattern(self, var: int) -> frozenset[int]:
        """Vertices a true-valued variable contributes to an e.d.

        The ``v`` family: every third cycle vertex starting at the first
        ``v``, plus the matching residue on each connector.  The last
        connector vertex is adjacent to the clause vertex, so a true
        variable dominates its clauses.
        """
        return self._pattern(var, _CYCLE_TRUE, _CONNECTOR_TRUE)

    def false_pattern(self, var: int) -> frozenset[int]:
        """Vertices a false-valued variable contributes to an e.d.

        The ``w`` family.  Its connector residue stops one vertex short
        of the clause vertex, so a false variable does not dominate its
        clauses.
        """
        return self._pattern(var, _CYCLE_FALSE, _CONNECTOR_FALSE)

    def alt_false_pattern(self, var: int) -> frozenset[int]:
        """The third residue pattern; also acts as the value false.

        On the cycle it is the ``x`` family (the residue class that
        includes the closing edge's endpoint); on the connectors it
        coincides with the ``w`` family of :meth:`false_pattern`, so its
        clause-side effect is identical to false.  Minimum-weight
        solvers may legitimately return it because all three patterns
        have equal weight under unit weights.
        """
        return self._pattern(var, _CYCLE_X, _CONNECTOR_FALSE)

    def x_family(self, var: int) -> frozenset[int]:
        """All ``x``-named vertices of one variable (cycle + connectors)."""
        return self._pattern(var, _CYCLE_X, _CONNECTOR_X)


def build_reduction(formula: MonotoneCnf, girth_param: int,
                    clause_order: dict[int, tuple[int, ...]] | None = None,
                    ) -> ReductionGraph:
    """Build the hardness instance for ``formula``.

    ``girth_param`` (>= 3) sets the connector length: each connector has
    ``6 * girth_param`` interior vertices, so every cycle through clause
    vertices is long.  The variable cycles themselves have length
    ``6m``, which is the graph's girth when ``m`` is small.

    ``clause_order`` optionally overrides, per variable, the order in
    which that variable's clauses claim connector anchor blocks on its
    cycle (default: ascending clause index).  The construction is
    equivalence-preserving for any order; orders derived from a planar
    embedding keep the output planar.

    Output: unit weights, bipartite, maximum degree 3, and exactly
    ``6nm + 18gm + m`` vertices (n variables, m clauses, g girth
    parameter; each clause contributes three connectors).
    """
    if girth_param < 3:
        raise ValueError("girth parameter must be >= 3")
    n = formula.num_vars
    m = formula.num_clauses
    seg = 6 * m

    # anchor blocks: position of each clause in its variable's order
    anchor_block: dict[tuple[int, int], int] = {}
    for i in range(1, n + 1):
        incident = formula.clauses_of(i)
        if clause_order is not None and i in clause_order:
            order = tuple(clause_order[i])
            if sorted(order) != sorted(incident):
                raise ValueError(
                    f"clause order for variable {i} must be a permutation "
                    f"of its incident clauses {incident}")
        else:
            order = incident
        for pos, j in enumerate(order, start=1):
            anchor_block[(i, j)] = pos
    incidences = tuple((i, j) for i in range(1, n + 1)
                       for j in formula.clauses_of(i))
    for i, j in incidences:
        if (i, j) not in anchor_block:  # pragma: no cover - defensive
            raise ValueError(
                f"connector anchor undefined for variable {i}, clause {j}")

    edges: list[tuple[int, int]] = []
    roles: list[str] = []

    # variable cycles
    for i in range(1, n + 1):
        base = (i - 1) * seg
        for j in range(1, m + 1):
            for name in _CYCLE_NAMES:
                roles.append(f"{name}({i},{j})")
        for t in range(seg - 1):
            edges.append((base + t, base + t + 1))
        if m >= 1:
            edges.append((base + seg - 1, base))  # close the cycle

    # connector paths
    width = 6 * girth_param
    connector_base = n * seg
    for slot, (i, j) in enumerate(incidences):
        cbase = connector_base + slot * width
        for k in range(1, girth_param + 1):
            for name in _CONNECTOR_NAMES:
                roles.append(f"{name}^{k}({i},{j})")
        anchor = (i - 1) * seg + 6 * (anchor_block[(i, j)] - 1) + 4  # v_bar
        edges.append((anchor, cbase))
        for t in range(width - 1):
            edges.append((cbase + t, cbase + t + 1))

    # clause vertices
    clause_base = connector_base + len(incidences) * width
    for j in range(1, m + 1):
        roles.append(f"C({j})")
    for slot, (i, j) in enumerate(incidences):
        last = connector_base + slot * width + width - 1  # v_bar^g
        edges.append((last, clause_base + j - 1))

    total = clause_base + m
    graph = WeightedGraph.from_edges(total, edges)
    role_tuple = tuple(roles)
    if len(set(role_tuple)) != total:  # pragma: no cover - defensive
        raise AssertionError("role table is not a bijection")
    return ReductionGraph(graph=graph, roles=role_tuple,
                          girth_param=girth_param, formula=formula,
                          incidences=incidences)


# ===== ASSIGNMENT EXTRACTION =====


def extract_assignment(reduction: ReductionGraph, dominating,
                       validate: bool = True) -> tuple[bool, ...]:
    """Read the truth assignment off an efficient dominating set.

    A variable is true exactly when its full true pattern lies in the
    set; each of the two false-acting residue patterns reads as false.
    With ``validate`` (default) the set is first checked to be an
    efficient dominating set of the reduction graph (``ValueError``
    otherwise).  A validated set that matches no pattern on some
    variable raises :class:`ReductionIntegrityError`; that cannot happen
    for graphs built here unless construction or solver are buggy.
    """
    d = frozenset(int(v) for v in dominating)
    g = reduction.graph
    for v in d:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
    if validate and not is_efficient_dominating(g, d):
        raise ValueError("the given set is not an efficient dominating set")
    out: list[bool] = []
    for i in range(1, reduction.formula.num_vars + 1):
        if reduction.true_pattern(i) <= d:
            out.append(True)
        elif (reduction.false_pattern(i) <= d
              or reduction.alt_false_pattern(i) <= d):
            out.append(False)
        else:
            raise ReductionIntegrityError(
                f"variable {i}: the dominating set matches none of the "
                f"three residue patterns")
    return tuple(out)


def assignment_to_ed(reduction: ReductionGraph,
                     assignment) -> tuple[int, ...]:
    """Build the efficient dominating set encoding an assignment.

    ``assignment`` lists one boolean per variable and must satisfy every
    clause exactly once (``ValueError`` otherwise).  True variables
    contribute their true pattern, false variables their (primary) false
    pattern; the result is returned sorted and is verified to be an
    efficient dominating set.
    """
    values = tuple(bool(b) for b in assignment)
    if len(values) != reduction.formula.num_vars:
        raise ValueError(
            f"assignment has {len(values)} values for "
            f"{reduction.formula.num_vars} variables")
    for j, clause in enumerate(reduction.formula.clauses, start=1):
        hits = sum(1 for x in clause if values[x - 1])
        if hits != 1:
            raise ValueError(
                f"clause {j} has {hits} true variables; exactly one required")
    ids: set[int] = set()
    for i, val in enumerate(values, start=1):
        ids |= (reduction.true_pattern(i) if val
                else reduction.false_pattern(i))
    if not is_efficient_dominating(reduction.graph, ids):
        raise AssertionError(
            "constructed pattern union is not an efficient dominating set")
    return tuple(sorted(ids))
