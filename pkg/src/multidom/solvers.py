"""Greedy solvers for three domination variants, with per-iteration traces.

All three follow the same loop: while some vertex is not yet fully covered,
select the not-yet-chosen vertex with the highest score for the variant,
breaking ties toward the smallest vertex id.  The trace records enough state
(scores, newly covered vertices, token placements) to audit every step after
the fact without re-running the solver.

Variants and their scores:

* plain domination: score(v) = number of vertices in v's closed neighborhood
  not yet dominated by the chosen set;
* k-tuple domination (each vertex needs k chosen vertices in its closed
  neighborhood, so it requires k <= min_degree + 1): score(v) = number of
  vertices in v's closed neighborhood not yet fully covered;
* k-domination (each non-chosen vertex needs k chosen neighbors): score(v) =
  coverage deficiency of v itself (how many more chosen neighbors v would
  need) plus the number of v's neighbors not yet fully covered.

The k-domination solver additionally does token bookkeeping: selecting v
places one token on each not-yet-covered neighbor of v and enough tokens on
v itself to close its own deficiency.  Every vertex accumulates exactly k
tokens over the run, and the tokens placed in one iteration equal the
selection score, which is what the cost-ledger checks lean on.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Mapping

from .graph import Graph


class KOutOfRangeError(ValueError):
    """Raised when a coverage multiplicity k is invalid for the variant."""


class Mode(enum.Enum):
    """Problem variant identifiers, also used in CLI and report documents."""

    DOM = "dom"
    KTUPLE = "ktuple"
    KDOM = "kdom"

    def __str__(self) -> str:  # CSV/CLI rendering
        return self.value


@dataclass(frozen=True)
class IterationRecord:
    """One greedy step.

    index is 1-based.  score is the selection score of the chosen vertex,
    recomputed from scratch at the pre-selection state.  newly_covered lists
    the vertices whose coverage requirement became satisfied during this
    step, ascending.  tokens_placed is empty except in KDOM mode, where it
    maps vertex -> tokens received this step (the chosen vertex's own entry
    counts its deficiency top-up).  covered_after is the number of fully
    covered vertices once the step is applied.
    """

    index: int
    vertex: int
    score: int
    newly_covered: tuple[int, ...]
    tokens_placed: Mapping[int, int] = field(default_factory=dict)
    covered_after: int = 0

    def __post_init__(self) -> None:
        # Freeze the mapping so records stay hashable-by-content in spirit.
        object.__setattr__(self, "tokens_placed", MappingProxyType(dict(self.tokens_placed)))


@dataclass(frozen=True)
class Solution:
    """Result of one greedy run.

    chosen preserves selection order; iterations align with it one-to-one.
    graph_fingerprint ties the trace back to the exact input graph.  trivial
    marks the KDOM k > max_degree case, where every vertex must be chosen and
    the greedy loop degenerates to selecting all of them.
    """

    mode: Mode
    k: int
    chosen: tuple[int, ...]
    iterations: tuple[IterationRecord, ...]
    graph_fingerprint: tuple[int, int, str]
    trivial: bool = False

    @property
    def size(self) -> int:
        return len(self.chosen)


def greedy_dominating_set(g: Graph) -> Solution:
    """Greedy dominating set; approximation factor ln(max_degree + 1) + 1."""
    n = g.n
    covered: set[int] = set()
    chosen: list[int] = []
    chosen_set: set[int] = set()
    records: list[IterationRecord] = []
    while len(covered) < n:
        best, best_score = -1, 0
        for v in range(n):
            if v in chosen_set:
                continue
            s = _count_outside(g.closed_neighborhood(v), covered)
            if s > best_score:
                best, best_score = v, s
        newly = sorted(g.closed_neighborhood(best) - covered)
        covered.update(newly)
        chosen.append(best)
        chosen_set.add(best)
        records.append(
            IterationRecord(
                index=len(chosen),
                vertex=best,
                score=best_score,
                newly_covered=tuple(newly),
                covered_after=len(covered),
            )
        )
    return Solution(
        mode=Mode.DOM,
        k=1,
        chosen=tuple(chosen),
        iterations=tuple(records),
        graph_fingerprint=g.fingerprint(),
    )


def greedy_ktuple_dominating_set(g: Graph, k: int) -> Solution:
    """Greedy k-tuple dominating set: every vertex ends with at least k
    chosen vertices in its closed neighborhood.

    Requires 1 <= k <= min_degree + 1; beyond that no solution exists at all
    (some closed neighborhood is smaller than k), so the call is an error.
    Approximation factor ln(max_degree + 1) + 1.
    """
    if not 1 <= k <= g.min_degree() + 1:
        raise KOutOfRangeError(
            f"k-tuple domination needs 1 <= k <= min_degree + 1 = {g.min_degree() + 1}, got k={k}"
        )
    n = g.n
    hits = [0] * n  # chosen vertices in each closed neighborhood
    covered: set[int] = set()
    chosen: list[int] = []
    chosen_set: set[int] = set()
    records: list[IterationRecord] = []
    while len(covered) < n:
        best, best_score = -1, 0
        for v in range(n):
            if v in chosen_set:
                continue
            s = _count_outside(g.closed_neighborhood(v), covered)
            if s > best_score:
                best, best_score = v, s
        newly = []
        for u in sorted(g.closed_neighborhood(best)):
            hits[u] += 1
            if hits[u] == k:
                newly.append(u)
                covered.add(u)
        chosen.append(best)
        chosen_set.add(best)
        records.append(
            IterationRecord(
                index=len(chosen),
                vertex=best,
                score=best_score,
                newly_covered=tuple(newly),
                covered_after=len(covered),
            )
        )
    return Solution(
        mode=Mode.KTUPLE,
        k=k,
        chosen=tuple(chosen),
        iterations=tuple(records),
        graph_fingerprint=g.fingerprint(),
    )


def greedy_kdominating_set(g: Graph, k: int) -> Solution:
    """Greedy k-dominating set: every vertex outside the output has at least
    k chosen neighbors.

    Defined for every k >= 1.  When k > max_degree no vertex can be covered
    from outside, the optimum is trivially all of V, and the returned
    Solution carries trivial=True; the greedy loop still runs so the trace
    keeps its step-by-step guarantees.  Approximation factor
    ln(max_degree + k) + 1.
    """
    if k < 1:
        raise KOutOfRangeError(f"k-domination needs k >= 1, got k={k}")
    n = g.n
    trivial = k > g.max_degree()
    nbrs_chosen = [0] * n  # chosen neighbors of each vertex
    covered: set[int] = set()
    chosen: list[int] = []
    chosen_set: set[int] = set()
    records: list[IterationRecord] = []
    while len(covered) < n:
        best, best_score = -1, 0
        for v in range(n):
            if v in chosen_set:
                continue
            s = max(k - nbrs_chosen[v], 0) + _count_outside(g.neighbors(v), covered)
            if s > best_score:
                best, best_score = v, s
        tokens: dict[int, int] = {}
        deficiency = max(k - nbrs_chosen[best], 0)
        if deficiency:
            tokens[best] = deficiency
        newly = []
        if best not in covered:
            covered.add(best)  # membership satisfies the requirement
            newly.append(best)
        for u in g.adjacency[best]:
            nbrs_chosen[u] += 1
            if u not in covered:
                tokens[u] = 1
                if nbrs_chosen[u] >= k:
                    covered.add(u)
                    newly.append(u)
        chosen.append(best)
        chosen_set.add(best)
        records.append(
            IterationRecord(
                index=len(chosen),
                vertex=best,
                score=best_score,
                newly_covered=tuple(sorted(newly)),
                tokens_placed=tokens,
                covered_after=len(covered),
            )
        )
    return Solution(
        mode=Mode.KDOM,
        k=k,
        chosen=tuple(chosen),
        iterations=tuple(records),
        graph_fingerprint=g.fingerprint(),
        trivial=trivial,
    )


def solve(g: Graph, mode: Mode, k: int = 1) -> Solution:
    """Dispatch to the greedy solver for mode."""
    if mode is Mode.DOM:
        if k != 1:
            raise KOutOfRangeError(f"plain domination has no multiplicity, got k={k}")
        return greedy_dominating_set(g)
    if mode is Mode.KTUPLE:
        return greedy_ktuple_dominating_set(g, k)
    if mode is Mode.KDOM:
        return greedy_kdominating_set(g, k)
    raise ValueError(f"unknown mode {mode!r}")


def is_valid_solution(g: Graph, sol: Solution) -> bool:
    """Run the matching validator over the chosen set."""
    if sol.mode is Mode.DOM:
        return g.is_dominating(sol.chosen)
    if sol.mode is Mode.KTUPLE:
        return g.is_ktuple_dominating(sol.k, sol.chosen)
    return g.is_k_dominating(sol.k, sol.chosen)


def verify_greedy_optimality(g: Graph, sol: Solution) -> bool:
    """Replay the run and confirm every step took a maximal score with the
    smallest-id tie-break, and that the recorded scores match.

    This is the audit used by tests; it recomputes all candidate scores at
    each pre-selection state instead of trusting the trace.
    """
    n = g.n
    hits = [0] * n
    nbrs_chosen = [0] * n
    covered: set[int] = set()
    chosen_set: set[int] = set()
    for rec in sol.iterations:
        best, best_score = -1, 0
        for v in range(n):
            if v in chosen_set:
                continue
            if sol.mode is Mode.KDOM:
                s = max(sol.k - nbrs_chosen[v], 0) + _count_outside(
                    g.neighbors(v), covered
                )
            else:
                s = _count_outside(g.closed_neighborhood(v), covered)
            if s > best_score:
                best, best_score = v, s
        if rec.vertex != best or rec.score != best_score:
            return False
        # Apply the step.
        chosen_set.add(rec.vertex)
        if sol.mode is Mode.DOM:
            covered.update(g.closed_neighborhood(rec.vertex))
        elif sol.mode is Mode.KTUPLE:
            for u in g.closed_neighborhood(rec.vertex):
                hits[u] += 1
                if hits[u] >= sol.k:
                    covered.add(u)
        else:
            covered.add(rec.vertex)
            for u in g.adjacency[rec.vertex]:
                nbrs_chosen[u] += 1
                if nbrs_chosen[u] >= sol.k:
                    covered.add(u)
        if rec.covered_after != len(covered):
            return False
    return len(covered) == n and tuple(sorted(chosen_set)) == tuple(sorted(sol.chosen))


def _count_outside(candidates: frozenset[int], covered: set[int]) -> int:
    return sum(1 for u in candidates if u not in covered)
