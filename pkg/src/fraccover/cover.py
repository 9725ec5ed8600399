"""Fractional F-cover numbers via exact covering LPs.

Two strategies produce the same optimum:

* full enumeration builds the LP over every inclusion-maximal family member;
* column generation starts from a greedy cover and keeps adding the
  heaviest member under the current dual prices until none weighs more
  than one.

Restricting to maximal members is safe because the families are hereditary:
weight on a member can be moved to any maximal member containing it without
uncovering a vertex or changing the total.
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Optional

from .families import (
    DEFAULT_COLORABLE_LIMIT,
    FamilyKind,
    VertexSet,
    _CliqueFreeSearch,
    _extend_to_maximal,
    beta_k,
    count_maximal,
    enumerate_maximal,
    is_member,
)
from .graph import Graph, bits, chromatic_number, clique_number, is_vertex_transitive
from .lp import CoveringLp, CoveringSimplex, LpSolution, LpStatus, solve_covering_lp

log = logging.getLogger(__name__)

# auto strategy: enumerate when at most this many maximal members exist
ENUMERATION_CAP = 2000
# clique-free enumeration (k >= 2) is only attempted up to this many vertices
CLIQUE_FREE_ENUMERATION_MAX_N = 16


class Strategy(str, enum.Enum):
    AUTO = "auto"
    FULL_ENUMERATION = "enumerate"
    COLUMN_GENERATION = "colgen"
    TRIVIAL = "trivial"


class UnsupportedStrategy(ValueError):
    pass


class Monotonicity(str, enum.Enum):
    CONSTANT = "Constant"
    NON_DECREASING = "NonDecreasing"
    NON_INCREASING = "NonIncreasing"
    NON_MONOTONIC = "NonMonotonic"


@dataclass
class CoverSolution:
    kind: FamilyKind
    members: list[tuple[VertexSet, Fraction]]
    objective: Fraction
    dual: list[Fraction]
    strategy: Strategy
    columns: int = 0
    iterations: int = 0

    def coverage(self, n: int) -> list[Fraction]:
        cover = [Fraction(0)] * n
        for members, w in self.members:
            for v in members:
                cover[v] += w
        return cover

    def problems(self, g: Graph) -> list[str]:
        """Violated invariants (empty list when the solution checks out)."""
        out = []
        for v, c in enumerate(self.coverage(g.n)):
            if c < 1:
                out.append(f"vertex {v} covered {c} < 1")
        for members, w in self.members:
            if not 0 <= w <= 1:
                out.append(f"weight {w} outside [0,1]")
            if not is_member(g, members, self.kind):
                out.append(f"{members} is not a {self.kind} member")
        if sum((w for _, w in self.members), Fraction(0)) != self.objective:
            out.append("objective differs from total weight")
        if sum(self.dual, Fraction(0)) != self.objective:
            out.append("dual value differs from objective")
        if any(y < 0 for y in self.dual):
            out.append("negative dual weight")
        return out


@dataclass
class SequenceReport:
    family: str  # "K" or "C"
    entries: list[tuple[int, Fraction, Fraction]]
    classification: Monotonicity
    solutions: list[CoverSolution] = field(default_factory=list, repr=False)

    @property
    def covers(self) -> list[Fraction]:
        return [c for _, c, _ in self.entries]

    @property
    def scaled(self) -> list[Fraction]:
        return [kc for _, _, kc in self.entries]


def classify(values: list[Fraction]) -> Monotonicity:
    pairs = list(zip(values, values[1:]))
    if all(a == b for a, b in pairs):
        return Monotonicity.CONSTANT
    if all(a <= b for a, b in pairs):
        return Monotonicity.NON_DECREASING
    if all(a >= b for a, b in pairs):
        return Monotonicity.NON_INCREASING
    return Monotonicity.NON_MONOTONIC


def _from_lp(kind: FamilyKind, columns: list[VertexSet], sol: LpSolution, strategy: Strategy, iterations: int = 0) -> CoverSolution:
    if sol.status is not LpStatus.OPTIMAL:
        raise ArithmeticError(f"covering LP infeasible at vertex {sol.uncovered_row}")
    members = [(c, x) for c, x in zip(columns, sol.primal) if x]
    members.sort(key=lambda cw: (-len(cw[0]), cw[0]))
    return CoverSolution(kind, members, sol.objective, sol.dual, strategy, len(columns), iterations)


def _is_trivial(g: Graph, kind: FamilyKind) -> bool:
    """Is the whole graph a member (so the cover number is 1)?"""
    if kind.is_independent:
        return g.num_edges == 0
    if kind.name == "cliquefree":
        return kind.k >= clique_number(g)
    return kind.k >= chromatic_number(g)


def _resolve_strategy(g: Graph, kind: FamilyKind, strategy: Strategy, colorable_limit: int) -> Strategy:
    if strategy is not Strategy.AUTO:
        return strategy
    if kind.name == "colorable" and not kind.is_independent:
        return Strategy.FULL_ENUMERATION
    if not kind.is_independent and g.n > CLIQUE_FREE_ENUMERATION_MAX_N:
        return Strategy.COLUMN_GENERATION
    count = count_maximal(g, kind, ENUMERATION_CAP, colorable_limit)
    return Strategy.FULL_ENUMERATION if count is not None else Strategy.COLUMN_GENERATION


def _column_generation(g: Graph, kind: FamilyKind) -> CoverSolution:
    k = kind.k
    n = g.n
    columns: list[int] = []
    seen: set[int] = set()

    uncovered = g.full_mask
    while uncovered:
        search = _CliqueFreeSearch(g, k, [1 if uncovered >> v & 1 else 0 for v in range(n)])
        _, mask = search.solve()
        mask = _extend_to_maximal(g, k, mask)
        columns.append(mask)
        seen.add(mask)
        uncovered &= ~mask

    master = CoveringSimplex(n, [tuple(bits(c)) for c in columns])
    iterations = 0
    while True:
        iterations += 1
        sol = master.solve()
        scale = lcm(*(y.denominator for y in sol.dual))
        prices = [int(y * scale) for y in sol.dual]
        # any member heavier than one unit improves the master LP; stop at the first
        weight, mask = _CliqueFreeSearch(g, k, prices).solve(target=scale + 1)
        log.debug("colgen iteration %d: objective %s, %d columns", iterations, sol.objective, len(columns))
        if weight <= scale:
            return _from_lp(kind, list(master.columns), sol, Strategy.COLUMN_GENERATION, iterations)
        mask = _extend_to_maximal(g, k, mask)
        if mask in seen:
            raise ArithmeticError("pricing returned an existing column")
        seen.add(mask)
        columns.append(mask)
        master.add_column(tuple(bits(mask)))


def cover_number(
    g: Graph,
    kind: FamilyKind,
    strategy: Strategy | str = Strategy.AUTO,
    colorable_limit: int = DEFAULT_COLORABLE_LIMIT,
) -> CoverSolution:
    """Exact fractional cover number of ``g`` by members of ``kind``."""
    strategy = Strategy(strategy)
    if strategy is Strategy.COLUMN_GENERATION and kind.name == "colorable" and not kind.is_independent:
        raise UnsupportedStrategy("k-colourable covers need full enumeration (no pricing oracle)")
    if g.n == 0:
        return CoverSolution(kind, [], Fraction(0), [], Strategy.TRIVIAL)
    if _is_trivial(g, kind):
        everything = tuple(range(g.n))
        sol = solve_covering_lp(CoveringLp(g.n, (everything,)))
        return _from_lp(kind, [everything], sol, Strategy.TRIVIAL)

    chosen = _resolve_strategy(g, kind, strategy, colorable_limit)
    if chosen is Strategy.COLUMN_GENERATION:
        sol = _column_generation(g, kind.normalized())
        sol.kind = kind
        return sol
    columns = enumerate_maximal(g, kind, colorable_limit)
    sol = solve_covering_lp(CoveringLp(g.n, columns))
    return _from_lp(kind, columns, sol, Strategy.FULL_ENUMERATION)


def fractional_chromatic_number(g: Graph, strategy: Strategy | str = Strategy.AUTO) -> Fraction:
    if g.n == 0:
        raise ValueError("fractional chromatic number needs at least one vertex")
    return cover_number(g, FamilyKind.independent(), strategy).objective


def dual_clique_value(solution: CoverSolution) -> Fraction:
    """Value of the optimal fractional clique (the LP dual)."""
    return sum(solution.dual, Fraction(0))


def kk_cover_sequence(g: Graph, strategy: Strategy | str = Strategy.AUTO) -> SequenceReport:
    """Clique-free covers for k = 1..ω(G), with the monotonicity of k·cover."""
    if g.n == 0:
        raise ValueError("cover sequence needs at least one vertex")
    omega = clique_number(g)
    entries, sols = [], []
    for k in range(1, omega + 1):
        sol = cover_number(g, FamilyKind.clique_free(k), strategy)
        sols.append(sol)
        entries.append((k, sol.objective, k * sol.objective))
    return SequenceReport("K", entries, classify([e[2] for e in entries]), sols)


def cc_cover_sequence(g: Graph, colorable_limit: int = DEFAULT_COLORABLE_LIMIT) -> SequenceReport:
    """k-colourable covers for k = 1..χ(G), with the monotonicity of k·cover."""
    if g.n == 0:
        raise ValueError("cover sequence needs at least one vertex")
    if g.n > colorable_limit:
        raise ValueError(f"k-colourable covers are limited to {colorable_limit} vertices")
    chi = chromatic_number(g)
    entries, sols = [], []
    for k in range(1, chi + 1):
        sol = cover_number(g, FamilyKind.colorable(k), Strategy.FULL_ENUMERATION, colorable_limit)
        sols.append(sol)
        entries.append((k, sol.objective, k * sol.objective))
    return SequenceReport("C", entries, classify([e[2] for e in entries]), sols)


class NotVertexTransitive(ValueError):
    pass


def vt_cover_number(g: Graph, k: int, assert_vt: bool = False) -> Fraction:
    """Closed form |V| / β_k for vertex-transitive graphs."""
    if not assert_vt and not is_vertex_transitive(g):
        raise NotVertexTransitive("graph is not vertex-transitive")
    return Fraction(g.n, beta_k(g, k))
