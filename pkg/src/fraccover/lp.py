"""Exact two-phase primal simplex for covering LPs.

Solves ``min sum(x)`` subject to ``sum(x_c : r in c) >= 1`` for every row ``r``
and ``x >= 0``, over :class:`fractions.Fraction` with Bland's rule, and
returns both the primal optimum and the dual vertex weights.
"""

from __future__ import annotations

import enum
import operator
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

Rational = Fraction

_OPS = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


def rational_op(a: Rational, b: Rational, op: str):
    """Exact arithmetic on two rationals; ``cmp`` returns -1, 0 or 1."""
    a, b = Fraction(a), Fraction(b)
    if op == "cmp":
        return (a > b) - (a < b)
    if op == "div" and b == 0:
        raise ZeroDivisionError("division by zero rational")
    try:
        return _OPS[op](a, b)
    except KeyError:
        raise ValueError(f"unknown rational operation {op!r}") from None


def format_rational(x: Rational) -> str:
    """Always ``p/q`` with q >= 1, fully reduced (``3`` prints as ``3/1``)."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Rational:
    return Fraction(text.strip())


class LpStatus(enum.Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"


@dataclass(frozen=True)
class CoveringLp:
    num_rows: int
    columns: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "columns", tuple(tuple(sorted(set(c))) for c in self.columns))
        for c in self.columns:
            if c and not (0 <= c[0] and c[-1] < self.num_rows):
                raise ValueError(f"column {c} has a row outside 0..{self.num_rows - 1}")


@dataclass
class LpSolution:
    status: LpStatus
    primal: list[Fraction] = field(default_factory=list)
    dual: list[Fraction] = field(default_factory=list)
    objective: Optional[Fraction] = None
    uncovered_row: Optional[int] = None
    pivots: int = 0


class CoveringSimplex:
    """Dense exact tableau that can take new columns after an optimal solve.

    Variable layout: surpluses ``0..m-1``, artificials ``m..2m-1``, then the
    structural columns in insertion order.  The artificial block starts as
    the identity, so it always holds the current basis inverse; that is what
    lets :meth:`add_column` price a new column into an optimal tableau and
    resume phase 2 from the same basis.
    """

    def __init__(self, num_rows: int, columns: Sequence[tuple[int, ...]] = ()):
        if num_rows < 1:
            raise ValueError("covering LP needs at least one row")
        m = num_rows
        self.m = m
        one, zero = Fraction(1), Fraction(0)
        self.rows = [[zero] * (2 * m) for _ in range(m)]
        for r in range(m):
            self.rows[r][r] = -one
            self.rows[r][m + r] = one
        self.rhs = [one] * m
        self.basis = [m + r for r in range(m)]
        self.columns: list[tuple[int, ...]] = []
        self.objective_row: Optional[list[Fraction]] = None
        self.pivots = 0
        for col in columns:
            self._append(tuple(sorted(set(col))))

    @property
    def nvars(self) -> int:
        return 2 * self.m + len(self.columns)

    def _append(self, col: tuple[int, ...]) -> list[Fraction]:
        """Append ``B^-1 a`` for a new column ``a``."""
        m = self.m
        for r in col:
            if not 0 <= r < m:
                raise ValueError(f"column {col} has a row outside 0..{m - 1}")
        entries = []
        for row in self.rows:
            v = sum((row[m + r] for r in col), Fraction(0))
            row.append(v)
            entries.append(v)
        self.columns.append(col)
        return entries

    def _pivot(self, r: int, j: int, objective: list[Fraction]):
        row = self.rows[r]
        p = row[j]
        if p != 1:
            inv = 1 / p
            self.rows[r] = row = [x * inv if x else x for x in row]
            self.rhs[r] *= inv
        nz = [(i, x) for i, x in enumerate(row) if x]
        for s in range(self.m):
            if s == r:
                continue
            f = self.rows[s][j]
            if f:
                target = self.rows[s]
                for i, x in nz:
                    target[i] -= f * x
                self.rhs[s] -= f * self.rhs[r]
        f = objective[j]
        if f:
            for i, x in nz:
                objective[i] -= f * x
            objective[-1] -= f * self.rhs[r]
        self.basis[r] = j
        self.pivots += 1

    def _reduced_costs(self, costs: list[Fraction]) -> list[Fraction]:
        """Objective row ``c - c_B B^-1 A`` with ``-c_B B^-1 b`` appended."""
        obj = list(costs) + [Fraction(0)]
        for r, b in enumerate(self.basis):
            cb = costs[b]
            if cb:
                for i, x in enumerate(self.rows[r]):
                    if x:
                        obj[i] -= cb * x
                obj[-1] -= cb * self.rhs[r]
        return obj

    def _run(self, obj: list[Fraction], candidates: list[int]):
        """Bland's rule: lowest-ranked improving variable, lowest basic index on ties."""
        while True:
            entering = next((j for j in candidates if obj[j] < 0), None)
            if entering is None:
                return
            leave, best = None, None
            for r in range(self.m):
                a = self.rows[r][entering]
                if a > 0:
                    ratio = self.rhs[r] / a
                    if (
                        best is None
                        or ratio < best
                        or (ratio == best and self.basis[r] < self.basis[leave])
                    ):
                        leave, best = r, ratio
            if leave is None:
                # covering LPs are bounded below by zero
                raise ArithmeticError("unbounded covering LP")
            self._pivot(leave, entering, obj)

    def _candidates(self) -> list[int]:
        m = self.m
        return list(range(2 * m, self.nvars)) + list(range(m))

    def _phase1(self):
        m = self.m
        zero, one = Fraction(0), Fraction(1)
        costs = [zero] * m + [one] * m + [zero] * len(self.columns)
        obj = self._reduced_costs(costs)
        self._run(obj, self._candidates())
        if obj[-1] != 0:
            raise ArithmeticError("phase 1 ended with positive infeasibility on a covered LP")
        for r in range(m):
            if m <= self.basis[r] < 2 * m:
                # artificial left at zero level; rows of [A | -I] are never all zero
                j = next(j for j in self._candidates() if self.rows[r][j])
                self._pivot(r, j, obj)

    def _costs(self) -> list[Fraction]:
        zero, one = Fraction(0), Fraction(1)
        return [zero] * (2 * self.m) + [one] * len(self.columns)

    def solve(self) -> LpSolution:
        m = self.m
        covered = set()
        for c in self.columns:
            covered.update(c)
        for r in range(m):
            if r not in covered:
                return LpSolution(LpStatus.INFEASIBLE, uncovered_row=r)
        if self.objective_row is None:
            self._phase1()
            self.objective_row = self._reduced_costs(self._costs())
        self._run(self.objective_row, self._candidates())
        return self._solution()

    def add_column(self, col: Sequence[int]) -> None:
        """Add a column; an optimal tableau stays primal feasible and is warm-started."""
        col = tuple(sorted(set(col)))
        self._append(col)
        obj = self.objective_row
        if obj is not None:
            # reduced cost 1 - y.a, with y the duals read off the surplus block
            dual_load = sum((obj[r] for r in col), Fraction(0))
            obj.insert(len(obj) - 1, 1 - dual_load)

    def _solution(self) -> LpSolution:
        m = self.m
        obj = self.objective_row
        zero = Fraction(0)
        primal = [zero] * len(self.columns)
        for r, b in enumerate(self.basis):
            if b >= 2 * m:
                primal[b - 2 * m] = self.rhs[r]
        # reduced cost of surplus r is the dual price of row r
        dual = [obj[r] for r in range(m)]
        objective = -obj[-1]
        assert sum(primal, zero) == objective
        return LpSolution(LpStatus.OPTIMAL, primal, dual, objective, pivots=self.pivots)


def solve_covering_lp(lp: CoveringLp) -> LpSolution:
    """Exact optimum of a covering LP with primal and dual certificates."""
    if lp.num_rows < 1:
        raise ValueError("covering LP needs at least one row")
    return CoveringSimplex(lp.num_rows, lp.columns).solve()


def check_certificates(lp: CoveringLp, sol: LpSolution) -> list[str]:
    """Problems found by direct substitution; empty when the optimum is certified."""
    problems = []
    m = lp.num_rows
    cover = [Fraction(0)] * m
    for x, col in zip(sol.primal, lp.columns):
        if x < 0:
            problems.append(f"negative primal weight on column {col}")
        if x > 1:
            problems.append(f"primal weight {x} above 1 on column {col}")
        for r in col:
            cover[r] += x
    problems += [f"row {r} covered only {c}" for r, c in enumerate(cover) if c < 1]
    problems += [f"negative dual on row {r}" for r, y in enumerate(sol.dual) if y < 0]
    for col in lp.columns:
        load = sum((sol.dual[r] for r in col), Fraction(0))
        if load > 1:
            problems.append(f"dual load {load} > 1 on column {col}")
    if sum(sol.primal, Fraction(0)) != sol.objective:
        problems.append("primal objective mismatch")
    if sum(sol.dual, Fraction(0)) != sol.objective:
        problems.append("strong duality fails")
    return problems
