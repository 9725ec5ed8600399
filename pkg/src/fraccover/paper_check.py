"""One-shot reproduction of every published value and invariant.

Each row computes something from scratch and compares it exactly with the
expected value.  Rows marked ``long`` are skipped in fast mode.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterator

from .bounds import kneser_beta_lower_bound, verify_hom_bound
from .cover import Monotonicity, Strategy, cc_cover_sequence, cover_number, kk_cover_sequence, vt_cover_number
from .families import FamilyKind, beta_k, is_member
from .graph import (
    Graph,
    bits,
    build_graph,
    chromatic_number,
    clique_number,
    complete,
    conormal_product,
    cycle,
    find_homomorphism,
    kneser,
    petersen,
)
from .lp import CoveringSimplex, format_rational

# (25/4, 5, 75/14, 5, 5): k times the K_k-cover number of C5*C5, k = 1..5
C5C5_SCALED = [Fraction(25, 4), Fraction(5), Fraction(75, 14), Fraction(5), Fraction(5)]
C5C5_BETAS = [4, 10, 14, 20, 25]


@dataclass
class Row:
    key: str
    title: str
    expected: str
    computed: str
    passed: bool
    seconds: float = 0.0
    long: bool = False


def _fmt(values) -> str:
    return ", ".join(format_rational(v) if isinstance(v, Fraction) else str(v) for v in values)


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return build_graph(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def random_graphs(count: int = 100, max_n: int = 9, seed: int = 20231) -> list[Graph]:
    rng = random.Random(seed)
    return [random_graph(rng, rng.randint(1, max_n), rng.choice([0.2, 0.35, 0.5, 0.65, 0.8])) for _ in range(count)]


def full_family_cover(g: Graph, kind: FamilyKind) -> Fraction:
    """Cover number over every non-empty member, found by scanning all subsets."""
    columns = [tuple(bits(mask)) for mask in range(1, 1 << g.n) if is_member(g, mask, kind)]
    return CoveringSimplex(g.n, columns).solve().objective


def small_graphs(max_n: int = 6) -> list[Graph]:
    """All graphs on 1..max_n vertices up to isomorphism (max_n <= 7)."""
    from networkx.generators.atlas import graph_atlas_g

    out = []
    for h in graph_atlas_g():
        if 1 <= h.number_of_nodes() <= max_n:
            out.append(build_graph(h.number_of_nodes(), list(h.edges())))
    return out


# ------------------------------------------------------------------ rows


def row_c5c5_sequence() -> Row:
    g = conormal_product(cycle(5), cycle(5))
    report = kk_cover_sequence(g, Strategy.COLUMN_GENERATION)
    ok = report.scaled == C5C5_SCALED and report.classification is Monotonicity.NON_MONOTONIC
    return Row(
        "c5c5-sequence",
        "k*K_k-cover(C5*C5), k=1..5",
        f"{_fmt(C5C5_SCALED)}; NonMonotonic",
        f"{_fmt(report.scaled)}; {report.classification.value}",
        ok,
        long=True,
    )


def row_c5c5_betas() -> Row:
    g = conormal_product(cycle(5), cycle(5))
    betas = [beta_k(g, k) for k in range(1, 6)]
    vt = [vt_cover_number(g, k) * k for k in range(1, 6)]
    ok = betas == C5C5_BETAS and vt == C5C5_SCALED
    return Row("c5c5-beta", "beta_k(C5*C5) and k*|V|/beta_k", f"{_fmt(C5C5_BETAS)} -> {_fmt(C5C5_SCALED)}", f"{_fmt(betas)} -> {_fmt(vt)}", ok)


def row_kneser_beta_small() -> Row:
    got = beta_k(kneser(6, 2), 2)
    return Row("kg62-beta2", "beta_2(KG(6,2))", "10", str(got), got == 10)


def row_kneser_beta_large() -> Row:
    got = beta_k(kneser(10, 2), 2)
    return Row("kg102-beta2", "beta_2(KG(10,2))", "17", str(got), got == 17, long=True)


def row_complete_graphs() -> Row:
    bad = []
    for n in range(1, 9):
        g = complete(n)
        for k in range(1, n + 1):
            lp = cover_number(g, FamilyKind.clique_free(k)).objective
            vt = vt_cover_number(g, k)
            if not lp == vt == Fraction(n, k):
                bad.append(f"K{n},k={k}: lp {lp}, vt {vt}")
    return Row("complete", "K_k-cover(K_n) = n/k, 1<=k<=n<=8 (LP and |V|/beta_k)", "all equal", "; ".join(bad) or "all equal", not bad)


def row_fractional_chromatic() -> Row:
    cases = [("C5", cycle(5), Fraction(5, 2)), ("KG(5,2)", kneser(5, 2), Fraction(5, 2)), ("KG(6,2)", kneser(6, 2), Fraction(3))]
    got, ok = [], True
    for name, g, expected in cases:
        lp = cover_number(g, FamilyKind.independent()).objective
        closed = Fraction(g.n, beta_k(g, 1))
        got.append(f"{name}={format_rational(lp)}")
        ok &= lp == closed == expected
    return Row("chi-f", "chi_f of C5, KG(5,2), KG(6,2) (LP and |V|/beta_1)", "5/2, 5/2, 3/1", ", ".join(got), ok)


def row_kneser_chromatic() -> Row:
    pairs = [(5, 2), (6, 2), (7, 3)]
    expected = [a - 2 * b + 2 for a, b in pairs]
    got = [chromatic_number(kneser(a, b)) for a, b in pairs]
    return Row("kneser-chi", "chi(KG(a,b)) = a-2b+2 for (5,2),(6,2),(7,3)", _fmt(expected), _fmt(got), got == expected)


def row_lemma_bound() -> Row:
    lemma = [kneser_beta_lower_bound(6, 2, 2), kneser_beta_lower_bound(10, 2, 2)]
    betas = [beta_k(kneser(6, 2), 2), beta_k(kneser(10, 2), 2)]
    ok = lemma == [10, 17] == betas
    return Row("lemma-bound", "Kneser beta lower bound at (6,2,2),(10,2,2) vs beta_2", "10, 17 (both)", f"{_fmt(lemma)} vs {_fmt(betas)}", ok, long=True)


def _property_failures(g: Graph) -> Iterator[str]:
    omega = clique_number(g)
    chi = chromatic_number(g)
    kk = kk_cover_sequence(g, Strategy.FULL_ENUMERATION)
    cc = cc_cover_sequence(g)
    covers = kk.covers
    if any(a < b for a, b in zip(covers, covers[1:])) or covers[-1] != 1:
        yield "K_k covers not non-increasing to 1"
    for k in range(1, omega + 1):
        if kk.covers[k - 1] > cc.covers[k - 1]:
            yield f"K_{k} cover exceeds C_{k} cover"
    scaled = cc.scaled
    if any(a > b for a, b in zip(scaled, scaled[1:])) or scaled[-1] != chi:
        yield "k*C_k covers not non-decreasing from chi_f to chi"
    indep = cover_number(g, FamilyKind.independent()).objective
    if not indep == kk.covers[0] == cc.covers[0]:
        yield "I, K_1, C_1 covers differ"
    for sol in kk.solutions + cc.solutions:
        if sol.problems(g):
            yield f"certificate problems for {sol.kind}: {sol.problems(g)}"
    for k in range(1, omega + 1):
        full = kk.solutions[k - 1].objective
        colgen = cover_number(g, FamilyKind.clique_free(k), Strategy.COLUMN_GENERATION).objective
        if full != colgen:
            yield f"enumeration {full} != column generation {colgen} at k={k}"


def row_property_suite(count: int = 100) -> Row:
    failures = []
    for i, g in enumerate(random_graphs(count)):
        failures += [f"graph {i}: {msg}" for msg in _property_failures(g)]
    return Row("properties", f"invariant suite on {count} random graphs, n<=9", "no failures", "; ".join(failures[:3]) or "no failures", not failures)


def row_hom_bound() -> Row:
    pairs = [("C5->KG(5,2)", cycle(5), kneser(5, 2)), ("C4->K2", cycle(4), complete(2)), ("Petersen->K3", petersen(), complete(3))]
    problems = []
    for name, g1, g2 in pairs:
        if find_homomorphism(g1, g2) is None:
            problems.append(f"{name}: no homomorphism")
            continue
        for k in range(1, clique_number(g1) + 1):
            rep = verify_hom_bound(g1, g2, k)
            if not rep.satisfied:
                problems.append(f"{name} k={k}: {rep.computed} > {rep.bound}")
    return Row("hom-bound", "K_k-cover(G1) <= K_k-cover(G2) along homomorphisms", "all satisfied", "; ".join(problems) or "all satisfied", not problems)


def kinds_for(g: Graph) -> list[FamilyKind]:
    kinds = [FamilyKind.independent()]
    kinds += [FamilyKind.clique_free(k) for k in range(1, clique_number(g) + 1)]
    kinds += [FamilyKind.colorable(k) for k in range(1, chromatic_number(g) + 1)]
    return kinds


def row_oracle_equivalence() -> Row:
    bad = []
    graphs = small_graphs(6)
    for g in graphs:
        for kind in kinds_for(g):
            got = cover_number(g, kind).objective
            want = full_family_cover(g, kind)
            if got != want:
                bad.append(f"{g} {kind}: {got} != {want}")
    return Row("oracle", f"maximal-member LP = full-family LP on all {len(graphs)} graphs with n<=6", "all equal", "; ".join(bad[:3]) or "all equal", not bad)


ROWS: list[Callable[[], Row]] = [
    row_c5c5_sequence,
    row_c5c5_betas,
    row_kneser_beta_small,
    row_kneser_beta_large,
    row_complete_graphs,
    row_fractional_chromatic,
    row_kneser_chromatic,
    row_lemma_bound,
    row_property_suite,
    row_hom_bound,
    row_oracle_equivalence,
]

LONG_ROWS = {row_c5c5_sequence, row_kneser_beta_large, row_lemma_bound}


def run_paper_check(fast: bool = False) -> list[Row]:
    rows = []
    for fn in ROWS:
        if fast and fn in LONG_ROWS:
            continue
        start = time.perf_counter()
        row = fn()
        row.seconds = time.perf_counter() - start
        rows.append(row)
    return rows
