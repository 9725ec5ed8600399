"""Closed-form upper bounds on clique-free cover numbers and their checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Any, Optional

from .cover import Strategy, cover_number
from .families import FamilyKind
from .graph import Graph, clique_number, find_homomorphism, is_k_colorable


class BoundRangeError(ValueError):
    """Bound requested outside the parameter range it holds for."""


@dataclass
class BoundReport:
    name: str
    params: dict[str, Any]
    bound: Optional[Fraction]
    computed: Optional[Fraction] = None
    satisfied: Optional[bool] = None
    applicable: bool = True
    note: str = ""
    details: dict[str, Any] = field(default_factory=dict)


def kneser_beta_lower_bound(a: int, b: int, k: int) -> int:
    """Lower bound on β_k(KG(a,b)) for 1 < k < ⌊a/b⌋.

    The larger of two explicit K_{k+1}-free vertex sets: a copy of
    KG((k+1)b-1, b), and all b-subsets meeting {1..k}.
    """
    if b < 1 or a < b:
        raise BoundRangeError("need 1 <= b <= a")
    if not 1 < k < a // b:
        raise BoundRangeError(f"need 1 < k < floor(a/b) = {a // b}, got k={k}")
    return max(comb((k + 1) * b - 1, b), comb(a, b) - comb(a - k, b))


def n_colorable_bound(n: int, k: int) -> Fraction:
    """Upper bound n/k on the K_k-cover number of an n-colourable graph."""
    if not 1 <= k <= n:
        raise BoundRangeError(f"need 1 <= k <= n, got n={n}, k={k}")
    return Fraction(n, k)


def ab_colorable_bound(a: int, b: int, k: int) -> Fraction:
    """Upper bound on the K_k-cover number of an a:b-colourable graph.

    k = 1 gives a/b; 1 < k < ⌊a/b⌋ gives C(a,b) over the Kneser β lower
    bound; k = ⌊a/b⌋ gives 1, since such a graph has clique number at most
    ⌊a/b⌋ and the cover number is 1 from the clique number on.
    """
    if not a >= b >= 1:
        raise BoundRangeError("need a >= b >= 1")
    top = a // b
    if not 1 <= k <= top:
        raise BoundRangeError(f"need 1 <= k <= floor(a/b) = {top}, got k={k}")
    if k == 1:
        return Fraction(a, b)
    if k == top:
        return Fraction(1)
    return Fraction(comb(a, b), kneser_beta_lower_bound(a, b, k))


def verify_hom_bound(g1: Graph, g2: Graph, k: int, strategy: Strategy | str = Strategy.AUTO) -> BoundReport:
    """Check K_k-cover(g1) <= K_k-cover(g2) when g1 maps homomorphically to g2."""
    if k < 1:
        raise BoundRangeError("k must be at least 1")
    params = {"k": k, "n1": g1.n, "n2": g2.n}
    hom = find_homomorphism(g1, g2)
    if hom is None:
        return BoundReport("hom-bound", params, None, applicable=False, note="no homomorphism found")
    kind = FamilyKind.clique_free(k)
    upper = cover_number(g2, kind, strategy).objective
    lower = cover_number(g1, kind, strategy).objective
    return BoundReport(
        "hom-bound",
        params,
        bound=upper,
        computed=lower,
        satisfied=lower <= upper,
        details={"homomorphism": list(hom)},
    )


def verify_n_colorable_bound(g: Graph, n: int, k: int, strategy: Strategy | str = Strategy.AUTO) -> BoundReport:
    """Compare the K_k-cover number with n/k, where g is n-colourable."""
    params = {"n": n, "k": k}
    if not is_k_colorable(g, n):
        return BoundReport("n-colorable", params, None, applicable=False, note=f"graph is not {n}-colourable")
    if k > clique_number(g):
        return BoundReport("n-colorable", params, None, applicable=False, note="k exceeds the clique number")
    bound = n_colorable_bound(n, k)
    value = cover_number(g, FamilyKind.clique_free(k), strategy).objective
    return BoundReport("n-colorable", params, bound, value, value <= bound)
