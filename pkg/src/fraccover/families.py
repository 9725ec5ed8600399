"""Hereditary subgraph families: independent, clique-free and k-colourable sets.

A member of a family is identified by its vertex set (the induced subgraph on
it).  All three families are closed under taking subsets, which is what lets
the covering LPs work with inclusion-maximal members only.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Iterator, Optional, Sequence

from .graph import Graph, bits, has_clique, is_k_colorable, popcount, to_mask, _greedy_classes

VertexSet = tuple[int, ...]

DEFAULT_COLORABLE_LIMIT = 16


class FamilyLimitError(RuntimeError):
    """Enumeration refused because the graph is over the configured size limit."""


@dataclass(frozen=True)
class FamilyKind:
    name: str  # "independent", "cliquefree" or "colorable"
    k: int = 1

    def __post_init__(self):
        if self.name not in ("independent", "cliquefree", "colorable"):
            raise ValueError(f"unknown family {self.name!r}")
        if self.k < 1:
            raise ValueError("family parameter k must be at least 1")
        if self.name == "independent" and self.k != 1:
            raise ValueError("the independent family takes no k")

    @classmethod
    def independent(cls) -> "FamilyKind":
        return cls("independent", 1)

    @classmethod
    def clique_free(cls, k: int) -> "FamilyKind":
        return cls("cliquefree", k)

    @classmethod
    def colorable(cls, k: int) -> "FamilyKind":
        return cls("colorable", k)

    @property
    def is_independent(self) -> bool:
        # independent sets = 2-clique-free = 1-colourable
        return self.k == 1

    def normalized(self) -> "FamilyKind":
        return FamilyKind.independent() if self.is_independent else self

    def __str__(self):
        if self.name == "independent":
            return "I"
        return f"{'K' if self.name == 'cliquefree' else 'C'}{self.k}"


@dataclass(frozen=True)
class WeightedVertexSet:
    members: VertexSet
    weight: Fraction


def _mask_of(vertices: Iterable[int] | int) -> int:
    return vertices if isinstance(vertices, int) else to_mask(vertices)


def _member_mask(g: Graph, mask: int, kind: FamilyKind) -> bool:
    if kind.is_independent:
        return all(not g.adj[v] & mask for v in bits(mask))
    if kind.name == "cliquefree":
        return not has_clique(g.adj, mask, kind.k + 1)
    return is_k_colorable(g, kind.k, mask)


def is_member(g: Graph, vertices: Iterable[int] | int, kind: FamilyKind) -> bool:
    """Whether the subgraph induced by ``vertices`` belongs to the family."""
    mask = _mask_of(vertices)
    if mask & ~g.full_mask:
        raise ValueError("vertex set is not contained in the graph")
    return _member_mask(g, mask, kind)


def canonical_order(sets: Iterable[VertexSet]) -> list[VertexSet]:
    """Size descending, then lexicographic."""
    return sorted(sets, key=lambda s: (-len(s), s))


# ----------------------------------------------------------- enumeration


def _maximal_independent_masks(g: Graph) -> Iterator[int]:
    """Bron-Kerbosch with pivoting on the complement graph."""
    full = g.full_mask
    comp = [full & ~nb & ~(1 << v) for v, nb in enumerate(g.adj)]

    def bk(r: int, p: int, x: int):
        if not p and not x:
            yield r
            return
        # pivot maximising |P ∩ N(u)| in the complement
        pivot = max(bits(p | x), key=lambda u: popcount(p & comp[u]))
        for v in bits(p & ~comp[pivot]):
            yield from bk(r | 1 << v, p & comp[v], x & comp[v])
            p &= ~(1 << v)
            x |= 1 << v

    if g.n:
        yield from bk(0, full, 0)


def _maximal_hereditary_masks(g: Graph, kind: FamilyKind) -> Iterator[int]:
    """Include/exclude enumeration of maximal members of a hereditary family.

    Excluding vertex ``i`` is only explored when ``i`` could still end up
    blocked by vertices decided later; otherwise that branch has no maximal
    leaf.
    """
    n = g.n
    member = lambda m: _member_mask(g, m, kind)  # noqa: E731

    def rec(i: int, chosen: int) -> Iterator[int]:
        if i == n:
            if all(not member(chosen | 1 << v) for v in bits(g.full_mask & ~chosen)):
                yield chosen
            return
        with_i = chosen | 1 << i
        if member(with_i):
            yield from rec(i + 1, with_i)
            later = 0
            for j in range(i + 1, n):
                if member(chosen | 1 << j):
                    later |= 1 << j
            if not member(with_i | later):
                yield from rec(i + 1, chosen)
        else:
            yield from rec(i + 1, chosen)

    if n:
        yield from rec(0, 0)


def iter_maximal_masks(g: Graph, kind: FamilyKind, colorable_limit: int = DEFAULT_COLORABLE_LIMIT) -> Iterator[int]:
    """Maximal members as bitmasks, in search order (not canonical)."""
    if kind.is_independent:
        return _maximal_independent_masks(g)
    if kind.name == "colorable" and g.n > colorable_limit:
        raise FamilyLimitError(
            f"k-colourable enumeration is limited to {colorable_limit} vertices "
            f"(graph has {g.n}); use column generation or raise the limit"
        )
    return _maximal_hereditary_masks(g, kind)


def enumerate_maximal(g: Graph, kind: FamilyKind, colorable_limit: int = DEFAULT_COLORABLE_LIMIT) -> list[VertexSet]:
    """All inclusion-maximal members, in canonical order."""
    sets = []
    for mask in iter_maximal_masks(g, kind, colorable_limit):
        assert _member_mask(g, mask, kind)
        sets.append(tuple(bits(mask)))
    return canonical_order(sets)


def count_maximal(g: Graph, kind: FamilyKind, cap: int, colorable_limit: int = DEFAULT_COLORABLE_LIMIT) -> Optional[int]:
    """Number of maximal members, or None once the count exceeds ``cap``."""
    count = 0
    for _ in iter_maximal_masks(g, kind, colorable_limit):
        count += 1
        if count > cap:
            return None
    return count


# ------------------------------------------- max-weight clique-free search


class _CliqueFreeSearch:
    """Branch and bound for a maximum-weight (k+1)-clique-free vertex set.

    Weights are non-negative integers.  At each node the candidates are
    greedily partitioned into cliques; a clique can contribute at most its
    ``k`` heaviest vertices, which bounds what the node can still gain.
    Candidates are kept individually compatible with the chosen set, so a
    chosen set is always a member.
    """

    def __init__(self, g: Graph, k: int, weights: Sequence[int]):
        self.adj = g.adj
        self.n = g.n
        self.k = k
        self.w = list(weights)
        self.order = sorted(range(g.n), key=lambda v: (-self.w[v], v))
        self.best_weight = -1
        self.best_mask = 0
        self.stop_at: Optional[int] = None
        self.done = False

    def compatible(self, chosen: int, v: int) -> bool:
        """Can ``v`` join the (already clique-free) ``chosen`` set?"""
        return not has_clique(self.adj, self.adj[v] & chosen, self.k)

    def refilter(self, chosen: int, v: int, cand: int) -> int:
        """Candidates still compatible after adding ``v`` to ``chosen``."""
        adj = self.adj
        if self.k == 1:
            return cand & ~adj[v]
        keep = cand & ~adj[v]
        for u in bits(cand & adj[v]):
            if not has_clique(adj, adj[u] & adj[v] & chosen, self.k - 1):
                keep |= 1 << u
        return keep

    def _ordered_bounds(self, cand: int):
        verts, labels = _greedy_classes(self.order, cand, self.adj)
        w, k = self.w, self.k
        out_v: list[int] = []
        out_b: list[int] = []
        total = 0
        start = 0
        while start < len(verts):
            end = start
            while end < len(verts) and labels[end] == labels[start]:
                end += 1
            members = sorted(verts[start:end], key=lambda v: (w[v], -v))
            top: list[int] = []
            for v in members:
                # ascending weights: the k heaviest so far are the last k
                top.append(w[v])
                out_v.append(v)
                out_b.append(total + sum(top[-k:]))
            total += sum(top[-k:])
            start = end
        return out_v, out_b

    def expand(self, chosen: int, weight: int, cand: int):
        verts, bounds = self._ordered_bounds(cand)
        for i in range(len(verts) - 1, -1, -1):
            if weight + bounds[i] <= self.best_weight:
                return
            v = verts[i]
            cand &= ~(1 << v)
            new_chosen = chosen | 1 << v
            new_weight = weight + self.w[v]
            if new_weight > self.best_weight:
                self.best_weight, self.best_mask = new_weight, new_chosen
                if self.stop_at is not None and new_weight >= self.stop_at:
                    self.done = True
                    return
            rest = self.refilter(chosen, v, cand)
            if rest:
                self.expand(new_chosen, new_weight, rest)
                if self.done:
                    return

    def greedy(self, chosen: int, cand: int) -> tuple[int, int]:
        weight = sum(self.w[v] for v in bits(chosen))
        for v in self.order:
            if cand >> v & 1 and self.compatible(chosen, v):
                chosen |= 1 << v
                weight += self.w[v]
        return weight, chosen

    def candidates(self, chosen: int, allowed: int) -> int:
        positive = to_mask(v for v in range(self.n) if self.w[v] > 0)
        cand = 0
        for v in bits(allowed & positive & ~chosen):
            if self.compatible(chosen, v):
                cand |= 1 << v
        return cand

    def solve(self, chosen: int = 0, allowed: Optional[int] = None, target: Optional[int] = None) -> tuple[int, int]:
        """Best (weight, mask) over members ``T ⊇ chosen`` with ``T ⊆ chosen | allowed``.

        With ``target`` set, stop as soon as weight ``>= target`` is reached and
        only report success when it is (``best_weight`` is ``-1`` otherwise).
        """
        allowed = (1 << self.n) - 1 if allowed is None else allowed
        cand = self.candidates(chosen, allowed)
        base = sum(self.w[v] for v in bits(chosen))
        self.done = False
        if target is None:
            self.stop_at = None
            self.best_weight, self.best_mask = self.greedy(chosen, cand)
        else:
            self.stop_at = target
            self.best_weight, self.best_mask = target - 1, 0
            if base >= target:
                return base, chosen
        if cand and not self.done:
            self.expand(chosen, base, cand)
        if target is not None and self.best_weight < target:
            return -1, 0
        return self.best_weight, self.best_mask


def _extend_to_maximal(g: Graph, k: int, mask: int) -> int:
    for v in range(g.n):
        if not mask >> v & 1 and not has_clique(g.adj, g.adj[v] & mask, k):
            mask |= 1 << v
    return mask


def _max_weight_mask(g: Graph, k: int, weights: Sequence[int], canonical: bool) -> tuple[int, int]:
    search = _CliqueFreeSearch(g, k, weights)
    best, mask = search.solve()
    if not canonical:
        return best, _extend_to_maximal(g, k, mask)
    # Lexicographically largest indicator vector among optima: walk vertices
    # in id order and keep each one whenever an optimum still contains it.
    forced = 0
    witness = mask
    for v in range(g.n):
        if witness >> v & 1:
            forced |= 1 << v
            continue
        if not search.compatible(forced, v):
            continue
        later = g.full_mask & ~((1 << (v + 1)) - 1)
        trial = forced | 1 << v
        got, found = search.solve(chosen=trial, allowed=later, target=best)
        if got >= best:
            forced = trial
            witness = found
    return best, forced


def max_weight_member(
    g: Graph,
    kind: FamilyKind,
    weights: Sequence[Fraction | int],
    canonical: bool = True,
) -> WeightedVertexSet:
    """A member of maximum total weight (independent or clique-free families).

    With ``canonical`` (the default) ties go to the optimum containing the
    smallest vertex ids first, i.e. the lexicographically largest indicator
    vector; that optimum is always inclusion-maximal.  With
    ``canonical=False`` an optimum is returned straight from the search,
    greedily extended to a maximal member.
    """
    if kind.name == "colorable" and not kind.is_independent:
        raise ValueError("max-weight pricing is only supported for independent and clique-free families")
    if len(weights) != g.n:
        raise ValueError("need one weight per vertex")
    fracs = [Fraction(w) for w in weights]
    if any(w < 0 for w in fracs):
        raise ValueError("weights must be non-negative")
    if g.n == 0:
        return WeightedVertexSet((), Fraction(0))
    scale = lcm(*(w.denominator for w in fracs))
    ints = [int(w * scale) for w in fracs]
    best, mask = _max_weight_mask(g, kind.k, ints, canonical)
    members = tuple(bits(mask))
    return WeightedVertexSet(members, Fraction(sum(ints[v] for v in members), scale))


def beta_k(g: Graph, k: int) -> int:
    """Largest number of vertices inducing a (k+1)-clique-free subgraph."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if g.n == 0:
        return 0
    best, _ = _CliqueFreeSearch(g, k, [1] * g.n).solve()
    return best


def max_clique_free_set(g: Graph, k: int) -> VertexSet:
    """A witness set of size ``beta_k(g, k)``."""
    _, mask = _CliqueFreeSearch(g, k, [1] * g.n).solve()
    return tuple(bits(mask))
