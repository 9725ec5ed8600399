"""Simple undirected graphs on vertices ``0..n-1`` with bitmask adjacency.

Every graph is immutable.  Vertex subsets are passed around as Python ints
used as bitmasks (bit ``v`` set means vertex ``v`` is in the set), which keeps
the exact combinatorial searches in this package reasonably fast.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional, Sequence


class GraphError(ValueError):
    """Raised for malformed graph input."""


def bits(mask: int) -> list[int]:
    """Return the members of a bitmask in increasing order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class Graph:
    """Simple graph with ``adj[v]`` the neighbour bitmask of ``v``."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or len(self.adj) != self.n:
            raise GraphError("adjacency length must equal the vertex count")
        full = self.full_mask
        for v, nb in enumerate(self.adj):
            if nb >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            if nb & ~full:
                raise GraphError(f"vertex {v} has a neighbour out of range")
            for u in bits(nb):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"adjacency not symmetric for {v},{u}")

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def num_edges(self) -> int:
        return sum(popcount(nb) for nb in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u]) if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def degrees(self) -> list[int]:
        return [popcount(nb) for nb in self.adj]

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph, relabelled ``0..|S|-1`` in increasing vertex order."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        return build_graph(
            len(keep),
            [(index[u], index[v]) for u, v in self.edges() if u in index and v in index],
        )

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.num_edges})"


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build the simple graph on ``n`` vertices with the given edges.

    Duplicate edges (in either orientation) collapse; self-loops and
    out-of-range endpoints raise :class:`GraphError`.
    """
    if n < 0:
        raise GraphError("vertex count must be non-negative")
    adj = [0] * n
    for edge in edges:
        u, v = edge
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def empty_graph(n: int) -> Graph:
    return build_graph(n, [])


def complete(n: int) -> Graph:
    return build_graph(n, combinations(range(n), 2))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs at least 3 vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.n, tuple(full & ~nb & ~(1 << v) for v, nb in enumerate(g.adj)))


def kneser_vertices(a: int, b: int) -> list[tuple[int, ...]]:
    """The b-subsets of ``{1..a}`` in lexicographic order (vertex ids of KG(a,b))."""
    return list(combinations(range(1, a + 1), b))


def kneser(a: int, b: int) -> Graph:
    """Kneser graph KG(a,b): b-subsets of [a], adjacent when disjoint."""
    if a < 1 or b < 1:
        raise GraphError("kneser needs a >= 1 and b >= 1")
    if b > a:
        raise GraphError(f"kneser needs b <= a, got a={a}, b={b}")
    subsets = [to_mask(s) for s in kneser_vertices(a, b)]
    edges = [
        (i, j)
        for i, j in combinations(range(len(subsets)), 2)
        if not subsets[i] & subsets[j]
    ]
    return build_graph(len(subsets), edges)


def petersen() -> Graph:
    return kneser(5, 2)


def conormal_product(g: Graph, h: Graph) -> Graph:
    """Co-normal (disjunctive) product.

    Vertex ``(u, v)`` gets id ``u * h.n + v``; two vertices are adjacent when
    their first coordinates are adjacent in ``g`` or their second coordinates
    are adjacent in ``h``.
    """
    m = h.n
    adj = []
    for u in range(g.n):
        # row-block of every u' adjacent to u
        rows = 0
        for u2 in bits(g.adj[u]):
            rows |= ((1 << m) - 1) << (u2 * m)
        for v in range(m):
            cols = 0
            hv = h.adj[v]
            for u2 in range(g.n):
                cols |= hv << (u2 * m)
            adj.append((rows | cols) & ~(1 << (u * m + v)))
    return Graph(g.n * m, tuple(adj))


# ---------------------------------------------------------------- cliques


def _greedy_classes(order: Sequence[int], cand: int, compat: Sequence[int]):
    """Greedily split ``cand`` into classes of mutually compatible vertices.

    Vertices are scanned in ``order``.  Returns ``(vertices, class_index)``
    listed class by class.
    """
    verts: list[int] = []
    labels: list[int] = []
    remaining = cand
    label = 0
    while remaining:
        label += 1
        room = remaining
        for v in order:
            if room >> v & 1:
                verts.append(v)
                labels.append(label)
                remaining &= ~(1 << v)
                room &= compat[v]
                room &= ~(1 << v)
                if not room:
                    break
    return verts, labels


def has_clique(adj: Sequence[int], mask: int, t: int) -> bool:
    """True when the vertices in ``mask`` contain a clique on ``t`` vertices."""
    if t <= 0:
        return True
    if t == 1:
        return mask != 0
    if popcount(mask) < t:
        return False
    while mask:
        low = mask & -mask
        v = low.bit_length() - 1
        mask ^= low
        if has_clique(adj, mask & adj[v], t - 1):
            return True
    return False


def has_clique_of_size(g: Graph, vertices: Iterable[int] | int, t: int) -> bool:
    """Does the subgraph induced by ``vertices`` contain a ``t``-clique?"""
    if t < 1:
        raise GraphError("clique size must be at least 1")
    mask = vertices if isinstance(vertices, int) else to_mask(vertices)
    return has_clique(g.adj, mask, t)


def max_clique(g: Graph, within: Optional[int] = None) -> int:
    """A maximum clique of ``g`` (restricted to ``within``) as a bitmask.

    Branch and bound with a greedy colouring bound.
    """
    adj = g.adj
    cand = g.full_mask if within is None else within
    non_adj = [~nb & ~(1 << v) for v, nb in enumerate(adj)]
    degree_order = sorted(range(g.n), key=lambda v: (-popcount(adj[v] & cand), v))
    best = [0, 0]  # size, mask

    def expand(size: int, chosen: int, p: int):
        verts, labels = _greedy_classes(degree_order, p, non_adj)
        for i in range(len(verts) - 1, -1, -1):
            if size + labels[i] <= best[0]:
                return
            v = verts[i]
            newp = p & adj[v]
            if newp:
                expand(size + 1, chosen | 1 << v, newp)
            elif size + 1 > best[0]:
                best[0], best[1] = size + 1, chosen | 1 << v
            p &= ~(1 << v)

    if cand:
        expand(0, 0, cand)
    return best[1]


def clique_number(g: Graph) -> int:
    if g.n == 0:
        raise GraphError("clique number of the empty graph is undefined")
    return popcount(max_clique(g))


# ------------------------------------------------------------- colourings


def find_coloring(g: Graph, k: int, within: Optional[int] = None) -> Optional[dict[int, int]]:
    """A proper colouring with colours ``0..k-1`` of the vertices in ``within``.

    DSATUR branching: always colour the uncoloured vertex seeing the most
    distinct colours (ties: larger degree, then smaller id).  A vertex only
    opens one fresh colour, which removes colour-permutation symmetry.
    """
    mask = g.full_mask if within is None else within
    verts = bits(mask)
    if not verts:
        return {}
    if k <= 0:
        return None
    adj = [g.adj[v] & mask for v in range(g.n)]
    color: dict[int, int] = {}
    seen = {v: 0 for v in verts}  # bitmask of colours on coloured neighbours
    deg = {v: popcount(adj[v]) for v in verts}

    def pick():
        best_v, best_key = -1, None
        for v in verts:
            if v in color:
                continue
            key = (popcount(seen[v]), deg[v], -v)
            if best_key is None or key > best_key:
                best_v, best_key = v, key
        return best_v

    def solve(used: int) -> bool:
        if len(color) == len(verts):
            return True
        v = pick()
        for c in range(min(used + 1, k)):
            if seen[v] >> c & 1:
                continue
            color[v] = c
            touched = [u for u in bits(adj[v]) if u not in color and not seen[u] >> c & 1]
            for u in touched:
                seen[u] |= 1 << c
            if solve(max(used, c + 1)):
                return True
            for u in touched:
                seen[u] &= ~(1 << c)
            del color[v]
        return False

    return dict(color) if solve(0) else None


def is_k_colorable(g: Graph, k: int, within: Optional[int] = None) -> bool:
    if k < 0:
        raise GraphError("number of colours must be non-negative")
    return find_coloring(g, k, within) is not None


def chromatic_number(g: Graph, within: Optional[int] = None) -> int:
    """Least k with a proper k-colouring, searching upward from the clique number."""
    mask = g.full_mask if within is None else within
    if not mask:
        return 0
    k = popcount(max_clique(g, mask))
    while not is_k_colorable(g, k, mask):
        k += 1
    return k


# ---------------------------------------------------------- homomorphisms


def is_homomorphism(g1: Graph, g2: Graph, assignment: Sequence[int]) -> bool:
    if len(assignment) != g1.n:
        return False
    if any(not 0 <= x < g2.n for x in assignment):
        return False
    return all(g2.has_edge(assignment[u], assignment[v]) for u, v in g1.edges())


def find_homomorphism(g1: Graph, g2: Graph) -> Optional[tuple[int, ...]]:
    """First edge-preserving map ``V(g1) -> V(g2)`` found, or None.

    Vertices of ``g1`` are assigned in descending-degree order (ties by id),
    trying images in increasing id, with forward checking on neighbour domains.
    """
    if g1.n == 0:
        return ()
    if g2.n == 0:
        return None
    order = sorted(range(g1.n), key=lambda v: (-g1.degree(v), v))
    # only vertices with a neighbour can host a non-isolated vertex
    nonisolated = to_mask(v for v in range(g2.n) if g2.adj[v])
    domains = [nonisolated if g1.adj[v] else g2.full_mask for v in range(g1.n)]
    assignment = [-1] * g1.n

    def assign(i: int, dom: list[int]) -> bool:
        if i == len(order):
            return True
        u = order[i]
        for x in bits(dom[u]):
            assignment[u] = x
            new = list(dom)
            ok = True
            for w in bits(g1.adj[u]):
                if assignment[w] < 0:
                    new[w] &= g2.adj[x]
                    if not new[w]:
                        ok = False
                        break
            if ok and assign(i + 1, new):
                return True
        assignment[u] = -1
        return False

    if not assign(0, domains):
        return None
    result = tuple(assignment)
    assert is_homomorphism(g1, g2, result)
    return result


def is_ab_colorable(g: Graph, a: int, b: int) -> bool:
    """True iff ``g`` has a homomorphism to KG(a,b)."""
    if not a >= b >= 1:
        raise GraphError("a:b-colouring needs a >= b >= 1")
    return find_homomorphism(g, kneser(a, b)) is not None


def find_isomorphism(g: Graph, h: Graph, fixed: Optional[tuple[int, int]] = None) -> Optional[tuple[int, ...]]:
    """A bijection preserving adjacency and non-adjacency, or None.

    ``fixed=(u, x)`` forces ``u -> x``.
    """
    if g.n != h.n or g.num_edges != h.num_edges:
        return None
    n = g.n
    if sorted(g.degrees()) != sorted(h.degrees()):
        return None
    by_degree: dict[int, int] = {}
    for x in range(n):
        by_degree[h.degree(x)] = by_degree.get(h.degree(x), 0) | 1 << x
    domains = [by_degree.get(g.degree(v), 0) for v in range(n)]
    if fixed is not None:
        u, x = fixed
        domains[u] &= 1 << x
    order = sorted(range(n), key=lambda v: (popcount(domains[v]) != 1, -g.degree(v), v))
    assignment = [-1] * n

    def assign(i: int, dom: list[int]) -> bool:
        if i == n:
            return True
        u = order[i]
        for x in bits(dom[u]):
            assignment[u] = x
            new = list(dom)
            ok = True
            nbx = h.adj[x]
            nonx = ~nbx & ~(1 << x)
            for w in range(n):
                if assignment[w] >= 0:
                    continue
                new[w] &= nbx if g.adj[u] >> w & 1 else nonx
                if not new[w]:
                    ok = False
                    break
            if ok and assign(i + 1, new):
                return True
        assignment[u] = -1
        return False

    return tuple(assignment) if assign(0, domains) else None


def is_vertex_transitive(g: Graph) -> bool:
    """True iff some automorphism maps vertex 0 onto each vertex.

    Vertices already reached by composing automorphisms found so far are
    skipped.
    """
    if g.n == 0:
        raise GraphError("vertex transitivity of the empty graph is undefined")
    if len(set(g.degrees())) > 1:
        return False
    found: list[tuple[int, ...]] = []
    reached = {0}
    for target in range(1, g.n):
        if target in reached:
            continue
        sigma = find_isomorphism(g, g, fixed=(0, target))
        if sigma is None:
            return False
        found.append(sigma)
        frontier = list(reached)
        while frontier:
            v = frontier.pop()
            for s in found:
                if s[v] not in reached:
                    reached.add(s[v])
                    frontier.append(s[v])
    return True
