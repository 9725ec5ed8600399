"""Brute-force reference computations, deliberately naive and independent of the package."""

from fractions import Fraction
from itertools import combinations, permutations, product


def edge_set(g):
    return {frozenset(e) for e in g.edges()}


def is_isomorphic_brute(g, h):
    if g.n != h.n or g.num_edges != h.num_edges:
        return False
    target = edge_set(h)
    for perm in permutations(range(g.n)):
        if {frozenset((perm[u], perm[v])) for u, v in g.edges()} == target:
            return True
    return False


def is_clique(g, vs):
    return all(g.has_edge(u, v) for u, v in combinations(vs, 2))


def omega_brute(g):
    return max(t for t in range(1, g.n + 1) for vs in combinations(range(g.n), t) if is_clique(g, vs))


def colorable_brute(g, vertices, k):
    vertices = list(vertices)
    if not vertices:
        return True
    if k == 0:
        return False
    edges = [(u, v) for u, v in g.edges() if u in vertices and v in vertices]
    index = {v: i for i, v in enumerate(vertices)}
    for colours in product(range(k), repeat=len(vertices)):
        if all(colours[index[u]] != colours[index[v]] for u, v in edges):
            return True
    return False


def chi_brute(g):
    return next(k for k in range(g.n + 1) if colorable_brute(g, range(g.n), k))


def member_brute(g, vs, name, k):
    vs = list(vs)
    if name == "independent":
        return all(not g.has_edge(u, v) for u, v in combinations(vs, 2))
    if name == "cliquefree":
        return not any(is_clique(g, c) for c in combinations(vs, k + 1))
    return colorable_brute(g, vs, k)


def all_members_brute(g, name, k):
    return [vs for t in range(1, g.n + 1) for vs in combinations(range(g.n), t) if member_brute(g, vs, name, k)]


def maximal_members_brute(g, name, k):
    members = set(all_members_brute(g, name, k))
    return {s for s in members if not any(set(s) < set(t) for t in members)}


def beta_brute(g, k):
    return max(len(s) for s in all_members_brute(g, "cliquefree", k))


def hom_exists_brute(g1, g2):
    for images in product(range(g2.n), repeat=g1.n):
        if all(g2.has_edge(images[u], images[v]) for u, v in g1.edges()):
            return True
    return False


def _solve(matrix, rhs):
    """Solve a square system exactly; None when singular."""
    n = len(matrix)
    a = [list(map(Fraction, row)) + [Fraction(b)] for row, b in zip(matrix, rhs)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return None
        a[col], a[pivot] = a[pivot], a[col]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col] / a[col][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [a[i][n] / a[i][i] for i in range(n)]


def covering_lp_vertex_enumeration(num_rows, columns):
    """Minimum of sum(x) over {Ax >= 1, x >= 0} by enumerating basic solutions."""
    c = len(columns)
    constraints = []  # (coefficients, rhs) meaning coeffs . x >= rhs
    for r in range(num_rows):
        constraints.append(([1 if r in col else 0 for col in columns], 1))
    for j in range(c):
        constraints.append(([1 if i == j else 0 for i in range(c)], 0))
    best = None
    for chosen in combinations(constraints, c):
        x = _solve([co for co, _ in chosen], [b for _, b in chosen])
        if x is None:
            continue
        if all(sum(a * xi for a, xi in zip(co, x)) >= b for co, b in constraints):
            value = sum(x)
            if best is None or value < best:
                best = value
    return best


def full_family_float(g, name, k):
    """Float LP optimum over the entire family (scipy/HiGHS)."""
    from scipy.optimize import linprog

    members = all_members_brute(g, name, k)
    a_ub = [[-1.0 if v in m else 0.0 for m in members] for v in range(g.n)]
    res = linprog([1.0] * len(members), A_ub=a_ub, b_ub=[-1.0] * g.n, bounds=(0, None), method="highs")
    assert res.status == 0
    return res.fun
