"""Polygon triangulations, their left/right trees, and lattice vectors.

The convex polygon has n+2 vertices labeled 0..n+1 counterclockwise; a
triangulation is the set of n-1 pairwise noncrossing diagonals, cutting
the polygon into n triangles.  Every inner vertex k in 1..n is the
middle vertex of exactly one triangle k_left < k < k_right; the edges
{k_left, k} form the left tree (rooted at 0) and the edges {k, k_right}
form the right tree (rooted at n+1).

Each middle triple carries four integer vectors:

* p_k = e_{k_left+1} - e_{k+1} and q_k = -e_k + e_{k_right} in the
  sum-zero lattice of Z^{n+1};
* v_k = pi_k - pi_{k_right} and w_k = pi_{k_left} - pi_k in the quotient
  lattice (pi coordinates), dual bases of the p's and q's respectively.

The distinguished boundary edge {0, n+1} anchors a bijection with
binary trees: the middle vertex of the triangle on that edge is the
root, and the polygon splits into the left and right subtrees.
"""

from __future__ import annotations

from dataclasses import dataclass

from catalanfans import trees
from catalanfans.trees import Node, Tree


@dataclass(frozen=True)
class Triangulation:
    n: int
    diagonals: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class MiddleTriple:
    k_left: int
    k: int
    k_right: int


@dataclass(frozen=True)
class PhiSigma:
    """The parent map phi and sign map sigma read off the triangles:
    for k != k0 the third edge {k_left, k_right} of k's triangle lies in
    the right tree (then phi(k) = k_left, sigma(k) = '+') or in the left
    tree (then phi(k) = k_right, sigma(k) = '-')."""

    k0: int
    phi: dict
    sigma: dict


def _crossing(d1, d2):
    a, b = d1
    c, d = d2
    return (a < c < b < d) or (c < a < d < b)


def check_triangulation(T: Triangulation) -> Triangulation:
    n = T.n
    if n < 1:
        raise ValueError("polygon must have at least 3 vertices")
    diags = tuple(tuple(sorted(d)) for d in T.diagonals)
    if list(diags) != sorted(set(diags)):
        raise ValueError("diagonals must be sorted and duplicate-free")
    for a, b in diags:
        if not (0 <= a < b <= n + 1) or b - a < 2 or (a, b) == (0, n + 1):
            raise ValueError(f"not a diagonal of the (n+2)-gon: {(a, b)}")
    if len(diags) != n - 1:
        raise ValueError(f"expected {n - 1} diagonals, got {len(diags)}")
    for i in range(len(diags)):
        for j in range(i + 1, len(diags)):
            if _crossing(diags[i], diags[j]):
                raise ValueError(f"diagonals {diags[i]} and {diags[j]} cross")
    return Triangulation(n, diags)


def make_triangulation(n, diagonals) -> Triangulation:
    return check_triangulation(
        Triangulation(n, tuple(sorted(tuple(sorted(d)) for d in diagonals)))
    )


def edges_of(T: Triangulation) -> set:
    """Boundary edges plus diagonals."""
    n = T.n
    edges = {(i, i + 1) for i in range(n + 1)}
    edges.add((0, n + 1))
    edges.update(T.diagonals)
    return edges


def triangles_of(T: Triangulation) -> list[MiddleTriple]:
    """The n triangles as middle triples, indexed by their middle vertex.

    Every 3-clique of the edge graph of a triangulated convex polygon
    bounds a face, so the triples are found by clique inspection.
    """
    check_triangulation(T)
    n = T.n
    edges = edges_of(T)
    neighbors = {v: set() for v in range(n + 2)}
    for a, b in edges:
        neighbors[a].add(b)
        neighbors[b].add(a)
    triples = {}
    for k in range(1, n + 1):
        smaller = sorted(x for x in neighbors[k] if x < k)
        larger = sorted(x for x in neighbors[k] if x > k)
        found = [
            (a, b) for a in smaller for b in larger if (a, b) in edges
        ]
        if len(found) != 1:
            raise ValueError(f"vertex {k} is the middle of {len(found)} triangles")
        a, b = found[0]
        triples[k] = MiddleTriple(a, k, b)
    return [triples[k] for k in range(1, n + 1)]


def left_tree(T: Triangulation) -> tuple[tuple[int, int], ...]:
    """Edges {k_left, k} for k = 1..n (a tree on 0..n rooted at 0)."""
    return tuple(sorted((t.k_left, t.k) for t in triangles_of(T)))


def right_tree(T: Triangulation) -> tuple[tuple[int, int], ...]:
    """Edges {k, k_right} for k = 1..n (a tree on 1..n+1 rooted at n+1)."""
    return tuple(sorted((t.k, t.k_right) for t in triangles_of(T)))


def tree_of_triangulation(T: Triangulation) -> Tree:
    """The binary tree of T, labeled by middle vertices.

    Recursion on the distinguished edge {0, n+1}: the root is the third
    vertex of the triangle on that edge, and the polygon pieces over
    {0, root} and {root, n+1} build the left and right subtrees.
    """
    check_triangulation(T)
    edges = edges_of(T)

    def build(lo, hi):
        if hi - lo < 2:
            return None
        for k in range(lo + 1, hi):
            if (lo, k) in edges and (k, hi) in edges:
                return Node(k, build(lo, k), build(k, hi))
        raise ValueError(f"no triangle on edge {(lo, hi)}")

    return build(0, T.n + 1)


def triangulation_of_tree(B: Tree) -> Triangulation:
    """Inverse of tree_of_triangulation for trees labeled 1..n in
    symmetric (binary search tree) order."""
    n = trees.tree_size(B)
    if n < 1:
        raise ValueError("tree must be nonempty")
    diagonals = []

    def build(lo, hi, t):
        if t is None:
            if hi - lo != 1:
                raise ValueError("tree labels are not in symmetric order")
            return
        k = t.label
        if not (lo < k < hi):
            raise ValueError("tree labels are not in symmetric order")
        for a, b in ((lo, k), (k, hi)):
            if b - a >= 2 and (a, b) != (0, n + 1):
                diagonals.append((a, b))
        build(lo, k, t.left)
        build(k, hi, t.right)

    build(0, n + 1, B)
    return make_triangulation(n, diagonals)


def enumerate_triangulations(n: int) -> list[Triangulation]:
    """All triangulations of the (n+2)-gon, in the deterministic order
    inherited from trees.enumerate_ordered_trees."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return [triangulation_of_tree(t) for t in trees.enumerate_ordered_trees(n)]


def vectors_pq(T: Triangulation):
    """The sum-zero vectors (p_1..p_n, q_1..q_n), as length-(n+1) tuples."""
    n = T.n
    ps = []
    qs = []
    for t in triangles_of(T):
        p = [0] * (n + 1)
        p[t.k_left] += 1      # e_{k_left + 1}
        p[t.k] -= 1           # e_{k + 1}
        ps.append(tuple(p))
        q = [0] * (n + 1)
        q[t.k - 1] -= 1       # e_k
        q[t.k_right - 1] += 1  # e_{k_right}
        qs.append(tuple(q))
    return ps, qs


def _pi_diff(a, b, n):
    """pi_a - pi_b in pi coordinates (pi_0 = pi_{n+1} = 0)."""
    c = [0] * n
    if 1 <= a <= n:
        c[a - 1] += 1
    if 1 <= b <= n:
        c[b - 1] -= 1
    return tuple(c)


def vectors_vw(T: Triangulation):
    """The quotient-side vectors (v_1..v_n, w_1..w_n), as pi coordinates."""
    n = T.n
    vs = []
    ws = []
    for t in triangles_of(T):
        vs.append(_pi_diff(t.k, t.k_right, n))
        ws.append(_pi_diff(t.k_left, t.k, n))
    return vs, ws


def phi_sigma(T: Triangulation) -> PhiSigma:
    """Parent and sign maps of T; the rebuilt labeled tree equals
    tree_of_triangulation(T)."""
    triples = triangles_of(T)
    left = set(left_tree(T))
    right = set(right_tree(T))
    k0 = None
    phi = {}
    sigma = {}
    for t in triples:
        third = (t.k_left, t.k_right)
        if third == (0, T.n + 1):
            if k0 is not None:
                raise ValueError("two triangles on the distinguished edge")
            k0 = t.k
        elif third in right:
            phi[t.k] = t.k_left
            sigma[t.k] = "+"
        elif third in left:
            phi[t.k] = t.k_right
            sigma[t.k] = "-"
        else:
            raise ValueError(f"edge {third} in neither side tree")
    if k0 is None:
        raise ValueError("no triangle on the distinguished edge")
    return PhiSigma(k0=k0, phi=phi, sigma=sigma)


def triangulation_to_json(T: Triangulation) -> str:
    import json

    return json.dumps(
        {"n": T.n, "diagonals": [list(d) for d in T.diagonals]},
        sort_keys=True,
        separators=(",", ":"),
    )


def triangulation_from_json(text: str) -> Triangulation:
    import json

    obj = json.loads(text)
    return make_triangulation(obj["n"], [tuple(d) for d in obj["diagonals"]])
