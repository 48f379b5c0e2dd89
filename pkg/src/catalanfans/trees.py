"""Ordered and unordered rooted binary trees, with exact enumeration.

A binary tree is either None (empty) or a Node with an optional integer
label and two subtrees.  Unordered isomorphism (forget which child is
left and which is right) is decided through a canonical parenthesis
code; two trees are isomorphic as unordered rooted trees exactly when
their codes agree.

The module also houses the integer sequences attached to these trees:
Catalan numbers, the Wedderburn-Etherington numbers b_n (unordered
binary trees with n-1 vertices), and the coat-hanger numbers f_m
(unordered binary forests with m vertices), all in exact arbitrary
precision.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import lru_cache


@dataclass(frozen=True)
class Node:
    label: int | None
    left: "Node | None"
    right: "Node | None"


Tree = Node | None


def tree_size(t: Tree) -> int:
    if t is None:
        return 0
    return 1 + tree_size(t.left) + tree_size(t.right)


def psi(u) -> Tree:
    """The binary tree of a permutation, labeled by positions 1..n.

    The position of the smallest value becomes the root; the entries to
    its left and right build the left and right subtrees recursively.

    >>> t = psi((3, 1, 2))
    >>> (t.label, t.left.label, t.right.label)
    (2, 1, 3)
    """

    def build(lo, hi):
        if lo > hi:
            return None
        pos = min(range(lo, hi + 1), key=lambda i: u[i - 1])
        return Node(pos, build(lo, pos - 1), build(pos + 1, hi))

    return build(1, len(u))


def mirror(t: Tree) -> Tree:
    """Swap left and right subtrees recursively."""
    if t is None:
        return None
    return Node(t.label, mirror(t.right), mirror(t.left))


def canonical_code(t: Tree) -> str:
    """Label-blind canonical form: children codes sorted as strings.

    >>> canonical_code(Node(None, None, Node(None, None, None)))
    '(())'
    """
    if t is None:
        return ""
    a = canonical_code(t.left)
    b = canonical_code(t.right)
    if a > b:
        a, b = b, a
    return "(" + a + b + ")"


def unordered_iso(t1: Tree, t2: Tree) -> bool:
    return canonical_code(t1) == canonical_code(t2)


def enumerate_ordered_trees(n: int) -> list[Tree]:
    """All ordered binary trees with n vertices, labels in symmetric
    (binary search tree) order, deterministic sequence.

    >>> len(enumerate_ordered_trees(3))
    5
    """
    if n < 0:
        raise ValueError("n must be nonnegative")

    def build(lo, hi):
        if lo > hi:
            return [None]
        out = []
        for root in range(lo, hi + 1):
            for left in build(lo, root - 1):
                for right in build(root + 1, hi):
                    out.append(Node(root, left, right))
        return out

    return build(1, n)


def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


def count_unordered(n: int) -> int:
    """Number of unordered binary trees with n vertices, by explicit
    enumeration of canonical codes (cross-checked against we_numbers)."""
    return len(unordered_tree_codes(n))


@lru_cache(maxsize=None)
def unordered_tree_codes(n: int) -> tuple[str, ...]:
    """Sorted canonical codes of the unordered binary trees on n vertices."""
    return tuple(sorted({canonical_code(t) for t in enumerate_ordered_trees(n)}))


def we_numbers(max_n: int) -> list[int]:
    """Wedderburn-Etherington numbers [b_1, ..., b_max_n].

    b_1 = 1, and for m >= 1:
      b_{2m-1} = sum_{i=1}^{m-1} b_i b_{2m-1-i}        (m >= 2),
      b_{2m}   = b_m (b_m + 1) / 2 + sum_{i=1}^{m-1} b_i b_{2m-i}.

    >>> we_numbers(8)
    [1, 1, 1, 2, 3, 6, 11, 23]
    """
    if max_n < 1:
        raise ValueError("max_n must be at least 1")
    b = [0] * (max_n + 1)
    b[1] = 1
    for k in range(2, max_n + 1):
        if k % 2 == 1:
            m = (k + 1) // 2
            b[k] = sum(b[i] * b[k - i] for i in range(1, m))
        else:
            m = k // 2
            b[k] = b[m] * (b[m] + 1) // 2 + sum(b[i] * b[k - i] for i in range(1, m))
    return b[1:]


def coat_hanger(max_m: int) -> list[int]:
    """Coat-hanger numbers [f_1, ..., f_max_m]: coefficients of the
    Euler product 1 / prod_{k>0} (1 - x^k)^{b_{k+1}}, i.e. the counts of
    unordered binary forests by total vertex number.

    >>> coat_hanger(6)
    [1, 2, 4, 8, 16, 34]
    """
    if max_m < 1:
        raise ValueError("max_m must be at least 1")
    b = we_numbers(max_m + 1)
    coeffs = [0] * (max_m + 1)
    coeffs[0] = 1
    for k in range(1, max_m + 1):
        c = b[k]  # b_{k+1}
        # multiply by (1 - x^k)^(-c) = sum_j binom(c-1+j, j) x^{kj}
        new = [0] * (max_m + 1)
        for j in range(0, max_m // k + 1):
            factor = math.comb(c - 1 + j, j)
            if factor == 0:
                continue
            shift = k * j
            for d in range(0, max_m + 1 - shift):
                if coeffs[d]:
                    new[d + shift] += coeffs[d] * factor
        coeffs = new
    return coeffs[1:]


def enumerate_unordered_forests(m: int) -> list[tuple[str, ...]]:
    """All multisets of nonempty unordered binary trees with m vertices
    in total, each multiset as a sorted tuple of canonical codes.

    >>> len(enumerate_unordered_forests(3))
    4
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    out = []

    def extend(remaining, min_size, min_code, acc):
        if remaining == 0:
            out.append(tuple(acc))
            return
        for size in range(min_size, remaining + 1):
            for code in unordered_tree_codes(size):
                if size == min_size and code < min_code:
                    continue
                acc.append(code)
                extend(remaining - size, size, code, acc)
                acc.pop()

    extend(m, 1, "", [])
    return out


def from_parent_links(n: int, root: int, parent: dict, side: dict) -> Tree:
    """Rebuild a labeled binary tree from parent pointers: vertex k != root
    hangs under parent[k], on the left when side[k] == '-', on the right
    when side[k] == '+'."""
    left = {}
    right = {}
    for k, p in parent.items():
        slot = left if side[k] == "-" else right
        if p in slot:
            raise ValueError(f"vertex {p} has two {side[k]} children")
        slot[p] = k

    def build(k):
        return Node(k, build(left[k]) if k in left else None,
                    build(right[k]) if k in right else None)

    t = build(root)
    if tree_size(t) != n:
        raise ValueError("parent links do not form a tree on all vertices")
    return t


def tree_to_json(t: Tree) -> str:
    return json.dumps(_tree_obj(t), sort_keys=True, separators=(",", ":"))


def _tree_obj(t: Tree):
    if t is None:
        return None
    return {"label": t.label, "left": _tree_obj(t.left), "right": _tree_obj(t.right)}


def tree_from_json(text: str) -> Tree:
    return _tree_from_obj(json.loads(text))


def _tree_from_obj(obj) -> Tree:
    if obj is None:
        return None
    return Node(obj["label"], _tree_from_obj(obj["left"]), _tree_from_obj(obj["right"]))


if __name__ == "__main__":
    import doctest

    doctest.testmod()
