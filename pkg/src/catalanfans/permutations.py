"""Exact symmetric-group combinatorics: Bruhat order, intervals, sweeps.

Permutations are tuples in one-line notation ``(w(1), ..., w(m))`` with
values 1..m.  Composition follows ``compose(x, y)(i) = x(y(i))``, so
multiplying by the simple transposition ``s_i`` on the right swaps the
entries at positions i and i+1:

>>> compose((1, 2, 4, 3), simple(4, 1))
(2, 1, 4, 3)

Everything here is a pure function over immutable values; the Bruhat
comparisons and interval enumeration are delegated to the kernel
backend (compiled or pure Python, selected at import).
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass

from catalanfans._backend import kernels

Perm = tuple


def check_permutation(values) -> Perm:
    """Validate one-line notation; returns the permutation as a tuple."""
    p = tuple(values)
    m = len(p)
    if m < 1 or sorted(p) != list(range(1, m + 1)):
        raise ValueError(f"not a permutation of 1..{m}: {values!r}")
    return p


def identity(m: int) -> Perm:
    return tuple(range(1, m + 1))


def longest_element(m: int) -> Perm:
    return tuple(range(m, 0, -1))


def compose(x: Perm, y: Perm) -> Perm:
    """(xy)(i) = x(y(i))."""
    return tuple(x[y[i] - 1] for i in range(len(x)))


def inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v - 1] = i + 1
    return tuple(out)


def length(p: Perm) -> int:
    """Coxeter length, computed as the inversion count.

    >>> length((2, 4, 3, 1))
    4
    """
    return kernels.inversion_count(p)


def simple(m: int, i: int) -> Perm:
    """The simple transposition s_i in S_m."""
    return transposition(m, i, i + 1)


def transposition(m: int, i: int, j: int) -> Perm:
    if not (1 <= i < j <= m):
        raise ValueError(f"bad transposition ({i},{j}) in S_{m}")
    out = list(range(1, m + 1))
    out[i - 1], out[j - 1] = out[j - 1], out[i - 1]
    return tuple(out)


def apply_transposition(p: Perm, i: int, j: int) -> Perm:
    """p * t_{i,j}: swap the entries at positions i and j."""
    out = list(p)
    out[i - 1], out[j - 1] = out[j - 1], out[i - 1]
    return tuple(out)


def s_range(p: int, q: int, m: int) -> Perm:
    """The sweep s(p, q) = s_p s_{p+1} ... s_q (descending when p > q).

    >>> s_range(1, 3, 4)
    (2, 3, 4, 1)
    >>> s_range(1, 1, 2)
    (2, 1)
    """
    if not (1 <= p <= m - 1 and 1 <= q <= m - 1):
        raise ValueError(f"sweep indices ({p},{q}) out of range for S_{m}")
    step = 1 if q >= p else -1
    out = identity(m)
    for i in range(p, q + step, step):
        out = compose(out, simple(m, i))
    return out


def bruhat_leq(v: Perm, w: Perm) -> bool:
    """v <= w in the Bruhat order (sorted-prefix dominance).

    >>> bruhat_leq((1, 2, 4, 3), (2, 4, 3, 1))
    True
    >>> bruhat_leq((2, 1, 3, 4), (1, 3, 2, 4))
    False
    """
    if len(v) != len(w):
        raise ValueError("permutations live in different symmetric groups")
    return kernels.bruhat_leq(v, w)


def covers(x: Perm, y: Perm) -> bool:
    """y covers x: x <= y with length(y) = length(x) + 1."""
    if len(x) != len(y):
        raise ValueError("permutations live in different symmetric groups")
    return length(y) == length(x) + 1 and kernels.bruhat_leq(x, y)


def interval(v: Perm, w: Perm, limit: int = 0) -> list[Perm]:
    """The Bruhat interval [v, w], in lexicographic order.

    With limit > 0, raises ValueError once the interval is known to hold
    more than `limit` elements.
    """
    if len(v) != len(w):
        raise ValueError("permutations live in different symmetric groups")
    if not kernels.bruhat_leq(v, w):
        raise ValueError(f"{v} is not below {w} in the Bruhat order")
    out = kernels.bruhat_interval(v, w, limit)
    if out is None:
        raise ValueError(f"interval [{v}, {w}] exceeds the cap of {limit}")
    return out


def all_permutations(m: int):
    """All of S_m in lexicographic order."""
    return itertools.permutations(range(1, m + 1))


def u_head(u: Perm) -> Perm:
    """Prepend the value 1: (1, u(1)+1, ..., u(n)+1).

    >>> u_head((2, 3, 1, 4))
    (1, 3, 4, 2, 5)
    """
    return (1,) + tuple(x + 1 for x in u)


def u_tail(u: Perm) -> Perm:
    """Append the value n+1.

    >>> u_tail((2, 3, 1, 4))
    (2, 3, 1, 4, 5)
    """
    return tuple(u) + (len(u) + 1,)


def atoms_head(u: Perm) -> tuple[tuple[int, int], ...]:
    """Position pairs (i, j) whose transpositions give the atoms of the
    interval from u_head(u) to u_head(u)*s(1,n).

    For each j = 2..n+1 there is a unique i < j with v(i) < v(j) and
    v(k) > v(j) strictly between: the nearest smaller entry to the left.
    """
    v = u_head(u)
    n = len(u)
    pairs = []
    for j in range(2, n + 2):
        i = j - 1
        while v[i - 1] > v[j - 1]:
            i -= 1
        pairs.append((i, j))
    return tuple(pairs)


def coatoms_head(u: Perm) -> tuple[tuple[int, int], ...]:
    """Position pairs (i, j) whose transpositions give the coatoms of the
    interval from u_head(u) to w = u_head(u)*s(1,n): for each i = 1..n,
    j is the position of the nearest smaller entry to the right of w(i).
    """
    n = len(u)
    w = compose(u_head(u), s_range(1, n, n + 1))
    pairs = []
    for i in range(1, n + 1):
        j = i + 1
        while w[j - 1] > w[i - 1]:
            j += 1
        pairs.append((i, j))
    return tuple(pairs)


def pattern_projection(w: Perm, p: int, q: int) -> Perm:
    """The permutation order-isomorphic to the window w(p), ..., w(q+1).

    >>> pattern_projection((1, 7, 3, 2, 5, 4, 6, 8, 9), 3, 4)
    (2, 1, 3)
    """
    m = len(w)
    if not (1 <= p <= q <= m - 1):
        raise ValueError(f"bad window [{p},{q}] for S_{m}")
    window = w[p - 1 : q + 1]
    ranks = {val: r + 1 for r, val in enumerate(sorted(window))}
    return tuple(ranks[val] for val in window)


def w0_conjugate(z: Perm) -> Perm:
    """Conjugation by the longest element: i -> m+1 - z(m+1-i).

    >>> w0_conjugate((2, 1, 3, 4))
    (1, 2, 4, 3)
    """
    m = len(z)
    return tuple(m + 1 - z[m - i] for i in range(1, m + 1))


@dataclass(frozen=True)
class SweepDecomposition:
    """A factorization into sweeps s(p_1,q_1)...s(p_r,q_r) with pairwise
    disjoint index intervals; proper additionally requires a gap of at
    least 2 between consecutive intervals."""

    blocks: tuple[tuple[int, int], ...]
    r: int
    proper: bool


def _segment_runs(word):
    """Cut a distinct-letter word into its maximal +-1-step runs.

    With distinct letters the cut points are forced (a run can never
    reverse direction), so the segmentation of a given word is unique.
    """
    blocks = []
    start = word[0]
    prev = word[0]
    step = 0
    for x in word[1:]:
        if step == 0 and abs(x - prev) == 1:
            step = x - prev
            prev = x
        elif step != 0 and x - prev == step:
            prev = x
        else:
            blocks.append((start, prev))
            start = prev = x
            step = 0
    blocks.append((start, prev))
    return blocks


def sweep_decomposition(indices) -> SweepDecomposition | None:
    """Minimal sweep factorization of s_{j_1} ... s_{j_m}, distinct j's.

    Searches the commutation class of the word (adjacent letters may be
    swapped when they differ by at least 2) and keeps the word whose
    forced run segmentation has the fewest blocks, breaking ties
    lexicographically.  Returns None only for empty input.
    """
    word = tuple(indices)
    if not word:
        return None
    if len(set(word)) != len(word):
        raise ValueError("sweep indices must be mutually distinct")
    best_word = None
    best_r = len(word) + 1
    seen = {word}
    queue = deque([word])
    while queue:
        cur = queue.popleft()
        r = len(_segment_runs(cur))
        if r < best_r or (r == best_r and cur < best_word):
            best_r = r
            best_word = cur
        for i in range(len(cur) - 1):
            if abs(cur[i] - cur[i + 1]) >= 2:
                nxt = cur[:i] + (cur[i + 1], cur[i]) + cur[i + 2 :]
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
    blocks = tuple(_segment_runs(best_word))
    intervals = sorted((min(p, q), max(p, q)) for p, q in blocks)
    proper = all(b[0] - a[1] >= 2 for a, b in zip(intervals, intervals[1:]))
    return SweepDecomposition(blocks=blocks, r=best_r, proper=proper)


def distinct_reduced_word(z: Perm) -> tuple[int, ...] | None:
    """A reduced word for z, provided z is a product of distinct simple
    transpositions; None otherwise.

    Repeatedly strips a descent from the right: if z(i) > z(i+1) then
    z*s_i is shorter and z = (z*s_i)*s_i, so collecting the stripped
    letters right-to-left rebuilds z.
    """
    word = []
    cur = list(z)
    m = len(cur)
    while True:
        i = next((i for i in range(m - 1) if cur[i] > cur[i + 1]), None)
        if i is None:
            break
        cur[i], cur[i + 1] = cur[i + 1], cur[i]
        word.append(i + 1)
    word.reverse()
    if len(set(word)) != len(word):
        return None
    return tuple(word)


if __name__ == "__main__":
    import doctest

    doctest.testmod()
