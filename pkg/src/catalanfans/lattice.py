"""Lattice vectors in the weight quotient and exact linear algebra.

Two kinds of integer vectors appear throughout the package:

* quotient-side vectors: length-n integer tuples of coordinates in the
  basis pi_1, ..., pi_n, where pi_i is the class of e_1 + ... + e_i in
  Z^{n+1} / Z(1, ..., 1) and pi_0 = pi_{n+1} = 0;
* sum-zero vectors: length-(n+1) integer tuples with coordinate sum 0,
  living in the dual lattice under the dot product.

The pairing of a quotient-side vector a with a sum-zero vector b is
sum_i a_i * (b_1 + ... + b_i), i.e. the dot product of any ambient
representative of a with b.

All matrix helpers work on sequences of row tuples and never touch
floating point: determinants are Bareiss fraction-free, everything else
runs on ``fractions.Fraction``.
"""

from fractions import Fraction
from math import gcd


def quotient_coords(x):
    """Quotient coordinates of an ambient integer vector.

    >>> quotient_coords((1, 0, 0, 0))
    (1, 0, 0)
    """
    return tuple(x[i] - x[i + 1] for i in range(len(x) - 1))


def ambient_rep(c):
    """The canonical ambient representative sum_i c_i * (e_1 + ... + e_i).

    >>> ambient_rep((1, 0, 0))
    (1, 0, 0, 0)
    >>> ambient_rep((0, 1, -1))
    (0, 0, -1, 0)
    """
    n = len(c)
    out = []
    acc = 0
    for j in range(n, 0, -1):
        acc += c[j - 1]
        out.append(acc)
    out.reverse()
    out.append(0)
    return tuple(out)


def pairing(a, b):
    """Exact pairing of a quotient-side vector with a sum-zero vector."""
    if len(b) != len(a) + 1:
        raise ValueError("incompatible vector lengths")
    total = 0
    partial = 0
    for i, ai in enumerate(a):
        partial += b[i]
        total += ai * partial
    return total


def vec_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def vec_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def vec_neg(a):
    return tuple(-x for x in a)


def is_zero(a):
    return all(x == 0 for x in a)


def primitive_vector(v):
    """Divide an integer vector by the gcd of its entries (direction kept)."""
    g = 0
    for x in v:
        g = gcd(g, abs(x))
    if g <= 1:
        return tuple(v)
    return tuple(x // g for x in v)


def int_det(rows):
    """Determinant of a square integer matrix (Bareiss, fraction-free)."""
    n = len(rows)
    if n == 0:
        return 1
    a = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def inverse_unimodular(rows):
    """Inverse of an integer matrix with determinant +-1, as integer rows.

    Raises ValueError when the determinant is not a unit.
    """
    n = len(rows)
    a = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(n)]
         for i, r in enumerate(rows)]
    for col in range(n):
        piv = None
        for i in range(col, n):
            if a[i][col]:
                piv = i
                break
        if piv is None:
            raise ValueError("matrix is singular")
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for i in range(n):
            if i != col and a[i][col]:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    out = []
    for i in range(n):
        row = []
        for j in range(n, 2 * n):
            x = a[i][j]
            if x.denominator != 1:
                raise ValueError("matrix is not unimodular")
            row.append(int(x))
        out.append(tuple(row))
    return tuple(out)


def matvec(rows, x):
    return tuple(sum(r[j] * x[j] for j in range(len(x))) for r in rows)


def matmul(a, b):
    n = len(b)
    cols = len(b[0]) if n else 0
    return tuple(
        tuple(sum(ra[k] * b[k][j] for k in range(n)) for j in range(cols))
        for ra in a
    )


def transpose(rows):
    return tuple(zip(*rows)) if rows else ()


def solve_exact(rows, rhs):
    """Solve a square linear system exactly; None when singular."""
    n = len(rows)
    a = [[Fraction(x) for x in r] + [Fraction(y)] for r, y in zip(rows, rhs)]
    for col in range(n):
        piv = None
        for i in range(col, n):
            if a[i][col]:
                piv = i
                break
        if piv is None:
            return None
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for i in range(n):
            if i != col and a[i][col]:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    return [a[i][n] for i in range(n)]


def rank_of(rows):
    """Rank of an integer or rational matrix."""
    if not rows:
        return 0
    a = [[Fraction(x) for x in r] for r in rows]
    nrows, ncols = len(a), len(a[0])
    rank = 0
    for col in range(ncols):
        piv = None
        for i in range(rank, nrows):
            if a[i][col]:
                piv = i
                break
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        inv = 1 / a[rank][col]
        a[rank] = [x * inv for x in a[rank]]
        for i in range(nrows):
            if i != rank and a[i][col]:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[rank])]
        rank += 1
        if rank == nrows:
            break
    return rank


def nullspace_vector(rows, ncols):
    """A primitive integer vector spanning the nullspace of a rank ncols-1
    matrix; None when the rank is not ncols-1."""
    a = [[Fraction(x) for x in r] for r in rows]
    nrows = len(a)
    pivots = []
    rank = 0
    for col in range(ncols):
        piv = None
        for i in range(rank, nrows):
            if a[i][col]:
                piv = i
                break
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        inv = 1 / a[rank][col]
        a[rank] = [x * inv for x in a[rank]]
        for i in range(nrows):
            if i != rank and a[i][col]:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[rank])]
        pivots.append(col)
        rank += 1
    if rank != ncols - 1:
        return None
    free_col = next(c for c in range(ncols) if c not in pivots)
    sol = [Fraction(0)] * ncols
    sol[free_col] = Fraction(1)
    for r, col in enumerate(pivots):
        sol[col] = -a[r][free_col]
    denom = 1
    for x in sol:
        denom = denom * x.denominator // gcd(denom, x.denominator)
    ints = [int(x * denom) for x in sol]
    return primitive_vector(tuple(ints))


if __name__ == "__main__":
    import doctest

    doctest.testmod()
