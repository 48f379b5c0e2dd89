"""Pure-Python kernels.

These are the reference implementations of the hot inner loops; the Cython
module ``catalanfans._kernels`` mirrors them exactly (same functions, same
results).  See ``catalanfans._backend`` for how one of the two is selected
at import time.

All permutations are tuples in one-line notation with values 1..m.
"""

from bisect import insort


def backend_name():
    return "python"


def inversion_count(perm):
    """Number of pairs i < j with perm[i] > perm[j]."""
    count = 0
    m = len(perm)
    for i in range(m):
        pi = perm[i]
        for j in range(i + 1, m):
            if pi > perm[j]:
                count += 1
    return count


def bruhat_leq(a, b):
    """Sorted-prefix dominance test: a <= b in the Bruhat order.

    For every proper prefix length i, the ascending rearrangement of
    a[:i] must be componentwise <= that of b[:i].
    """
    m = len(a)
    sa = []
    sb = []
    for i in range(m - 1):
        insort(sa, a[i])
        insort(sb, b[i])
        for x, y in zip(sa, sb):
            if x > y:
                return False
    return True


def bruhat_interval(v, w, limit=0):
    """All z with v <= z <= w, in lexicographic order.

    Depth-first search over one-line prefixes; a partial prefix survives
    only while its sorted form is sandwiched between the sorted prefixes
    of v and w, which prunes almost everything outside the interval.
    With limit > 0, returns None as soon as more than `limit` elements
    have been found.
    """
    m = len(v)
    sv = []
    sw = []
    v_prefixes = []
    w_prefixes = []
    for i in range(m):
        insort(sv, v[i])
        insort(sw, w[i])
        v_prefixes.append(tuple(sv))
        w_prefixes.append(tuple(sw))

    out = []
    used = [False] * (m + 1)
    z = []
    pre = []

    def rec(i):
        if i == m:
            out.append(tuple(z))
            return limit <= 0 or len(out) <= limit
        lo = v_prefixes[i]
        hi = w_prefixes[i]
        for val in range(1, m + 1):
            if used[val]:
                continue
            insort(pre, val)
            ok = True
            for j in range(i + 1):
                pj = pre[j]
                if pj < lo[j] or pj > hi[j]:
                    ok = False
                    break
            if ok:
                used[val] = True
                z.append(val)
                alive = rec(i + 1)
                z.pop()
                used[val] = False
                if not alive:
                    pre.remove(val)
                    return False
            pre.remove(val)
        return True

    if not rec(0):
        return None
    return out


def cone_walk(n, vflat, wflat, binv0, x, max_steps):
    """Locate the maximal cone of a rays-in-pairs fan containing x.

    The fan has 2n rays in pairs (column k of vflat / wflat, flattened
    row-major as n blocks of n coordinates); every selection of one ray
    per pair spans a unimodular cone.  Starting from the all-v cone with
    precomputed integer inverse binv0 (row-major), repeatedly expresses
    x in the current basis and swaps the pair of the smallest negative
    coordinate.  Each swap is an exact integer rank-one update; the
    pivot entry is +-1 whenever both cones involved are unimodular.

    Returns (found, selection_bitmask, coefficients, steps); bit k of
    the mask set means the w-side of pair k+1 is selected.  The two
    cones across the wall obtained by dropping pair k select opposite
    rays of that pair, so the pivot entry is exactly -1 whenever the
    input really is a smooth complete fan; any other pivot value (or an
    exhausted step budget) makes the walk report found=False.  A True
    result is always a sound certificate: the returned coefficients are
    the nonnegative coordinates of x in the selected cone's basis.
    """
    binv = list(binv0)
    lam = [0] * n
    for i in range(n):
        row = i * n
        acc = 0
        for j in range(n):
            acc += binv[row + j] * x[j]
        lam[i] = acc
    sel = 0
    steps = 0
    while True:
        k = -1
        for i in range(n):
            if lam[i] < 0:
                k = i
                break
        if k < 0:
            return True, sel, lam, steps
        if steps >= max_steps:
            return False, sel, lam, steps
        steps += 1
        entering = vflat if (sel >> k) & 1 else wflat
        base = k * n
        mu = [0] * n
        for i in range(n):
            row = i * n
            acc = 0
            for j in range(n):
                acc += binv[row + j] * entering[base + j]
            mu[i] = acc
        if mu[k] != -1:
            return False, sel, lam, steps
        rowk = k * n
        for j in range(n):
            binv[rowk + j] = -binv[rowk + j]
        lam[k] = -lam[k]
        for i in range(n):
            if i == k:
                continue
            f = mu[i]
            if f:
                row = i * n
                for j in range(n):
                    binv[row + j] -= f * binv[rowk + j]
                lam[i] -= f * lam[k]
        sel ^= 1 << k
