# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels, mirroring catalanfans._kernels_py exactly.

Arithmetic runs in C int64.  At the desk scales this package supports
(symmetric groups up to S_10, fans up to dimension 8, probe samples up
to 10**4 in magnitude) every intermediate value fits comfortably; the
pure-Python twin computes with unbounded integers and the equivalence
tests compare the two on the real workloads.
"""

from libc.stdlib cimport free, malloc


def backend_name():
    return "compiled"


def inversion_count(perm):
    cdef int m = len(perm)
    cdef int i, j, count = 0
    cdef long long *vals = <long long *> malloc(m * sizeof(long long))
    if vals == NULL:
        raise MemoryError()
    try:
        for i in range(m):
            vals[i] = perm[i]
        for i in range(m):
            for j in range(i + 1, m):
                if vals[i] > vals[j]:
                    count += 1
        return count
    finally:
        free(vals)


def bruhat_leq(a, b):
    cdef int m = len(a)
    cdef int i, j, pos
    cdef long long x
    cdef bint ok = True
    cdef long long *sa = <long long *> malloc(2 * m * sizeof(long long))
    if sa == NULL:
        raise MemoryError()
    cdef long long *sb = sa + m
    try:
        for i in range(m - 1):
            x = a[i]
            pos = i
            while pos > 0 and sa[pos - 1] > x:
                sa[pos] = sa[pos - 1]
                pos -= 1
            sa[pos] = x
            x = b[i]
            pos = i
            while pos > 0 and sb[pos - 1] > x:
                sb[pos] = sb[pos - 1]
                pos -= 1
            sb[pos] = x
            for j in range(i + 1):
                if sa[j] > sb[j]:
                    ok = False
                    break
            if not ok:
                break
        return bool(ok)
    finally:
        free(sa)


cdef struct IntervalState:
    int m
    long long limit
    long long *v_pref   # m rows of m sorted-prefix entries (row i: length i+1)
    long long *w_pref
    long long *pre      # current sorted prefix
    long long *z        # current one-line prefix
    bint *used


cdef bint _interval_rec(IntervalState *st, int i, list out):
    cdef int m = st.m
    cdef int val, j, pos, pre_len = i
    cdef long long *lo
    cdef long long *hi
    cdef bint ok
    if i == m:
        out.append(tuple([st.z[j] for j in range(m)]))
        return st.limit <= 0 or len(out) <= st.limit
    lo = st.v_pref + i * m
    hi = st.w_pref + i * m
    for val in range(1, m + 1):
        if st.used[val]:
            continue
        pos = pre_len
        while pos > 0 and st.pre[pos - 1] > val:
            st.pre[pos] = st.pre[pos - 1]
            pos -= 1
        st.pre[pos] = val
        ok = True
        for j in range(i + 1):
            if st.pre[j] < lo[j] or st.pre[j] > hi[j]:
                ok = False
                break
        if ok:
            st.used[val] = True
            st.z[i] = val
            ok = _interval_rec(st, i + 1, out)
            st.used[val] = False
            if not ok:
                return False
        # remove val from the sorted prefix again
        j = pos
        while j < pre_len:
            st.pre[j] = st.pre[j + 1]
            j += 1
    return True


def bruhat_interval(v, w, limit=0):
    cdef int m = len(v)
    cdef int i, pos
    cdef long long x
    cdef IntervalState st
    cdef list out = []
    cdef bint alive
    st.m = m
    st.limit = limit
    st.v_pref = <long long *> malloc((2 * m * m + 2 * m + 2) * sizeof(long long))
    if st.v_pref == NULL:
        raise MemoryError()
    st.w_pref = st.v_pref + m * m
    st.pre = st.w_pref + m * m
    st.z = st.pre + m + 1
    st.used = <bint *> malloc((m + 1) * sizeof(bint))
    if st.used == NULL:
        free(st.v_pref)
        raise MemoryError()
    try:
        for i in range(m + 1):
            st.used[i] = False
        for i in range(m):
            # extend row i from row i-1 by insertion
            if i > 0:
                for pos in range(i):
                    st.v_pref[i * m + pos] = st.v_pref[(i - 1) * m + pos]
                    st.w_pref[i * m + pos] = st.w_pref[(i - 1) * m + pos]
            x = v[i]
            pos = i
            while pos > 0 and st.v_pref[i * m + pos - 1] > x:
                st.v_pref[i * m + pos] = st.v_pref[i * m + pos - 1]
                pos -= 1
            st.v_pref[i * m + pos] = x
            x = w[i]
            pos = i
            while pos > 0 and st.w_pref[i * m + pos - 1] > x:
                st.w_pref[i * m + pos] = st.w_pref[i * m + pos - 1]
                pos -= 1
            st.w_pref[i * m + pos] = x
        alive = _interval_rec(&st, 0, out)
        if not alive:
            return None
        return out
    finally:
        free(st.v_pref)
        free(st.used)


def cone_walk(n, vflat, wflat, binv0, x, max_steps):
    cdef int nn = n
    cdef int i, j, k
    cdef long long steps = 0, budget = max_steps
    cdef long long s, f, acc
    cdef unsigned long long sel = 0
    cdef long long *buf = <long long *> malloc(
        (nn * nn * 3 + 3 * nn) * sizeof(long long))
    if buf == NULL:
        raise MemoryError()
    cdef long long *binv = buf
    cdef long long *vr = buf + nn * nn
    cdef long long *wr = vr + nn * nn
    cdef long long *xx = wr + nn * nn
    cdef long long *lam = xx + nn
    cdef long long *mu = lam + nn
    cdef long long *entering
    try:
        for i in range(nn * nn):
            binv[i] = binv0[i]
            vr[i] = vflat[i]
            wr[i] = wflat[i]
        for i in range(nn):
            xx[i] = x[i]
        for i in range(nn):
            acc = 0
            for j in range(nn):
                acc += binv[i * nn + j] * xx[j]
            lam[i] = acc
        while True:
            k = -1
            for i in range(nn):
                if lam[i] < 0:
                    k = i
                    break
            if k < 0:
                return True, sel, [lam[i] for i in range(nn)], steps
            if steps >= budget:
                return False, sel, [lam[i] for i in range(nn)], steps
            steps += 1
            entering = vr if (sel >> k) & 1 else wr
            for i in range(nn):
                acc = 0
                for j in range(nn):
                    acc += binv[i * nn + j] * entering[k * nn + j]
                mu[i] = acc
            if mu[k] != -1:
                return False, sel, [lam[i] for i in range(nn)], steps
            for j in range(nn):
                binv[k * nn + j] = -binv[k * nn + j]
            lam[k] = -lam[k]
            for i in range(nn):
                if i == k:
                    continue
                f = mu[i]
                if f != 0:
                    for j in range(nn):
                        binv[i * nn + j] -= f * binv[k * nn + j]
                    lam[i] -= f * lam[k]
            sel ^= (<unsigned long long> 1) << k
    finally:
        free(buf)
