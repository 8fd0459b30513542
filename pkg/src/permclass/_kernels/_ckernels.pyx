# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled implementations of the hot kernels.

Mirrors _pykernels exactly.  The avoider checks run on C ints (entry
values fit easily); the convolution helpers keep Python-object
coefficients (they may be bignums or Fractions) but compile the loop
machinery.
"""

BACKEND = "cython"

DEF MAXN = 256


def tpoly_mul_acc(list acc, list p, list q):
    """acc[i+j] += p[i] * q[j] for all i, j."""
    cdef Py_ssize_t i, j, np_ = len(p), nq = len(q)
    cdef object pi, qj
    for i in range(np_):
        pi = p[i]
        if pi:
            for j in range(nq):
                qj = q[j]
                if qj:
                    acc[i + j] = acc[i + j] + pi * qj


def series_mul(list a, list b, int order):
    """Truncated Cauchy product of coefficient lists (univariate)."""
    cdef Py_ssize_t i, j, top, na = len(a), nb = len(b)
    cdef object ai, bj
    out = [0] * (order + 1)
    for i in range(na):
        if i > order:
            break
        ai = a[i]
        if ai:
            top = nb - 1
            if order - i < top:
                top = order - i
            for j in range(top + 1):
                bj = b[j]
                if bj:
                    out[i + j] = out[i + j] + ai * bj
    return out


def class_a_child_ok(list q, int v):
    """Avoidance check for Av(2413,3412) with v appended as the last
    entry of q; the prefix already avoids the basis.

      2413 with v as the '3':  exists i<j<k: q[k] < q[i] < v < q[j]
      3412 with v as the '2':  exists i<j<k: q[k] < v < q[i] < q[j]
    """
    cdef int n = len(q) - 1
    if n < 3:
        return True
    if n > MAXN:
        raise ValueError("permutation too long for compiled kernel")
    cdef int buf[MAXN]
    cdef int sufmin[MAXN]
    cdef int j, qj, cur
    for j in range(n):
        buf[j] = q[j]
    cur = buf[n - 1]
    for j in range(n - 1, -1, -1):
        if buf[j] < cur:
            cur = buf[j]
        sufmin[j] = cur
    cdef int max_below = 0
    cdef int min_above = n + 2
    for j in range(n):
        qj = buf[j]
        if qj > v:
            if j + 1 < n and max_below > sufmin[j + 1]:
                return False
            if j + 1 < n and qj > min_above and sufmin[j + 1] < v:
                return False
            if qj < min_above:
                min_above = qj
        elif qj > max_below:
            max_below = qj
    return True


def class_b_child_ok(list q, int v):
    """Avoidance check for Av(1432,2143) with v appended:

      1432 with v as the '2':  exists i<j<k: q[i] < v < q[k] < q[j]
      2143 with v as the '3':  exists i<j<k: q[j] < q[i] < v < q[k]
    """
    cdef int n = len(q) - 1
    if n < 3:
        return True
    cdef int premin = n + 2
    cdef int runmax_after_low = 0
    cdef int max_below = 0
    cdef bint inv_below_v = False
    cdef int k, qk
    for k in range(n):
        qk = q[k]
        if qk > v:
            if runmax_after_low > qk:
                return False
            if inv_below_v:
                return False
        if premin < v and qk > runmax_after_low:
            runmax_after_low = qk
        if qk < v:
            if qk < max_below:
                inv_below_v = True
            elif qk > max_below:
                max_below = qk
        if qk < premin:
            premin = qk
    return True
