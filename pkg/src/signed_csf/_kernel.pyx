# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled subset-sum kernel; same contract as ``_kernel_py.subset_type_sums``."""

from cpython.bytes cimport PyBytes_FromStringAndSize
from libc.stdlib cimport malloc, free

DEF MAXN = 255


cdef inline int _find(int v, int* parent, int* parity, int* out_parity) nogil:
    cdef int p = 0
    while parent[v] != v:
        p ^= parity[v]
        v = parent[v]
    out_parity[0] = p
    return v


def subset_type_sums(int n, kinds, us, vs):
    cdef int m = len(kinds)
    if n > MAXN:
        raise ValueError("kernel supports at most 255 vertices")
    if m > 62:
        raise ValueError("kernel supports at most 62 edges")
    cdef int* ek = <int*>malloc(max(m, 1) * sizeof(int))
    cdef int* eu = <int*>malloc(max(m, 1) * sizeof(int))
    cdef int* ev = <int*>malloc(max(m, 1) * sizeof(int))
    cdef int* parent = <int*>malloc(max(n, 1) * sizeof(int))
    cdef int* parity = <int*>malloc(max(n, 1) * sizeof(int))
    cdef int* bad = <int*>malloc(max(n, 1) * sizeof(int))
    cdef int* cnt = <int*>malloc(2 * max(n, 1) * sizeof(int))
    cdef unsigned char* cols = <unsigned char*>malloc(2 * max(n, 1) + 1)
    cdef unsigned char* buf = <unsigned char*>malloc(2 * max(n, 1) + 1)
    cdef int k, v, i, j, pi, pj, r, p, u, ncols, a, b, t, s, sign
    cdef unsigned long long mask, total
    cdef dict acc = {}
    cdef bytes key
    try:
        for k in range(m):
            ek[k] = kinds[k]
            eu[k] = us[k]
            ev[k] = vs[k]
        total = (<unsigned long long>1) << m
        mask = 0
        while mask < total:
            for v in range(n):
                parent[v] = v
                parity[v] = 0
                bad[v] = 0
                cnt[2 * v] = 0
                cnt[2 * v + 1] = 0
            sign = 1
            for k in range(m):
                if not ((mask >> k) & 1):
                    continue
                sign = -sign
                i = _find(eu[k], parent, parity, &pi)
                if ek[k] == 2:
                    bad[i] = 1
                    continue
                j = _find(ev[k], parent, parity, &pj)
                if i == j:
                    if (pi ^ pj) != ek[k]:
                        bad[i] = 1
                else:
                    if i > j:
                        i, j = j, i
                    parent[j] = i
                    parity[j] = pi ^ pj ^ ek[k]
                    bad[i] = bad[i] | bad[j]
            u = 0
            for v in range(n):
                r = _find(v, parent, parity, &p)
                if bad[r]:
                    u += 1
                else:
                    cnt[2 * r + p] += 1
            # gather canonical columns (a >= b), insertion sort descending
            ncols = 0
            for v in range(n):
                if parent[v] == v and not bad[v]:
                    a = cnt[2 * v]
                    b = cnt[2 * v + 1]
                    if a < b:
                        a, b = b, a
                    t = ncols
                    while t > 0 and (cols[2 * (t - 1)] < a or
                                     (cols[2 * (t - 1)] == a and cols[2 * (t - 1) + 1] < b)):
                        cols[2 * t] = cols[2 * (t - 1)]
                        cols[2 * t + 1] = cols[2 * (t - 1) + 1]
                        t -= 1
                    cols[2 * t] = <unsigned char>a
                    cols[2 * t + 1] = <unsigned char>b
                    ncols += 1
            buf[0] = <unsigned char>u
            for s in range(2 * ncols):
                buf[s + 1] = cols[s]
            key = PyBytes_FromStringAndSize(<char*>buf, 2 * ncols + 1)
            acc[key] = acc.get(key, 0) + sign
            mask += 1
    finally:
        free(ek); free(eu); free(ev)
        free(parent); free(parity); free(bad); free(cnt)
        free(cols); free(buf)
    return {kk: vv for kk, vv in acc.items() if vv}
