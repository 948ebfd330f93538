# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled arithmetic kernels for sparse bivariate integer polynomials.

Same interface and semantics as pykernel.py; coefficients stay Python
ints (they must be arbitrary precision), the win is loop/dispatch
overhead on the dict traversals.
"""


def kadd(dict t, dict u):
    cdef dict out = dict(t)
    cdef object k, c, s
    for k, c in u.items():
        s = out.get(k, 0) + c
        if s:
            out[k] = s
        elif k in out:
            del out[k]
    return out


def kneg(dict t):
    cdef dict out = {}
    cdef object k, c
    for k, c in t.items():
        out[k] = -c
    return out


def ksub(dict t, dict u):
    cdef dict out = dict(t)
    cdef object k, c, s
    for k, c in u.items():
        s = out.get(k, 0) - c
        if s:
            out[k] = s
        elif k in out:
            del out[k]
    return out


def kmul(dict t, dict u):
    if not t or not u:
        return {}
    if len(t) > len(u):
        t, u = u, t
    cdef dict out = {}
    cdef Py_ssize_t i1, j1, i2, j2
    cdef object k1, k2, c1, c2, k, s
    for k1, c1 in t.items():
        i1 = (<tuple>k1)[0]
        j1 = (<tuple>k1)[1]
        for k2, c2 in u.items():
            i2 = (<tuple>k2)[0]
            j2 = (<tuple>k2)[1]
            k = (i1 + i2, j1 + j2)
            s = out.get(k, 0) + c1 * c2
            if s:
                out[k] = s
            elif k in out:
                del out[k]
    return out


cdef tuple _lead(dict t):
    cdef object best = None
    cdef Py_ssize_t bi = -1, bj = -1, i, j
    cdef object k
    for k in t:
        i = (<tuple>k)[0]
        j = (<tuple>k)[1]
        if best is None or (i + j, i) > (bi + bj, bi):
            best = k
            bi = i
            bj = j
    return <tuple>best


def kexact_div(dict p, dict q):
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    cdef tuple lq = _lead(q)
    cdef Py_ssize_t qi = lq[0], qj = lq[1]
    cdef object qc = q[lq]
    cdef dict rem = dict(p)
    cdef dict quo = {}
    cdef tuple lr
    cdef Py_ssize_t ri, rj, mi, mj, i, j
    cdef object rc, c, cq, k, kk, s
    while rem:
        lr = _lead(rem)
        ri = lr[0]
        rj = lr[1]
        rc = rem[lr]
        if ri < qi or rj < qj or rc % qc:
            raise ValueError("inexact polynomial division")
        mi = ri - qi
        mj = rj - qj
        c = rc // qc
        quo[(mi, mj)] = c
        for k, cq in q.items():
            i = (<tuple>k)[0]
            j = (<tuple>k)[1]
            kk = (i + mi, j + mj)
            s = rem.get(kk, 0) - c * cq
            if s:
                rem[kk] = s
            elif kk in rem:
                del rem[kk]
    return quo
