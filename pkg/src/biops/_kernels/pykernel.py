"""Pure-Python arithmetic kernels for sparse bivariate integer polynomials.

A polynomial is represented as a dict mapping an exponent pair ``(i, j)``
(power of alpha, power of beta) to a nonzero Python int.  These four
functions are the hot inner loops of the whole package; ``ckernel.pyx``
provides a compiled drop-in replacement with the same interface.
"""


def kadd(t, u):
    out = dict(t)
    for k, c in u.items():
        s = out.get(k, 0) + c
        if s:
            out[k] = s
        elif k in out:
            del out[k]
    return out


def kneg(t):
    return {k: -c for k, c in t.items()}


def ksub(t, u):
    out = dict(t)
    for k, c in u.items():
        s = out.get(k, 0) - c
        if s:
            out[k] = s
        elif k in out:
            del out[k]
    return out


def kmul(t, u):
    if not t or not u:
        return {}
    if len(t) > len(u):
        t, u = u, t
    out = {}
    for (i1, j1), c1 in t.items():
        for (i2, j2), c2 in u.items():
            k = (i1 + i2, j1 + j2)
            s = out.get(k, 0) + c1 * c2
            if s:
                out[k] = s
            elif k in out:
                del out[k]
    return out


def _lead(t):
    # graded-lex, alpha before beta
    return max(t, key=lambda k: (k[0] + k[1], k[0]))


def kexact_div(p, q):
    """Quotient of p by q when q divides p exactly; ValueError otherwise.

    Long division by a single divisor under the graded-lex order: any
    nonzero multiple of q has a leading term divisible by lead(q), so a
    failed term division proves inexactness.
    """
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    qi, qj = _lead(q)
    qc = q[(qi, qj)]
    rem = dict(p)
    quo = {}
    while rem:
        ri, rj = _lead(rem)
        rc = rem[(ri, rj)]
        if ri < qi or rj < qj or rc % qc:
            raise ValueError("inexact polynomial division")
        mi, mj = ri - qi, rj - qj
        c = rc // qc
        quo[(mi, mj)] = c
        for (i, j), cq in q.items():
            k = (i + mi, j + mj)
            s = rem.get(k, 0) - c * cq
            if s:
                rem[k] = s
            elif k in rem:
                del rem[k]
    return quo
