"""Truncated matrix representation of the shock ring.

e1 and e2 map to the bidiagonal band matrices Xhat and Yhat; a product of
k generator matrices truncated to d x d has an exact top-left
(d - k) x (d - k) block, recorded as valid_block.  The linear form is the
(0,0) entry of the representation, giving an independent second
computation path for L.

Three generator pairs are available:

* "hat"      -- (Xhat, Yhat), the bi-orthonormal pair (contains kappa);
* "bar_col"  -- D (Xhat, Yhat) D^-1 with D = diag(sqrt(Lambda_n)): the
                kappa-free pair whose e1 image is the column-scaled Xbar
                (super-diagonal all 1);
* "bar_row"  -- D^-1 (Xhat, Yhat) D: the kappa-free pair whose e2 image is
                the row-scaled Ybar (sub-diagonal all 1).

The closed-form P_n / Q_n band matrices live in the bar_col / bar_row
pictures respectively.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import TruncationTooSmall
from .report import CheckReport
from .ring import (KappaElem, ZERO, ALPHA, BETA, AB,
                   K_ZERO, K_ONE, KAPPA, KAPPA_SQ)
from .tensor import TensorElem
from .biortho import first_moment_matrices, sqrt_lambda

GENERATOR_REPS = ("hat", "bar_col", "bar_row")


@dataclass(frozen=True)
class RepMatrix:
    """dim x dim truncation with entries in the kappa ring; entries with
    both indices below valid_block agree with the infinite computation."""

    dim: int
    entries: tuple
    valid_block: int

    def entry(self, i, j):
        if i >= self.valid_block or j >= self.valid_block:
            raise TruncationTooSmall(
                f"entry ({i},{j}) outside valid block {self.valid_block}"
            )
        return self.entries[i][j]

    def raw(self, i, j):
        return self.entries[i][j]

    def grid(self):
        return [list(row) for row in self.entries]

    def to_obj(self):
        return {
            "dim": self.dim,
            "valid_block": self.valid_block,
            "entries": [[e.to_obj() for e in row] for row in self.entries],
        }


def _freeze(rows, valid_block):
    dim = len(rows)
    return RepMatrix(dim, tuple(tuple(r) for r in rows), valid_block)


def _zeros(dim):
    return [[K_ZERO] * dim for _ in range(dim)]


def _identity(dim):
    rows = _zeros(dim)
    for i in range(dim):
        rows[i][i] = K_ONE
    return rows


def _matmul(a, b):
    dim = len(a)
    out = _zeros(dim)
    for i in range(dim):
        arow = a[i]
        orow = out[i]
        for k in range(dim):
            aik = arow[k]
            if aik.is_zero():
                continue
            brow = b[k]
            for j in range(dim):
                if not brow[j].is_zero():
                    orow[j] = orow[j] + aik * brow[j]
    return out


def _madd(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def _mscale(a, c):
    return [[c * x for x in row] for row in a]


def generator_matrices(dim, rep="hat"):
    """Truncated images of (e1, e2) in the chosen picture."""
    if rep not in GENERATOR_REPS:
        raise ValueError(f"unknown generator picture {rep!r}")
    _, _, _, _, Xhat, Yhat = first_moment_matrices(dim)
    x = [[Xhat.entry(i, j) for j in range(dim)] for i in range(dim)]
    y = [[Yhat.entry(i, j) for j in range(dim)] for i in range(dim)]
    if rep == "hat":
        return x, y
    # conjugate by D = diag(sqrt(Lambda_n)); ratios of consecutive
    # sqrt(Lambda) are kappa at index 0->1 and alpha*beta afterwards.
    up = [KAPPA] + [KappaElem(AB)] * (dim - 2)  # sqrt(L_{k+1})/sqrt(L_k)
    for k in range(dim - 1):
        r = up[k]
        if rep == "bar_col":
            # superdiag entry /= ratio, subdiag entry *= ratio
            x[k][k + 1] = _div_ratio(x[k][k + 1], r)
            y[k + 1][k] = y[k + 1][k] * r
        else:
            x[k][k + 1] = x[k][k + 1] * r
            y[k + 1][k] = _div_ratio(y[k + 1][k], r)
    return x, y


def _div_ratio(e, r):
    # divide by kappa (r = kappa) or by the polynomial alpha*beta
    if r == KAPPA:
        # e is c*kappa on the band; c*kappa/kappa = c
        if not e.a.is_zero():
            return KappaElem(ZERO, e.a.exact_div(KAPPA_SQ))
        return KappaElem(e.b)
    return KappaElem(e.a.exact_div(r.a), e.b.exact_div(r.a))


def represent(x, dim, rep="hat"):
    """Substitute the generator matrices into every word of x and sum.

    Requires dim >= (max word length) + 2 so the (0,0) entry is exact."""
    if isinstance(x, TensorElem):
        words = x.terms
    else:
        raise TypeError("represent expects a TensorElem")
    maxlen = max((len(w) for w in words), default=0)
    if dim < maxlen + 2:
        raise TruncationTooSmall(
            f"dim {dim} < max word length {maxlen} + 2"
        )
    g1, g2 = generator_matrices(dim, rep)
    total = _zeros(dim)
    for w, coeff in words.items():
        m = _identity(dim)
        for letter in w:
            m = _matmul(m, g1 if letter == 1 else g2)
        total = _madd(total, _mscale(m, KappaElem(coeff)))
    return _freeze(total, dim - maxlen)


def eval_L_matrix(x):
    """L(x) as the (0,0) entry of the matrix representation.

    The result is always kappa-free; a nonzero kappa part is an internal
    bug and raises RuntimeError."""
    dim = max(x.max_word_len() + 2, 2)
    e = represent(x, dim).entry(0, 0)
    if not e.b.is_zero():
        raise RuntimeError("kappa part of L did not cancel")
    return e.a


def pq_rep(n, which, dim):
    """Closed-form band matrix of P_n (which='P') or Q_n (which='Q').

    P_n: 1 at j = i+n, alpha*(beta-1) at j = i+n-1 with j >= n.
    Q_n is the transposed pattern with beta*(alpha-1)."""
    if which not in ("P", "Q"):
        raise ValueError("which must be 'P' or 'Q'")
    if n < 0:
        raise ValueError("index must be nonnegative")
    if dim < n + 2:
        raise TruncationTooSmall(f"dim {dim} < n {n} + 2")
    if n == 0:
        return _freeze(_identity(dim), dim)
    offdiag = ALPHA * (BETA - 1) if which == "P" else BETA * (ALPHA - 1)
    rows = _zeros(dim)
    for i in range(dim):
        j = i + n
        if j < dim:
            rows[i][j] = K_ONE
        j = i + n - 1
        if n <= j < dim:
            rows[i][j] = KappaElem(offdiag)
    if which == "Q":
        rows = [list(col) for col in zip(*rows)]
    return _freeze(rows, dim - n)


def matrix_moment(n, m, g, dim=None):
    """G[n][m] where G = represent(g) in the normalized picture; equals
    L(Phat_n g Qhat_m), i.e. L(P_n g Q_m)/sqrt(Lambda_n Lambda_m)."""
    maxlen = g.max_word_len()
    need = max(n, m) + maxlen + 2
    if dim is None:
        dim = need
    elif dim < need:
        raise TruncationTooSmall(f"dim {dim} < required {need}")
    return represent(g, dim).entry(n, m)


def similarity_check(dim):
    """Assert the three generator pictures are diagonal-similar on valid
    blocks: bar_col = D hat D^-1 and bar_row = D^-1 hat D."""
    rep = CheckReport(f"diagonal similarity dim {dim}")
    slam = [sqrt_lambda(k) for k in range(dim)]
    hat = generator_matrices(dim, "hat")
    col = generator_matrices(dim, "bar_col")
    row = generator_matrices(dim, "bar_row")
    for name, mats, left in (("bar_col", col, True), ("bar_row", row, False)):
        for which in (0, 1):
            for i in range(dim):
                for j in range(dim):
                    # D M D^-1 cross-multiplied: out[i][j]*s_j == s_i*M[i][j]
                    si, sj = (slam[i], slam[j]) if left else (slam[j], slam[i])
                    ok = mats[which][i][j] * sj == si * hat[which][i][j]
                    rep.record(ok, f"{name} gen{which + 1} ({i},{j})")
    return rep


def second_moment(dim):
    """The tridiagonal W[n][m] = L(Phat_n e1 e2 Qhat_m), closed form:
    W00 = ab(a+b), W01 = W10 = ab*kappa, interior diagonal 2(ab)^2,
    interior off-diagonals (ab)^2."""
    if dim < 3:
        raise ValueError("dim must be at least 3")
    rows = _zeros(dim)
    ab2 = AB * AB
    rows[0][0] = KappaElem(AB * (ALPHA + BETA))
    rows[0][1] = rows[1][0] = KappaElem(ZERO, AB)
    for i in range(1, dim):
        rows[i][i] = KappaElem(2 * ab2)
        if i + 1 < dim:
            rows[i][i + 1] = rows[i + 1][i] = KappaElem(ab2)
    return _freeze(rows, dim)


def second_moment_product(dim):
    """W as the matrix product Xhat * Yhat (valid block dim - 2)."""
    g1, g2 = generator_matrices(dim, "hat")
    return _freeze(_matmul(g1, g2), dim - 2)


# --- Chebyshev-like polynomials -------------------------------------------
#
# Univariate polynomials in x with KappaElem coefficients are plain lists
# (index = power of x).

def _up_add(p, q):
    n = max(len(p), len(q))
    out = []
    for k in range(n):
        a = p[k] if k < len(p) else K_ZERO
        b = q[k] if k < len(q) else K_ZERO
        out.append(a + b)
    while out and out[-1].is_zero():
        out.pop()
    return out


def _up_neg(p):
    return [-c for c in p]

def _up_mul(p, q):
    if not p or not q:
        return []
    out = [K_ZERO] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a.is_zero():
            continue
        for j, b in enumerate(q):
            if not b.is_zero():
                out[i + j] = out[i + j] + a * b
    while out and out[-1].is_zero():
        out.pop()
    return out


def _up_scale(p, c):
    return [c * a for a in p]


@dataclass(frozen=True)
class ChebLike:
    """Chebyshev-like sequence from the tridiagonal W.

    reading: "corrected" uses diagonal coefficient (W_nn - x), "printed"
    uses (2 W_nn - x) as literally displayed.  To stay in the kappa ring
    the stored polys[n] is T_n scaled by prod_{k<n} W_{k,k+1} (clearing
    the off-diagonal divisions); with the corrected reading this equals
    the n-th leading principal minor of (xI - W)."""

    reading: str
    polys: tuple  # polys[n] = list of KappaElem coefficients

    def to_obj(self):
        return {
            "reading": self.reading,
            "polys": [[c.to_obj() for c in p] for p in self.polys],
        }


def cheb_like(N, reading="corrected"):
    """Generate T_0..T_N (denominator-cleared, see ChebLike) from the
    three-term recurrence, solved for the highest-index term."""
    if reading not in ("corrected", "printed"):
        raise ValueError("reading must be 'corrected' or 'printed'")
    if N < 0:
        raise ValueError("N must be nonnegative")
    W = second_moment(max(N + 2, 3))
    polys = [[K_ONE]]
    prev = []  # T_{-1} = 0
    x = [K_ZERO, K_ONE]
    for n in range(N):
        wd = W.raw(n, n)
        if reading == "printed":
            wd = wd + wd
        head = _up_mul(_up_add(x, [-wd]), polys[n])
        tail = _up_scale(prev, W.raw(n, n - 1) * W.raw(n - 1, n)) if n >= 1 else []
        nxt = _up_add(head, _up_neg(tail))
        prev = polys[n]
        polys.append(nxt)
    return ChebLike(reading, tuple(tuple(p) for p in polys))


def _cofactor_det(rows):
    n = len(rows)
    if n == 0:
        return [K_ONE]
    if n == 1:
        return rows[0][0]
    out = []
    for j in range(n):
        if not rows[0][j]:
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = _up_mul(rows[0][j], _cofactor_det(minor))
        if j % 2:
            term = _up_neg(term)
        out = _up_add(out, term)
    return out


def principal_minor_polys(N):
    """Independent oracle: chi_n(x) = det of the n x n leading principal
    block of (xI - W), by cofactor expansion, for n = 0..N."""
    W = second_moment(max(N + 1, 3))
    x = [K_ZERO, K_ONE]
    out = [[K_ONE]]
    for n in range(1, N + 1):
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                e = _up_scale([K_ONE], -W.raw(i, j)) if not W.raw(i, j).is_zero() else []
                if i == j:
                    e = _up_add(e, x)
                row.append(e)
            rows.append(row)
        out.append(_cofactor_det(rows))
    return [tuple(p) for p in out]


def cheb_reading_report(N):
    """Determine which recurrence reading reproduces the principal-minor
    characteristic polynomials of W."""
    rep = CheckReport(f"Chebyshev-like recurrence reading, n <= {N}")
    oracle = principal_minor_polys(N)
    for reading in ("corrected", "printed"):
        polys = cheb_like(N, reading).polys
        match = all(list(polys[n]) == list(oracle[n]) for n in range(N + 1))
        rep.note(f"reading '{reading}' {'matches' if match else 'does not match'} "
                 "the principal-minor oracle")
        if reading == "corrected":
            rep.record(match, "corrected reading must match the oracle")
        else:
            rep.record(not match, "printed reading unexpectedly matched")
    return rep
