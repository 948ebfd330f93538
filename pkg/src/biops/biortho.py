"""The bi-orthogonal polynomial pair {P_n}, {Q_n}, their normalization,
and the first-moment band matrices.

P_n = (e1 - alpha)(e1 - alpha*beta)^(n-1) and
Q_n = (e2 - beta)(e2 - alpha*beta)^(n-1) (monic, P_0 = Q_0 = 1) satisfy
L(P_n (x) Q_m) = Lambda_n * delta_{n,m} with
Lambda_n = (alpha*beta)^(2n-1) (alpha+beta-1) for n >= 1, Lambda_0 = 1.

sqrt(Lambda_n) is exact in the kappa ring: (alpha*beta)^(n-1) * kappa.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateParameters, InexactDivision
from .report import CheckReport
from .ring import (Poly2, KappaElem, ZERO, ONE, ALPHA, BETA, AB,
                   K_ZERO, K_ONE, KAPPA)
from .tensor import TensorElem, linear_form
from .bimoment import build_bimoment, det_fraction_free


@dataclass(frozen=True)
class UniPoly:
    """Polynomial in a single generator; coeffs[k] multiplies generator^k."""

    variable: str  # "e1" or "e2"
    coeffs: tuple  # tuple of Poly2, trailing (leading) coefficient nonzero

    def __post_init__(self):
        if self.variable not in ("e1", "e2"):
            raise ValueError("variable must be 'e1' or 'e2'")

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == ONE

    def to_tensor(self):
        g = 1 if self.variable == "e1" else 2
        return TensorElem({(g,) * k: c for k, c in enumerate(self.coeffs) if c})

    def shift_mul(self, c):
        """Multiply by (generator - c)."""
        coeffs = [ZERO] + list(self.coeffs)
        for k, ck in enumerate(self.coeffs):
            coeffs[k] = coeffs[k] - c * ck
        return UniPoly(self.variable, tuple(coeffs))

    def eval_poly(self, value):
        """Evaluate with a Poly2 substituted for the generator."""
        out = ZERO
        for c in reversed(self.coeffs):
            out = out * value + c
        return out

    def to_obj(self):
        return {
            "variable": self.variable,
            "coeffs": [c.to_obj() for c in self.coeffs],
        }


def _product_form(variable, first_root, n):
    p = UniPoly(variable, (ONE,))
    if n == 0:
        return p
    p = p.shift_mul(first_root)
    for _ in range(n - 1):
        p = p.shift_mul(AB)
    return p


def p_explicit(n):
    """P_n = (e1 - alpha)(e1 - alpha*beta)^(n-1), P_0 = 1."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    return _product_form("e1", ALPHA, n)


def q_explicit(n):
    """Q_n = (e2 - beta)(e2 - alpha*beta)^(n-1), Q_0 = 1."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    return _product_form("e2", BETA, n)


def _minor_det(grid, skip_row, rows, cols):
    sub = [[grid[i][j] for j in cols] for i in rows if i != skip_row]
    return det_fraction_free(sub)


def p_cramer(n):
    """P_n by Cramer's rule: Laplace expansion of the bordered bi-moment
    determinant along its symbolic last column, divided by det B^(n-1)."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    if n == 0:
        return UniPoly("e1", (ONE,))
    B = build_bimoment(n).grid()
    denom = det_fraction_free([row[:n] for row in B[:n]])
    coeffs = []
    cols = list(range(n))
    for i in range(n + 1):
        sign = 1 if (i + n) % 2 == 0 else -1
        minor = _minor_det(B, i, range(n + 1), cols)
        coeffs.append((sign * minor).exact_div(denom))
    return UniPoly("e1", tuple(coeffs))


def q_cramer(n):
    """Q_n: mirror of p_cramer with the symbolic bordered last row."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    if n == 0:
        return UniPoly("e2", (ONE,))
    B = build_bimoment(n).grid()
    denom = det_fraction_free([row[:n] for row in B[:n]])
    coeffs = []
    for j in range(n + 1):
        sign = 1 if (n + j) % 2 == 0 else -1
        sub = [[B[i][c] for c in range(n + 1) if c != j] for i in range(n)]
        coeffs.append((sign * det_fraction_free(sub)).exact_div(denom))
    return UniPoly("e2", tuple(coeffs))


def lambda_n(n):
    """Lambda_0 = 1; Lambda_n = (alpha*beta)^(2n-1) (alpha+beta-1), n >= 1."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    if n == 0:
        return ONE
    return AB ** (2 * n - 1) * (ALPHA + BETA - 1)


def sqrt_lambda(n):
    """Exact square root of Lambda_n in the kappa ring:
    1 for n = 0, (alpha*beta)^(n-1) * kappa for n >= 1."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    if n == 0:
        return K_ONE
    return KappaElem(ZERO, AB ** (n - 1))


def normalized_p(n):
    """P_n / sqrt(Lambda_n) as a common-denominator fraction over the
    kappa ring: numerator coefficients c_i * sqrt(Lambda_n), denominator
    Lambda_n (since 1/sqrt(Lambda_n) = sqrt(Lambda_n)/Lambda_n)."""
    return _normalized(p_explicit(n), n)


def normalized_q(n):
    return _normalized(q_explicit(n), n)


@dataclass(frozen=True)
class NormalizedPoly:
    variable: str
    numerators: tuple  # KappaElem per power of the generator
    denominator: Poly2

    def to_obj(self):
        return {
            "variable": self.variable,
            "numerators": [c.to_obj() for c in self.numerators],
            "denominator": self.denominator.to_obj(),
        }


def _normalized(p, n):
    s = sqrt_lambda(n)
    nums = tuple(KappaElem(c) * s for c in p.coeffs)
    return NormalizedPoly(p.variable, nums, lambda_n(n))


def check_orthogonality(N):
    """Verify L(P_n (x) Q_m) = Lambda_n * delta_{n,m} for all n,m <= N."""
    rep = CheckReport(f"bi-orthogonality n,m <= {N}")
    for n in range(N + 1):
        pn = p_explicit(n).to_tensor()
        for m in range(N + 1):
            val = linear_form(pn * q_explicit(m).to_tensor())
            want = lambda_n(n) if n == m else ZERO
            rep.record(val == want, f"L(P{n} Q{m}) != expected")
    return rep


def recurrence_check(N):
    """Verify P_{n+1} = (e1 - ab) P_n and Q_{n+1} = (e2 - ab) Q_n for
    1 <= n < N, plus the initial values P_1, Q_1."""
    rep = CheckReport(f"first-order recurrences n < {N}")
    rep.record(p_explicit(1) == UniPoly("e1", (-ALPHA, ONE)), "P1 != e1 - a")
    rep.record(q_explicit(1) == UniPoly("e2", (-BETA, ONE)), "Q1 != e2 - b")
    for n in range(1, N):
        rep.record(p_explicit(n + 1) == p_explicit(n).shift_mul(AB),
                   f"P{n + 1} recurrence")
        rep.record(q_explicit(n + 1) == q_explicit(n).shift_mul(AB),
                   f"Q{n + 1} recurrence")
    return rep


# --- first-moment band matrices ------------------------------------------

@dataclass(frozen=True)
class MomentBand:
    """Banded (bandwidth <= 1) truncation of an infinite moment matrix.

    diag has dim entries; sup/sub have dim-1 (entry k sits at
    (k, k+1) / (k+1, k) respectively). Entries are KappaElem.
    """

    kind: str
    dim: int
    diag: tuple
    sup: tuple
    sub: tuple

    def entry(self, i, j):
        if not (0 <= i < self.dim and 0 <= j < self.dim):
            raise IndexError("band index out of range")
        if i == j:
            return self.diag[i]
        if j == i + 1:
            return self.sup[i]
        if i == j + 1:
            return self.sub[j]
        return K_ZERO

    def dense(self):
        return [[self.entry(i, j) for j in range(self.dim)]
                for i in range(self.dim)]

    def to_obj(self):
        return {
            "kind": self.kind,
            "dim": self.dim,
            "diag": [e.to_obj() for e in self.diag],
            "super": [e.to_obj() for e in self.sup],
            "sub": [e.to_obj() for e in self.sub],
        }


def _kp(p):
    return KappaElem(p)


def first_moment_matrices(dim):
    """Closed-form X, Y, Xbar, Ybar, Xhat, Yhat truncated to dim x dim.

    X[n][m] = L(P_n e1 Q_m): alpha*Lambda_0 at (0,0), ab*Lambda_n on the
    diagonal, Lambda_{n+1} on the superdiagonal; Y is the transpose pattern.
    Xbar/Ybar are the column-/row-scaled bidiagonal forms, Xhat/Yhat the
    bi-orthonormal ones with the single kappa entry at (0,1)/(1,0).
    """
    if dim < 2:
        raise ValueError("dim must be at least 2")
    lam = [lambda_n(n) for n in range(dim + 1)]
    zdiag = [_kp(ALPHA * lam[0])] + [_kp(AB * lam[n]) for n in range(1, dim)]
    xsup = [_kp(lam[n + 1]) for n in range(dim - 1)]
    X = MomentBand("X", dim, tuple(zdiag), tuple(xsup), (K_ZERO,) * (dim - 1))
    ydiag = [_kp(BETA * lam[0])] + [_kp(AB * lam[n]) for n in range(1, dim)]
    ysub = [_kp(lam[n + 1]) for n in range(dim - 1)]
    Y = MomentBand("Y", dim, tuple(ydiag), (K_ZERO,) * (dim - 1), tuple(ysub))

    bar_diag_x = (_kp(ALPHA),) + tuple(_kp(AB) for _ in range(dim - 1))
    Xbar = MomentBand("Xbar", dim, bar_diag_x,
                      (K_ONE,) * (dim - 1), (K_ZERO,) * (dim - 1))
    bar_diag_y = (_kp(BETA),) + tuple(_kp(AB) for _ in range(dim - 1))
    Ybar = MomentBand("Ybar", dim, bar_diag_y,
                      (K_ZERO,) * (dim - 1), (K_ONE,) * (dim - 1))

    hat_off = (KAPPA,) + tuple(_kp(AB) for _ in range(dim - 2))
    Xhat = MomentBand("Xhat", dim, bar_diag_x, hat_off, (K_ZERO,) * (dim - 1))
    Yhat = MomentBand("Yhat", dim, bar_diag_y, (K_ZERO,) * (dim - 1), hat_off)
    return X, Y, Xbar, Ybar, Xhat, Yhat


def moment_consistency(dim):
    """Cross-check the closed-form bands against direct evaluations of
    L(P_n e1 Q_m) and L(P_n e2 Q_m), and the expansion identity
    P_n * e1 = sum_k Xbar[n][k] P_k."""
    from .tensor import E1, E2

    rep = CheckReport(f"first-moment consistency dim {dim}")
    X, Y, Xbar, Ybar, Xhat, Yhat = first_moment_matrices(dim)
    ps = [p_explicit(n) for n in range(dim + 1)]
    qs = [q_explicit(m) for m in range(dim)]
    pt = [p.to_tensor() for p in ps]
    qt = [q.to_tensor() for q in qs]
    slam = [sqrt_lambda(n) for n in range(dim)]
    for n in range(dim):
        for m in range(dim):
            xval = linear_form(pt[n] * E1 * qt[m])
            yval = linear_form(pt[n] * E2 * qt[m])
            rep.record(KappaElem(xval) == X.entry(n, m), f"X[{n}][{m}]")
            rep.record(KappaElem(yval) == Y.entry(n, m), f"Y[{n}][{m}]")
            # normalized bands, cross-multiplied to stay in the kappa ring
            rep.record(Xhat.entry(n, m) * slam[n] * slam[m] == KappaElem(xval),
                       f"Xhat[{n}][{m}]")
            rep.record(Yhat.entry(n, m) * slam[n] * slam[m] == KappaElem(yval),
                       f"Yhat[{n}][{m}]")
    for n in range(dim - 1):
        lhs = UniPoly("e1", (ZERO,) + tuple(ps[n].coeffs))
        acc = [ZERO] * (n + 2)
        for k in range(n + 2):
            coeff = Xbar.entry(n, k)
            if coeff.is_zero():
                continue
            for d, c in enumerate(ps[k].coeffs):
                acc[d] = acc[d] + coeff.a * c
        rep.record(tuple(acc) == lhs.coeffs, f"P{n}*e1 expansion")
    return rep


# --- numeric instantiation ------------------------------------------------

def require_generic_point(a, b):
    """Reject rational parameter points where the BiOPS degenerate
    (Lambda_n = 0): alpha*beta = 0 or alpha + beta = 1."""
    a, b = Fraction(a), Fraction(b)
    if a * b == 0 or a + b == 1:
        raise DegenerateParameters(
            f"(alpha, beta) = ({a}, {b}) lies on the degenerate locus "
            "alpha*beta*(alpha+beta-1) = 0"
        )
    return a, b


def lambda_value(n, a, b):
    """Lambda_n at a rational point, refusing the degenerate locus."""
    a, b = require_generic_point(a, b)
    return lambda_n(n).eval(a, b)


def band_values(band, a, b):
    """Numeric MomentBand entries as (rational, rational) kappa pairs."""
    a, b = require_generic_point(a, b)
    return {
        "diag": [e.eval(a, b) for e in band.diag],
        "super": [e.eval(a, b) for e in band.sup],
        "sub": [e.eval(a, b) for e in band.sub],
    }
