"""Exact base rings: Z[alpha,beta] and its quadratic extension by kappa.

Poly2 is a sparse integer-coefficient polynomial in the commuting
variables alpha, beta.  KappaElem is an element a + b*kappa of the
extension ring with the reduction rule kappa**2 = alpha*beta*(alpha+beta-1).
Rational point evaluation uses fractions.Fraction (exact).
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InexactDivision
from ._kernels import kernel as _K


def _grlex_key(ij):
    i, j = ij
    return (i + j, j)


class Poly2:
    """Sparse polynomial in Z[alpha, beta], canonical form (no zero terms)."""

    __slots__ = ("_t",)

    def __init__(self, terms=None):
        t = {}
        if terms:
            for (i, j), c in dict(terms).items():
                if i < 0 or j < 0:
                    raise ValueError("negative exponent")
                c = int(c)
                if c:
                    t[(int(i), int(j))] = c
        self._t = t

    @classmethod
    def _raw(cls, t):
        p = object.__new__(cls)
        p._t = t
        return p

    @classmethod
    def const(cls, c):
        return cls._raw({(0, 0): int(c)} if c else {})

    @classmethod
    def monomial(cls, i, j, c=1):
        return cls({(i, j): c})

    @property
    def terms(self):
        return dict(self._t)

    def is_zero(self):
        return not self._t

    def total_degree(self):
        return max((i + j for i, j in self._t), default=-1)

    def __bool__(self):
        return bool(self._t)

    def _coerce(self, other):
        if isinstance(other, Poly2):
            return other
        if isinstance(other, int):
            return Poly2.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Poly2._raw(_K.kadd(self._t, other._t))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Poly2._raw(_K.ksub(self._t, other._t))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Poly2._raw(_K.ksub(other._t, self._t))

    def __neg__(self):
        return Poly2._raw(_K.kneg(self._t))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Poly2._raw(_K.kmul(self._t, other._t))

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def exact_div(self, other):
        other = self._coerce(other)
        if other is NotImplemented or not other:
            raise ZeroDivisionError("polynomial division by zero")
        try:
            return Poly2._raw(_K.kexact_div(self._t, other._t))
        except ValueError as exc:
            raise InexactDivision(str(exc)) from None

    def __eq__(self, other):
        if isinstance(other, int):
            other = Poly2.const(other)
        if not isinstance(other, Poly2):
            return NotImplemented
        return self._t == other._t

    def __hash__(self):
        return hash(tuple(sorted(self._t.items())))

    def eval(self, a, b):
        """Exact value at alpha=a, beta=b (Fraction arithmetic)."""
        a, b = Fraction(a), Fraction(b)
        out = Fraction(0)
        for (i, j), c in self._t.items():
            out += c * a**i * b**j
        return out

    def subs(self, a, b):
        """Substitute Poly2 values for alpha and beta."""
        out = ZERO
        for (i, j), c in self._t.items():
            out = out + c * a**i * b**j
        return out

    def sorted_terms(self):
        return sorted(self._t.items(), key=lambda kv: _grlex_key(kv[0]))

    def to_obj(self):
        return [
            {"a": i, "b": j, "c": str(c)}
            for (i, j), c in self.sorted_terms()
        ]

    @classmethod
    def from_obj(cls, obj):
        return cls({(rec["a"], rec["b"]): int(rec["c"]) for rec in obj})

    def __repr__(self):
        return f"Poly2({self!s})"

    def __str__(self):
        if not self._t:
            return "0"
        parts = []
        for (i, j), c in self.sorted_terms():
            factors = []
            if abs(c) != 1 or (i == 0 and j == 0):
                factors.append(str(abs(c)))
            if i:
                factors.append("a" if i == 1 else f"a^{i}")
            if j:
                factors.append("b" if j == 1 else f"b^{j}")
            mono = "*".join(factors)
            if not parts:
                parts.append(mono if c > 0 else f"-{mono}")
            else:
                parts.append(f"+ {mono}" if c > 0 else f"- {mono}")
        return " ".join(parts)


ZERO = Poly2.const(0)
ONE = Poly2.const(1)
ALPHA = Poly2.monomial(1, 0)
BETA = Poly2.monomial(0, 1)
AB = ALPHA * BETA
# kappa**2 = alpha*beta*(alpha+beta-1)
KAPPA_SQ = AB * (ALPHA + BETA - 1)


class KappaElem:
    """Element a + b*kappa with the eager reduction kappa**2 = KAPPA_SQ."""

    __slots__ = ("a", "b")

    def __init__(self, a, b=ZERO):
        if isinstance(a, int):
            a = Poly2.const(a)
        if isinstance(b, int):
            b = Poly2.const(b)
        self.a = a
        self.b = b

    def is_zero(self):
        return self.a.is_zero() and self.b.is_zero()

    def is_kappa_free(self):
        return self.b.is_zero()

    def __bool__(self):
        return not self.is_zero()

    @staticmethod
    def _coerce(x):
        if isinstance(x, KappaElem):
            return x
        if isinstance(x, (Poly2, int)):
            return KappaElem(x)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return KappaElem(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return KappaElem(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self):
        return KappaElem(-self.a, -self.b)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a1, b1, a2, b2 = self.a, self.b, other.a, other.b
        return KappaElem(a1 * a2 + b1 * b2 * KAPPA_SQ, a1 * b2 + a2 * b1)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = KappaElem(ONE)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b))

    def eval(self, a, b):
        """Exact value as a pair (r, s) meaning r + s*sqrt(ab(a+b-1))."""
        return (self.a.eval(a, b), self.b.eval(a, b))

    def to_obj(self):
        return {"k0": self.a.to_obj(), "k1": self.b.to_obj()}

    @classmethod
    def from_obj(cls, obj):
        return cls(Poly2.from_obj(obj["k0"]), Poly2.from_obj(obj["k1"]))

    def __repr__(self):
        if self.b.is_zero():
            return f"KappaElem({self.a!s})"
        return f"KappaElem(({self.a!s}) + ({self.b!s})*k)"


K_ZERO = KappaElem(ZERO)
K_ONE = KappaElem(ONE)
KAPPA = KappaElem(ZERO, ONE)


# Named operation surface (thin aliases over the operator methods).

def poly_add(p, q):
    return p + q


def poly_mul(p, q):
    return p * q


def poly_exact_div(p, q):
    return p.exact_div(q)


def kappa_mul(x, y):
    return x * y


def poly_eval(p, a, b):
    return p.eval(a, b)
