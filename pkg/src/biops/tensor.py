"""Tensor algebra over {e1, e2}, shock-ring normal ordering, and the
linear form L defined by the two-parameter stationarity equations.

Words are tuples over {1, 2} (1 = e1, 2 = e2); the empty tuple is the
ring unit.  Normal ordering rewrites every adjacent e1*e2 pair via
e1*e2 -> alpha*beta*(e1 + e2) until only words of the form e2^n e1^m
remain.  On those words, L(e2^n e1^m) = beta^n * alpha^m.
"""

from __future__ import annotations

import itertools

from .ring import Poly2, ZERO, ONE, ALPHA, BETA, AB

Word = tuple  # tuple of ints in {1, 2}


def word_from_str(s):
    """Parse a word from a string over {1,2}; empty string is the unit."""
    letters = []
    for ch in s.strip():
        if ch not in "12":
            raise ValueError(f"invalid word letter {ch!r} (expected 1 or 2)")
        letters.append(int(ch))
    return tuple(letters)


def word_to_str(w):
    return "".join(str(x) for x in w)


def _clean(terms):
    return {k: c for k, c in terms.items() if c}


class _LinComb:
    """Shared machinery for finite linear combinations with Poly2 coefficients."""

    __slots__ = ("_t",)

    def __init__(self, terms=None):
        self._t = _clean(dict(terms or {}))

    @property
    def terms(self):
        return dict(self._t)

    def items(self):
        return self._t.items()

    def is_zero(self):
        return not self._t

    def __bool__(self):
        return bool(self._t)

    def __eq__(self, other):
        if not isinstance(other, type(self)):
            return NotImplemented
        return self._t == other._t

    def __hash__(self):
        return hash(frozenset(self._t.items()))

    def _combine(self, other, sign):
        t = dict(self._t)
        for k, c in other._t.items():
            s = t.get(k, ZERO) + (c if sign > 0 else -c)
            if s:
                t[k] = s
            elif k in t:
                del t[k]
        out = object.__new__(type(self))
        out._t = t
        return out

    def __add__(self, other):
        if not isinstance(other, type(self)):
            return NotImplemented
        return self._combine(other, +1)

    def __sub__(self, other):
        if not isinstance(other, type(self)):
            return NotImplemented
        return self._combine(other, -1)

    def __neg__(self):
        out = object.__new__(type(self))
        out._t = {k: -c for k, c in self._t.items()}
        return out

    def scale(self, p):
        """Multiply every coefficient by a Poly2 (or int)."""
        if isinstance(p, int):
            p = Poly2.const(p)
        out = object.__new__(type(self))
        out._t = _clean({k: p * c for k, c in self._t.items()})
        return out


class TensorElem(_LinComb):
    """Element of the tensor algebra: map word -> nonzero Poly2."""

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def unit(cls):
        return cls({(): ONE})

    @classmethod
    def generator(cls, i):
        if i not in (1, 2):
            raise ValueError("generator index must be 1 or 2")
        return cls({(i,): ONE})

    @classmethod
    def from_word(cls, w, coeff=ONE):
        return cls({tuple(w): coeff})

    @classmethod
    def scalar(cls, p):
        if isinstance(p, int):
            p = Poly2.const(p)
        return cls({(): p})

    def __mul__(self, other):
        if isinstance(other, (Poly2, int)):
            return self.scale(other)
        if not isinstance(other, TensorElem):
            return NotImplemented
        t = {}
        for w1, c1 in self._t.items():
            for w2, c2 in other._t.items():
                w = w1 + w2
                s = t.get(w, ZERO) + c1 * c2
                if s:
                    t[w] = s
                elif w in t:
                    del t[w]
        return TensorElem(t)

    def __rmul__(self, other):
        if isinstance(other, (Poly2, int)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = TensorElem.unit()
        for _ in range(n):
            out = out * self
        return out

    def max_word_len(self):
        return max((len(w) for w in self._t), default=0)

    def __repr__(self):
        if not self._t:
            return "TensorElem(0)"
        parts = [
            f"({c!s})*[{word_to_str(w) or '1'}]"
            for w, c in sorted(self._t.items())
        ]
        return "TensorElem(" + " + ".join(parts) + ")"


E1 = TensorElem.generator(1)
E2 = TensorElem.generator(2)


class ShockElem(_LinComb):
    """Element of the shock ring: map (n, m) -> coefficient of e2^n e1^m."""

    @classmethod
    def basis(cls, n, m, coeff=ONE):
        return cls({(n, m): coeff})

    def __mul__(self, other):
        if isinstance(other, (Poly2, int)):
            return self.scale(other)
        if not isinstance(other, ShockElem):
            return NotImplemented
        return shock_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (Poly2, int)):
            return self.scale(other)
        return NotImplemented

    def __repr__(self):
        if not self._t:
            return "ShockElem(0)"
        parts = [
            f"({c!s})*e2^{n}e1^{m}" for (n, m), c in sorted(self._t.items())
        ]
        return "ShockElem(" + " + ".join(parts) + ")"


# --- normal ordering ---------------------------------------------------

_NF_CACHE = {}


def _find_pair(word, leftmost=True):
    rng = range(len(word) - 1)
    for i in (rng if leftmost else reversed(rng)):
        if word[i] == 1 and word[i + 1] == 2:
            return i
    return None


def _tail_form(word):
    # a word with no adjacent (1,2) is exactly e2^n e1^m
    m = 0
    for x in reversed(word):
        if x == 1:
            m += 1
        else:
            break
    return (len(word) - m, m)


def _nf_word(word):
    """Normal-ordered form of a single word, as a (n,m)->Poly2 dict. Memoized."""
    cached = _NF_CACHE.get(word)
    if cached is not None:
        return cached
    pos = _find_pair(word)
    if pos is None:
        res = {_tail_form(word): ONE}
    else:
        u, v = word[:pos], word[pos + 2:]
        res = {}
        for sub in (u + (1,) + v, u + (2,) + v):
            for k, c in _nf_word(sub).items():
                s = res.get(k, ZERO) + AB * c
                if s:
                    res[k] = s
                elif k in res:
                    del res[k]
    _NF_CACHE[word] = res
    return res


def normal_order_word(word, strategy="leftmost", max_steps=None):
    """Uncached single-word normal ordering with a selectable rewrite
    strategy; used to test confluence and termination.

    Returns (result dict, rewrite step count).  Raises RuntimeError if the
    step budget (default 2**len(word)) is exceeded.
    """
    leftmost = strategy == "leftmost"
    if max_steps is None:
        max_steps = 2 ** len(word) if word else 1
    pending = [(word, ONE)]
    done = {}
    steps = 0
    while pending:
        w, coeff = pending.pop()
        pos = _find_pair(w, leftmost=leftmost)
        if pos is None:
            k = _tail_form(w)
            s = done.get(k, ZERO) + coeff
            if s:
                done[k] = s
            elif k in done:
                del done[k]
            continue
        steps += 1
        if steps > max_steps:
            raise RuntimeError("rewrite step budget exceeded")
        u, v = w[:pos], w[pos + 2:]
        pending.append((u + (1,) + v, AB * coeff))
        pending.append((u + (2,) + v, AB * coeff))
    return done, steps


def normal_order(x):
    """Project a TensorElem onto the shock ring (normal-ordered form)."""
    t = {}
    for w, c in x.items():
        for k, cw in _nf_word(w).items():
            s = t.get(k, ZERO) + c * cw
            if s:
                t[k] = s
            elif k in t:
                del t[k]
    return ShockElem(t)


# --- shock ring product -------------------------------------------------

_SMUL_CACHE = {}


def _smul_basis(n, m, k, l):
    if m == 0:
        return {(n + k, l): ONE}
    if k == 0:
        return {(n, m + l): ONE}
    key = (n, m, k, l)
    cached = _SMUL_CACHE.get(key)
    if cached is not None:
        return cached
    res = {}
    for part in (_smul_basis(n, m, k - 1, l), _smul_basis(n, m - 1, k, l)):
        for kk, c in part.items():
            s = res.get(kk, ZERO) + AB * c
            if s:
                res[kk] = s
            elif kk in res:
                del res[kk]
    _SMUL_CACHE[key] = res
    return res


def shock_mul(x, y):
    """Product in the shock ring, by the normal-ordering recursion."""
    t = {}
    for (n, m), c1 in x.items():
        for (k, l), c2 in y.items():
            for kk, c in _smul_basis(n, m, k, l).items():
                s = t.get(kk, ZERO) + c1 * c2 * c
                if s:
                    t[kk] = s
                elif kk in t:
                    del t[kk]
    return ShockElem(t)


# --- the linear form ----------------------------------------------------

_L_CACHE = {}


def _L_word(word):
    cached = _L_CACHE.get(word)
    if cached is None:
        out = ZERO
        for (n, m), c in _nf_word(word).items():
            out = out + c * BETA**n * ALPHA**m
        _L_CACHE[word] = cached = out
    return cached


def linear_form(x):
    """L(x): evaluate via normal ordering, L(e2^n e1^m) = beta^n alpha^m."""
    out = ZERO
    for w, c in x.items():
        out = out + c * _L_word(w)
    return out


def power_sum(L):
    """(e1 + e2)^L expanded: all 2^L words of length L with coefficient 1."""
    if L < 0:
        raise ValueError("L must be nonnegative")
    return TensorElem({w: ONE for w in itertools.product((1, 2), repeat=L)})
