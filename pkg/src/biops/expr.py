"""Recursive-descent parser and evaluator for the tensor-algebra DSL.

Grammar (whitespace insensitive):

    expr    := term (('+' | '-') term)*
    term    := '-' term | product
    product := power ('*' power)*
    power   := atom ('^' INT)?
    atom    := 'e1' | 'e2' | 'a' | 'b' | INT
             | 'P' '(' INT ')' | 'Q' '(' INT ')' | '(' expr ')'

'*' is the (noncommutative) tensor product between generator-bearing
factors and scalar multiplication when one side is scalar; scalars
commute past everything.  '^' takes a nonnegative integer literal.
Precedence: '^' > '*' > unary '-' > binary '+'/'-'.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParseError
from .ring import Poly2, ALPHA, BETA
from .tensor import TensorElem
from .biortho import p_explicit, q_explicit


# --- AST -------------------------------------------------------------------

@dataclass(frozen=True)
class Gen:
    which: int  # 1 or 2


@dataclass(frozen=True)
class ScalarPoly:
    # only 'a', 'b' and integer literals occur as parsed scalars
    source: str


@dataclass(frozen=True)
class PPoly:
    n: int


@dataclass(frozen=True)
class QPoly:
    n: int


@dataclass(frozen=True)
class Sum:
    parts: tuple


@dataclass(frozen=True)
class Product:
    parts: tuple


@dataclass(frozen=True)
class Power:
    base: object
    exponent: int


@dataclass(frozen=True)
class Negation:
    inner: object


# --- tokenizer -------------------------------------------------------------

_SIMPLE = {"+", "-", "*", "^", "(", ")"}


def _tokenize(src):
    tokens = []  # (kind, text, 1-based position)
    i = 0
    n = len(src)
    while i < n:
        ch = src[i]
        if ch.isspace():
            i += 1
            continue
        pos = i + 1
        if ch in _SIMPLE:
            tokens.append((ch, ch, pos))
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and src[j].isdigit():
                j += 1
            tokens.append(("int", src[i:j], pos))
            i = j
        elif src.startswith("e1", i):
            tokens.append(("e1", "e1", pos))
            i += 2
        elif src.startswith("e2", i):
            tokens.append(("e2", "e2", pos))
            i += 2
        elif ch in "abPQ":
            tokens.append((ch, ch, pos))
            i += 1
        else:
            raise ParseError(pos, f"unexpected character {ch!r}")
    tokens.append(("end", "", n + 1))
    return tokens


class _Parser:
    def __init__(self, src):
        self.tokens = _tokenize(src)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind, what=None):
        tok = self.next()
        if tok[0] != kind:
            raise ParseError(tok[2], f"expected {what or kind}, found "
                             f"{tok[1] or 'end of input'!r}", (kind,))
        return tok

    def parse(self):
        e = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(tok[2], f"unexpected {tok[1]!r} after expression")
        return e

    def expr(self):
        parts = [self.term()]
        while self.peek()[0] in ("+", "-"):
            op = self.next()[0]
            t = self.term()
            parts.append(Negation(t) if op == "-" else t)
        return parts[0] if len(parts) == 1 else Sum(tuple(parts))

    def term(self):
        if self.peek()[0] == "-":
            self.next()
            return Negation(self.term())
        return self.product()

    def product(self):
        parts = [self.power()]
        while self.peek()[0] == "*":
            self.next()
            parts.append(self.power())
        return parts[0] if len(parts) == 1 else Product(tuple(parts))

    def power(self):
        base = self.atom()
        if self.peek()[0] == "^":
            self.next()
            tok = self.expect("int", "a nonnegative integer exponent")
            return Power(base, int(tok[1]))
        return base

    def atom(self):
        kind, text, pos = self.next()
        if kind == "e1":
            return Gen(1)
        if kind == "e2":
            return Gen(2)
        if kind in ("a", "b"):
            return ScalarPoly(kind)
        if kind == "int":
            return ScalarPoly(text)
        if kind in ("P", "Q"):
            self.expect("(", "'('")
            n = self.expect("int", "a nonnegative integer index")
            self.expect(")", "')'")
            node = PPoly if kind == "P" else QPoly
            return node(int(n[1]))
        if kind == "(":
            e = self.expr()
            self.expect(")", "')'")
            return e
        raise ParseError(pos, f"expected an atom, found {text or 'end of input'!r}")


def parse(src):
    """Parse source text to an AST; raises ParseError with a 1-based column."""
    return _Parser(src).parse()


# --- pretty printer and evaluator -------------------------------------------

def pretty(node):
    if isinstance(node, Gen):
        return f"e{node.which}"
    if isinstance(node, ScalarPoly):
        return node.source
    if isinstance(node, PPoly):
        return f"P({node.n})"
    if isinstance(node, QPoly):
        return f"Q({node.n})"
    if isinstance(node, Sum):
        out = pretty(node.parts[0])
        for p in node.parts[1:]:
            if isinstance(p, Negation):
                out += " - " + pretty(p.inner)
            else:
                out += " + " + pretty(p)
        return f"({out})"
    if isinstance(node, Product):
        return "*".join(pretty(p) for p in node.parts)
    if isinstance(node, Power):
        base = pretty(node.base)
        if isinstance(node.base, (Product, Power)):
            base = f"({base})"
        return f"{base}^{node.exponent}"
    if isinstance(node, Negation):
        return f"(-{pretty(node.inner)})"
    raise TypeError(f"not an AST node: {node!r}")


def eval_expr(node):
    """Expand an AST into a TensorElem."""
    if isinstance(node, Gen):
        return TensorElem.generator(node.which)
    if isinstance(node, ScalarPoly):
        if node.source == "a":
            return TensorElem.scalar(ALPHA)
        if node.source == "b":
            return TensorElem.scalar(BETA)
        return TensorElem.scalar(Poly2.const(int(node.source)))
    if isinstance(node, PPoly):
        return p_explicit(node.n).to_tensor()
    if isinstance(node, QPoly):
        return q_explicit(node.n).to_tensor()
    if isinstance(node, Sum):
        out = TensorElem.zero()
        for p in node.parts:
            out = out + eval_expr(p)
        return out
    if isinstance(node, Product):
        out = TensorElem.unit()
        for p in node.parts:
            out = out * eval_expr(p)
        return out
    if isinstance(node, Power):
        return eval_expr(node.base) ** node.exponent
    if isinstance(node, Negation):
        return -eval_expr(node.inner)
    raise TypeError(f"not an AST node: {node!r}")
