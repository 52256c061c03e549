"""A small expression language naming the group constructions.

Grammar (whitespace between tokens is ignored)::

    expr    = term , { operator , term } ;          (* left-associative *)
    operator = "wr" | "(x)" | "x" | "+" ;
    term    = leaf | "(" , expr , ")" ;
    leaf    = "GL" , "(" , int , "," , int , ")"
            | "GammaL" , "(" , int , "," , int , [ "^" , int ] , ")"
            | "E" , "(" , int , "," , int , "," , int , "," , variant , ")"
            | "Sym" , "(" , int , ")"
            | "Cyc" , "(" , int , ")"
            | "counterexample" ;
    variant = "+" | "-" | "s" ;

``wr`` is the wreath product with the right operand as top group, ``(x)``
the tensor product (``x`` is accepted only between ``E`` leaves) and ``+``
the direct product.  All operators share one precedence level, so
``A wr B wr C`` means ``(A wr B) wr C``; a top group that is itself a wreath
product must be parenthesised.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .algebra import FieldError, prime_power
from .constructions import (
    ExtraspecialSpec,
    PreconditionError,
    build_counterexample,
    build_extraspecial,
    build_gl1,
    build_semilinear,
    build_wreath_imprimitive,
    cyclic_group,
    direct_product,
    perm_wreath,
    symmetric_group,
    tensor_groups,
)
from .groups import GroupError, GroupHandle


class ParseError(ValueError):
    """Syntax error at a byte offset of the input."""

    def __init__(self, message: str, offset: int, expected: str | None = None):
        self.message = message
        self.offset = offset
        self.expected = expected
        super().__init__(f"offset {offset}: {message}")


class ElaborationError(ValueError):
    """A well-formed expression whose construction preconditions fail."""

    def __init__(self, message: str, node: "Expr"):
        self.message = message
        self.node = node
        super().__init__(f"{to_text(node)} (offset {node.offset}): {message}")


# -- syntax tree -----------------------------------------------------------------------------

@dataclass(frozen=True)
class Leaf:
    kind: str                      # GL, GammaL, E, Sym, Cyc, counterexample
    args: tuple = ()
    offset: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Binary:
    op: str                        # wreath, tensor, direct
    left: "Expr"
    right: "Expr"
    offset: int = field(default=0, compare=False)


Expr = Leaf | Binary

_OPS = {"wr": "wreath", "(x)": "tensor", "x": "tensor", "+": "direct"}
_OP_TEXT = {"wreath": "wr", "tensor": "(x)", "direct": "+"}
_LEAF_ARITY = {"GL": 2, "GammaL": 2, "E": 4, "Sym": 1, "Cyc": 1, "counterexample": 0}


def to_text(e: Expr) -> str:
    """Canonical text; parsing it gives back an equal tree."""
    if isinstance(e, Leaf):
        if e.kind == "counterexample":
            return "counterexample"
        if e.kind == "GammaL":
            n, (q, d) = e.args[0], e.args[1]
            return f"GammaL({n},{q}^{d})" if d is not None else f"GammaL({n},{q})"
        if e.kind == "E":
            r, m, q, v = e.args
            return f"E({r},{m},{q},{v})"
        return f"{e.kind}({','.join(map(str, e.args))})"
    right = to_text(e.right)
    if isinstance(e.right, Binary):
        right = f"({right})"
    return f"{to_text(e.left)} {_OP_TEXT[e.op]} {right}"


# -- tokens ---------------------------------------------------------------------------------

@dataclass(frozen=True)
class Token:
    kind: str      # name, int, sym, op, end
    text: str
    offset: int


_TOKEN_RE = re.compile(r"\s*(?:(?P<op>\(x\))|(?P<int>\d+)|(?P<name>[A-Za-z]+)|(?P<sym>[(),^+\-]))")


def tokenize(text: str) -> list[Token]:
    out = []
    pos = 0
    n = len(text)
    while True:
        while pos < n and text[pos].isspace():
            pos += 1
        if pos >= n:
            break
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", _byte_offset(text, pos))
        kind = m.lastgroup
        start = m.start(kind)
        out.append(Token(kind, m.group(kind), _byte_offset(text, start)))
        pos = m.end()
    out.append(Token("end", "", len(text.encode())))
    return out


def _byte_offset(text: str, pos: int) -> int:
    return len(text[:pos].encode())


# -- parser ---------------------------------------------------------------------------------

class _Parser:
    def __init__(self, text: str):
        self.toks = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def fail(self, expected: str):
        t = self.tok
        found = "end of input" if t.kind == "end" else repr(t.text)
        raise ParseError(f"expected {expected} but found {found}", t.offset, expected)

    def take(self, text: str) -> Token:
        if self.tok.text != text or self.tok.kind == "end":
            self.fail(repr(text))
        t = self.tok
        self.i += 1
        return t

    def integer(self) -> int:
        t = self.tok
        if t.kind != "int":
            self.fail("a positive integer")
        value = int(t.text)
        if value <= 0:
            raise ParseError("numeric literals must be positive", t.offset, "a positive integer")
        self.i += 1
        return value

    def parse(self) -> Expr:
        e = self.expr()
        if self.tok.kind != "end":
            self.fail("an operator ('wr', '(x)', 'x', '+') or end of input")
        return e

    def expr(self) -> Expr:
        left = self.term()
        while True:
            t = self.tok
            op = None
            if t.kind == "op" or (t.kind == "sym" and t.text == "+"):
                op = t.text
            elif t.kind == "name" and t.text in ("wr", "x"):
                op = t.text
            if op is None:
                return left
            self.i += 1
            right = self.term()
            if op == "x" and not (_all_extraspecial(left) and _is_e_leaf(right)):
                raise ParseError("'x' is a tensor alias only between E(...) leaves; use '(x)'",
                                 t.offset, "'(x)'")
            left = Binary(_OPS[op], left, right, t.offset)

    def term(self) -> Expr:
        t = self.tok
        if t.kind == "sym" and t.text == "(":
            self.i += 1
            e = self.expr()
            self.take(")")
            return e
        if t.kind == "name" and t.text in _LEAF_ARITY:
            return self.leaf()
        self.fail("a group leaf (GL, GammaL, E, Sym, Cyc, counterexample) or '('")

    def leaf(self) -> Leaf:
        t = self.tok
        self.i += 1
        kind = t.text
        if kind == "counterexample":
            return Leaf(kind, (), t.offset)
        self.take("(")
        if kind == "GammaL":
            n = self.integer()
            self.take(",")
            q = self.integer()
            d = None
            if self.tok.text == "^":
                self.i += 1
                d = self.integer()
            self.take(")")
            return Leaf(kind, (n, (q, d)), t.offset)
        if kind == "E":
            r = self.integer()
            self.take(",")
            m = self.integer()
            self.take(",")
            q = self.integer()
            self.take(",")
            v = self.tok
            if v.text not in ("+", "-", "s"):
                self.fail("a variant '+', '-' or 's'")
            self.i += 1
            self.take(")")
            return Leaf(kind, (r, m, q, v.text), t.offset)
        args = [self.integer()]
        for _ in range(_LEAF_ARITY[kind] - 1):
            self.take(",")
            args.append(self.integer())
        self.take(")")
        return Leaf(kind, tuple(args), t.offset)


def _is_e_leaf(e: Expr) -> bool:
    return isinstance(e, Leaf) and e.kind == "E"


def _all_extraspecial(e: Expr) -> bool:
    if isinstance(e, Leaf):
        return e.kind == "E"
    return e.op == "tensor" and _all_extraspecial(e.left) and _all_extraspecial(e.right)


def parse(text: str) -> Expr:
    """Parse an expression; raises :class:`ParseError` with a byte offset."""
    return _Parser(text).parse()


# -- elaboration ----------------------------------------------------------------------------

def _is_permutation_group(G: GroupHandle) -> bool:
    return not G.linear


def _elaborate_leaf(e: Leaf) -> GroupHandle:
    if e.kind == "counterexample":
        return build_counterexample()
    if e.kind in ("Sym", "Cyc"):
        (k,) = e.args
        return symmetric_group(k) if e.kind == "Sym" else cyclic_group(k)
    if e.kind == "GL":
        n, q = e.args
        if n != 1:
            raise ElaborationError(f"only GL(1,q) is available, not dimension {n}", e)
        _prime_power_or_fail(q, e)
        return build_gl1(q)
    if e.kind == "GammaL":
        n, (q, d) = e.args
        if n != 1:
            raise ElaborationError(f"only GammaL(1,...) is available, not dimension {n}", e)
        if d is None:
            p, k = _prime_power_or_fail(q, e)
            return build_semilinear(p, k)
        _prime_power_or_fail(q, e)
        return build_semilinear(q, d)
    if e.kind == "E":
        r, m, q, v = e.args
        try:
            return build_extraspecial(ExtraspecialSpec(r, m, q, v))
        except PreconditionError as exc:
            raise ElaborationError(str(exc), e) from None
    raise ElaborationError(f"unknown leaf {e.kind}", e)  # pragma: no cover


def _prime_power_or_fail(q: int, e: Leaf):
    try:
        return prime_power(q)
    except FieldError:
        raise ElaborationError(f"{q} is not a prime power, so there is no field of that order", e) from None


def elaborate(e: Expr) -> GroupHandle:
    """Build the group named by ``e``, reporting the first violated precondition."""
    if isinstance(e, Leaf):
        return _elaborate_leaf(e)
    A = elaborate(e.left)
    B = elaborate(e.right)
    try:
        if e.op == "wreath":
            if not _is_permutation_group(B):
                raise ElaborationError("the top group of a wreath product must be a permutation group", e)
            if A.linear:
                if isinstance(e.left, Leaf) and e.left.kind == "GL" and e.left.args[1] == 2:
                    raise ElaborationError(
                        "GL(1,2) wr T is reducible; the wreath product is irreducible only for q > 2", e)
                return build_wreath_imprimitive(A, B, name=to_text(e))
            return perm_wreath(A, B)
        if e.op == "tensor":
            if not (A.linear and B.linear):
                raise ElaborationError("tensor factors must be matrix groups", e)
            return tensor_groups([A, B], name=to_text(e))
        if e.op == "direct":
            return direct_product(A, B)
    except ElaborationError:
        raise
    except (GroupError, FieldError) as exc:
        raise ElaborationError(str(exc), e) from None
    raise ElaborationError(f"unknown operator {e.op}", e)  # pragma: no cover


def build(text: str) -> GroupHandle:
    """Parse then elaborate."""
    return elaborate(parse(text))
