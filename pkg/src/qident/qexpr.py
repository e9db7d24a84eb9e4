"""A tiny two-sorted expression language over exact q-polynomials.

Polynomial expressions (the main sort) and integer index expressions (the
sort of binomial arguments, exponents, and summation bounds) are kept
apart by the grammar itself:

    expr    := term (('+' | '-') term)*
    term    := factor ('*' factor)*
    factor  := atom ('^' ipow)?
    atom    := INT | 'q' | IDENT | '(' expr ')' | '-' atom
             | 'qbin' '(' iexpr ',' iexpr ')'
             | 'poch' '(' iexpr ')'
             | 'alt' '(' iexpr ')'
             | 'sum' '(' IDENT ',' iexpr ',' iexpr ',' expr ')'
    ipow    := INT | IDENT | ibuiltin '(' iexpr ')' | '-' ipow | '(' iexpr ')'
    iexpr   := iterm (('+' | '-') iterm)*
    iterm   := ifactor ('*' ifactor)*
    ifactor := INT | IDENT | ibuiltin '(' iexpr ')' | '-' ifactor | '(' iexpr ')'
    ibuiltin := 'floor2' | 'pent' | 'pent2' | 'rr5a' | 'rr5b'

An exponent binds to a single index atom, so ``q^2*p`` is q^2 times p;
write ``q^(j*j)`` for composite exponents.  Index builtins: floor2(e) is
floor(e/2) toward minus infinity, pent(j) = j(3j-1)/2, pent2(j) = j(3j+1)/2,
rr5a(j) = j(5j-1)/2, rr5b(j) = j(5j-3)/2.  alt(j) is the polynomial-valued
sign (-1)^j.  ``sum(v, lo, hi, body)`` sums body over v = lo..hi inclusive
(empty when lo > hi); inside the body, v may appear only in index positions.

Evaluation is exact: identifiers are bound to integers supplied by the
caller, unknown ones raise :class:`UnboundVariable`, and a ``^`` whose
exponent evaluates negative raises :class:`EvalNegativePower`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Mapping, Union

from . import identities
from .qbinom import qbin, qbin_floor2
from .qpoly import IntPoly, ONE, ZERO, Q, monomial, pochhammer_qq


class ExprError(Exception):
    """Base class for language-level errors."""


class ParseError(ExprError):
    """Syntax error with position and the token kinds that were expected."""

    def __init__(self, message: str, line: int, col: int, expected: tuple[str, ...] = ()) -> None:
        self.message = message
        self.line = line
        self.col = col
        self.expected = tuple(sorted(expected))
        at = f" at line {line}, column {col}"
        exp = f" (expected one of: {', '.join(self.expected)})" if self.expected else ""
        super().__init__(message + at + exp)


class UnboundVariable(ExprError):
    """An identifier was evaluated without a binding."""

    def __init__(self, name: str) -> None:
        self.name = name
        super().__init__(f"unbound variable {name!r}")


class EvalNegativePower(ExprError):
    """A '^' exponent evaluated to a negative integer."""


INDEX_BUILTINS = {
    "floor2": lambda v: v // 2,
    "pent": identities.pent,
    "pent2": identities.pent2,
    "rr5a": identities.rr5a,
    "rr5b": identities.rr5b,
}

RESERVED = {"q", "qbin", "poch", "sum", "alt", *INDEX_BUILTINS}


# --- AST -------------------------------------------------------------------

@dataclass(frozen=True)
class ILit:
    value: int


@dataclass(frozen=True)
class IVar:
    name: str


@dataclass(frozen=True)
class IAdd:
    left: IndexExpr
    right: IndexExpr


@dataclass(frozen=True)
class ISub:
    left: IndexExpr
    right: IndexExpr


@dataclass(frozen=True)
class IMul:
    left: IndexExpr
    right: IndexExpr


@dataclass(frozen=True)
class INeg:
    arg: IndexExpr


@dataclass(frozen=True)
class ICall:
    func: str
    arg: IndexExpr


IndexExpr = Union[ILit, IVar, IAdd, ISub, IMul, INeg, ICall]


@dataclass(frozen=True)
class IntLit:
    value: int


@dataclass(frozen=True)
class QAtom:
    pass


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Add:
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Sub:
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Mul:
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Neg:
    arg: Expr


@dataclass(frozen=True)
class Pow:
    base: Expr
    exponent: IndexExpr


@dataclass(frozen=True)
class QBin:
    upper: IndexExpr
    lower: IndexExpr


@dataclass(frozen=True)
class Poch:
    arg: IndexExpr


@dataclass(frozen=True)
class Alt:
    arg: IndexExpr


@dataclass(frozen=True)
class Sum:
    var: str
    lo: IndexExpr
    hi: IndexExpr
    body: Expr


Expr = Union[IntLit, QAtom, Var, Add, Sub, Mul, Neg, Pow, QBin, Poch, Alt, Sum]


# --- lexer -----------------------------------------------------------------

@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    line: int
    col: int


_TOKEN_RE = re.compile(r"\s+|(?P<INT>\d+)|(?P<IDENT>[A-Za-z_][A-Za-z0-9_]*)|(?P<OP>[-+*^(),])")


def _tokenize(source: str) -> list[_Token]:
    tokens: list[_Token] = []
    line, col = 1, 1
    pos = 0
    while pos < len(source):
        m = _TOKEN_RE.match(source, pos)
        if m is None:
            raise ParseError(f"unexpected character {source[pos]!r}", line, col)
        text = m.group(0)
        if m.lastgroup == "INT":
            tokens.append(_Token("INT", text, line, col))
        elif m.lastgroup == "IDENT":
            tokens.append(_Token("IDENT", text, line, col))
        elif m.lastgroup == "OP":
            tokens.append(_Token(text, text, line, col))
        newlines = text.count("\n")
        if newlines:
            line += newlines
            col = len(text) - text.rfind("\n")
        else:
            col += len(text)
        pos = m.end()
    tokens.append(_Token("EOF", "", line, col))
    return tokens


# --- parser ----------------------------------------------------------------

_ATOM_STARTS = ("INT", "IDENT", "(", "-")
_IATOM_STARTS = ("INT", "IDENT", "(", "-")


class _Parser:
    def __init__(self, source: str) -> None:
        self.tokens = _tokenize(source)
        self.pos = 0
        self.bound: list[str] = []

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def fail(self, message: str, expected: tuple[str, ...] = ()) -> ParseError:
        tok = self.peek()
        return ParseError(message, tok.line, tok.col, expected)

    def expect(self, kind: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            raise self.fail(f"found {tok.text or 'end of input'!r}", (kind,))
        return self.advance()

    # polynomial sort

    def parse_expr(self) -> Expr:
        node = self.parse_term()
        while self.peek().kind in ("+", "-"):
            op = self.advance()
            right = self.parse_term()
            node = Add(node, right) if op.kind == "+" else Sub(node, right)
        return node

    def parse_term(self) -> Expr:
        node = self.parse_factor()
        while self.peek().kind == "*":
            self.advance()
            node = Mul(node, self.parse_factor())
        return node

    def parse_factor(self) -> Expr:
        node = self.parse_atom()
        if self.peek().kind == "^":
            self.advance()
            node = Pow(node, self.parse_ipow())
        return node

    def parse_atom(self) -> Expr:
        tok = self.peek()
        if tok.kind == "INT":
            return IntLit(int(self.advance().text))
        if tok.kind == "-":
            self.advance()
            return Neg(self.parse_atom())
        if tok.kind == "(":
            self.advance()
            node = self.parse_expr()
            self.expect(")")
            return node
        if tok.kind == "IDENT":
            name = tok.text
            if name == "q":
                self.advance()
                return QAtom()
            if name == "qbin":
                self.advance()
                self.expect("(")
                upper = self.parse_iexpr()
                self.expect(",")
                lower = self.parse_iexpr()
                self.expect(")")
                return QBin(upper, lower)
            if name == "poch":
                self.advance()
                self.expect("(")
                arg = self.parse_iexpr()
                self.expect(")")
                return Poch(arg)
            if name == "alt":
                self.advance()
                self.expect("(")
                arg = self.parse_iexpr()
                self.expect(")")
                return Alt(arg)
            if name == "sum":
                self.advance()
                self.expect("(")
                var_tok = self.expect("IDENT")
                if var_tok.text in RESERVED:
                    raise ParseError(
                        f"{var_tok.text!r} is reserved and cannot be a summation variable",
                        var_tok.line,
                        var_tok.col,
                    )
                self.expect(",")
                lo = self.parse_iexpr()
                self.expect(",")
                hi = self.parse_iexpr()
                self.expect(",")
                self.bound.append(var_tok.text)
                try:
                    body = self.parse_expr()
                finally:
                    self.bound.pop()
                self.expect(")")
                return Sum(var_tok.text, lo, hi, body)
            if name in INDEX_BUILTINS:
                raise self.fail(f"index builtin {name!r} is not a polynomial", _ATOM_STARTS)
            if name in self.bound:
                raise ParseError(
                    f"summation variable {name!r} may only appear in index positions",
                    tok.line,
                    tok.col,
                )
            self.advance()
            return Var(name)
        raise self.fail(f"found {tok.text or 'end of input'!r}", _ATOM_STARTS)

    # index sort

    def parse_iexpr(self) -> IndexExpr:
        node = self.parse_iterm()
        while self.peek().kind in ("+", "-"):
            op = self.advance()
            right = self.parse_iterm()
            node = IAdd(node, right) if op.kind == "+" else ISub(node, right)
        return node

    def parse_iterm(self) -> IndexExpr:
        node = self.parse_ifactor()
        while self.peek().kind == "*":
            self.advance()
            node = IMul(node, self.parse_ifactor())
        return node

    def parse_ifactor(self) -> IndexExpr:
        tok = self.peek()
        if tok.kind == "INT":
            return ILit(int(self.advance().text))
        if tok.kind == "-":
            self.advance()
            return INeg(self.parse_ifactor())
        if tok.kind == "(":
            self.advance()
            node = self.parse_iexpr()
            self.expect(")")
            return node
        if tok.kind == "IDENT":
            name = tok.text
            if name in INDEX_BUILTINS:
                self.advance()
                self.expect("(")
                arg = self.parse_iexpr()
                self.expect(")")
                return ICall(name, arg)
            if name in RESERVED:
                raise ParseError(
                    f"{name!r} cannot appear in an index expression", tok.line, tok.col
                )
            self.advance()
            return IVar(name)
        raise self.fail(f"found {tok.text or 'end of input'!r}", _IATOM_STARTS)

    parse_ipow = parse_ifactor


def parse(source: str) -> Expr:
    """Parse a polynomial expression, insisting on consuming all input."""
    parser = _Parser(source)
    node = parser.parse_expr()
    tok = parser.peek()
    if tok.kind != "EOF":
        raise ParseError(f"trailing input {tok.text!r}", tok.line, tok.col, ("EOF",))
    return node


# --- evaluation ------------------------------------------------------------

def eval_index(node: IndexExpr, bindings: Mapping[str, int]) -> int:
    if isinstance(node, ILit):
        return node.value
    if isinstance(node, IVar):
        if node.name not in bindings:
            raise UnboundVariable(node.name)
        return bindings[node.name]
    if isinstance(node, IAdd):
        return eval_index(node.left, bindings) + eval_index(node.right, bindings)
    if isinstance(node, ISub):
        return eval_index(node.left, bindings) - eval_index(node.right, bindings)
    if isinstance(node, IMul):
        return eval_index(node.left, bindings) * eval_index(node.right, bindings)
    if isinstance(node, INeg):
        return -eval_index(node.arg, bindings)
    if isinstance(node, ICall):
        return INDEX_BUILTINS[node.func](eval_index(node.arg, bindings))
    raise TypeError(f"not an index node: {node!r}")


def eval_expr(node: Expr, bindings: Mapping[str, int] | None = None) -> IntPoly:
    """Evaluate a polynomial expression exactly under integer bindings.

    >>> eval_expr(parse("qbin(4, 2)")).pretty()
    '1+q+2q^2+q^3+q^4'
    >>> eval_expr(parse("sum(j, 1, n, q^j)"), {"n": 3}).pretty()
    'q+q^2+q^3'
    """
    env = dict(bindings or {})
    return _eval(node, env)


def _eval(node: Expr, env: dict[str, int]) -> IntPoly:
    if isinstance(node, IntLit):
        return IntPoly((node.value,))
    if isinstance(node, QAtom):
        return Q
    if isinstance(node, Var):
        if node.name not in env:
            raise UnboundVariable(node.name)
        return IntPoly((env[node.name],))
    if isinstance(node, Add):
        return _eval(node.left, env) + _eval(node.right, env)
    if isinstance(node, Sub):
        return _eval(node.left, env) - _eval(node.right, env)
    if isinstance(node, Mul):
        return _eval(node.left, env) * _eval(node.right, env)
    if isinstance(node, Neg):
        return -_eval(node.arg, env)
    if isinstance(node, Pow):
        exponent = eval_index(node.exponent, env)
        if exponent < 0:
            raise EvalNegativePower(f"exponent evaluated to {exponent}")
        return _eval(node.base, env) ** exponent
    if isinstance(node, QBin):
        return qbin(eval_index(node.upper, env), eval_index(node.lower, env))
    if isinstance(node, Poch):
        value = eval_index(node.arg, env)
        if value < 0:
            raise EvalNegativePower(f"pochhammer index evaluated to {value}")
        return pochhammer_qq(value)
    if isinstance(node, Alt):
        return ONE if eval_index(node.arg, env) % 2 == 0 else IntPoly((-1,))
    if isinstance(node, Sum):
        lo = eval_index(node.lo, env)
        hi = eval_index(node.hi, env)
        total = ZERO
        saved = env.get(node.var, None)
        had = node.var in env
        try:
            for value in range(lo, hi + 1):
                env[node.var] = value
                total = total + _eval(node.body, env)
        finally:
            if had:
                env[node.var] = saved  # type: ignore[assignment]
            else:
                env.pop(node.var, None)
        return total
    raise TypeError(f"not an expression node: {node!r}")


def evaluate(source: str, bindings: Mapping[str, int] | None = None) -> IntPoly:
    """Parse then evaluate in one call."""
    return eval_expr(parse(source), bindings)


# --- pretty printer --------------------------------------------------------

def _iatomic(node: IndexExpr) -> bool:
    return isinstance(node, (ILit, IVar, ICall, INeg))


def unparse_index(node: IndexExpr) -> str:
    if isinstance(node, ILit):
        return str(node.value)
    if isinstance(node, IVar):
        return node.name
    if isinstance(node, ICall):
        return f"{node.func}({unparse_index(node.arg)})"
    if isinstance(node, INeg):
        inner = unparse_index(node.arg)
        if not _iatomic(node.arg):
            inner = f"({inner})"
        return f"-{inner}"
    if isinstance(node, (IAdd, ISub)):
        op = " + " if isinstance(node, IAdd) else " - "
        left = unparse_index(node.left)
        right = unparse_index(node.right)
        if isinstance(node.right, (IAdd, ISub)):
            right = f"({right})"
        return left + op + right
    if isinstance(node, IMul):
        sides = []
        for child in (node.left, node.right):
            text = unparse_index(child)
            if isinstance(child, (IAdd, ISub)) or (
                child is node.right and isinstance(child, IMul)
            ):
                text = f"({text})"
            sides.append(text)
        return " * ".join(sides)
    raise TypeError(f"not an index node: {node!r}")


def _ipow_text(node: IndexExpr) -> str:
    text = unparse_index(node)
    return text if isinstance(node, (ILit, IVar, ICall)) else f"({text})"


def unparse(node: Expr) -> str:
    """Render an AST to source that reparses to a structurally equal AST."""
    if isinstance(node, IntLit):
        return str(node.value)
    if isinstance(node, QAtom):
        return "q"
    if isinstance(node, Var):
        return node.name
    if isinstance(node, QBin):
        return f"qbin({unparse_index(node.upper)}, {unparse_index(node.lower)})"
    if isinstance(node, Poch):
        return f"poch({unparse_index(node.arg)})"
    if isinstance(node, Alt):
        return f"alt({unparse_index(node.arg)})"
    if isinstance(node, Sum):
        return (
            f"sum({node.var}, {unparse_index(node.lo)}, "
            f"{unparse_index(node.hi)}, {unparse(node.body)})"
        )
    if isinstance(node, Neg):
        inner = unparse(node.arg)
        if isinstance(node.arg, (Add, Sub, Mul, Pow)):
            inner = f"({inner})"
        return f"-{inner}"
    if isinstance(node, Pow):
        base = unparse(node.base)
        if isinstance(node.base, (Add, Sub, Mul, Pow)):
            base = f"({base})"
        return f"{base}^{_ipow_text(node.exponent)}"
    if isinstance(node, Mul):
        sides = []
        for child in (node.left, node.right):
            text = unparse(child)
            if isinstance(child, (Add, Sub)) or (child is node.right and isinstance(child, Mul)):
                text = f"({text})"
            sides.append(text)
        return " * ".join(sides)
    if isinstance(node, (Add, Sub)):
        op = " + " if isinstance(node, Add) else " - "
        left = unparse(node.left)
        right = unparse(node.right)
        if isinstance(node.right, (Add, Sub)):
            right = f"({right})"
        return left + op + right
    raise TypeError(f"not an expression node: {node!r}")
