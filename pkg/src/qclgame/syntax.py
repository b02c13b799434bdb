"""Formula language for QCL: AST, lexer, recursive-descent parser, printer.

Concrete syntax (ASCII on output, Unicode accepted on input)::

    formula := ord
    ord     := or ( "><" ord )?
    or      := and ( "|" or )?
    and     := not ( "&" and )?
    not     := "!" not | atom
    atom    := ident | "(" formula ")"

Binary connectives associate to the right, so ``a >< b >< c`` reads as
``a >< (b >< c)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, List, Tuple, Union

__all__ = [
    "Var",
    "Not",
    "And",
    "Or",
    "OrdDisj",
    "Formula",
    "Interpretation",
    "ParseError",
    "CapExceeded",
    "DEFAULT_CAP",
    "parse",
    "to_text",
    "variables",
    "all_interpretations",
    "parse_interpretation",
    "format_interpretation",
    "is_classical",
    "size",
]

DEFAULT_CAP = 20

Interpretation = frozenset  # frozenset[str]: the variables that are true

IDENT_RE = re.compile(r"[a-z][a-zA-Z0-9_]*")


class ParseError(ValueError):
    """Lexical or syntax error, carrying a 1-based line and column."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} at line {line}, column {column}")
        self.line = line
        self.column = column


class CapExceeded(ValueError):
    """Raised when an exhaustive enumeration would exceed its configured cap."""


@dataclass(frozen=True)
class Var:
    name: str

    def __str__(self):
        return to_text(self)


@dataclass(frozen=True)
class Not:
    child: "Formula"

    def __str__(self):
        return to_text(self)


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"

    def __str__(self):
        return to_text(self)


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"

    def __str__(self):
        return to_text(self)


@dataclass(frozen=True)
class OrdDisj:
    """Ordered disjunction: ``left`` or ``right``, preferably ``left``."""

    left: "Formula"
    right: "Formula"

    def __str__(self):
        return to_text(self)


Formula = Union[Var, Not, And, Or, OrdDisj]

BINARY = (And, Or, OrdDisj)


# -- lexer -----------------------------------------------------------------

_SYMBOLS = {
    "!": "NOT",
    "¬": "NOT",
    "&": "AND",
    "∧": "AND",
    "|": "OR",
    "∨": "OR",
    "><": "ORD",
    "×": "ORD",
    "(": "LPAREN",
    ")": "RPAREN",
}

Token = Tuple[str, str, int, int]  # kind, text, line, column


def tokenize(text: str) -> Iterator[Token]:
    line, col, pos = 1, 1, 0
    while pos < len(text):
        ch = text[pos]
        if ch == "\n":
            line, col, pos = line + 1, 1, pos + 1
            continue
        if ch.isspace():
            col, pos = col + 1, pos + 1
            continue
        if text.startswith("><", pos):
            yield ("ORD", "><", line, col)
            col, pos = col + 2, pos + 2
            continue
        if ch in _SYMBOLS:
            yield (_SYMBOLS[ch], ch, line, col)
            col, pos = col + 1, pos + 1
            continue
        m = IDENT_RE.match(text, pos)
        if m:
            yield ("IDENT", m.group(), line, col)
            col, pos = col + len(m.group()), m.end()
            continue
        raise ParseError(f"unexpected character {ch!r}", line, col)
    yield ("EOF", "", line, col)


# -- parser ----------------------------------------------------------------

class _Parser:
    def __init__(self, text: str):
        self.tokens: List[Token] = list(tokenize(text))
        self.pos = 0

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def error(self, message: str, tok: Token) -> ParseError:
        return ParseError(message, tok[2], tok[3])

    def parse(self) -> Formula:
        f = self.ord()
        tok = self.peek()
        if tok[0] != "EOF":
            if tok[0] == "RPAREN":
                raise self.error("unbalanced ')'", tok)
            raise self.error(f"unexpected {tok[1]!r}", tok)
        return f

    def _binary(self, kind, node, operand, rest):
        left = operand()
        if self.peek()[0] == kind:
            self.advance()
            return node(left, rest())
        return left

    def ord(self) -> Formula:
        return self._binary("ORD", OrdDisj, self.or_, self.ord)

    def or_(self) -> Formula:
        return self._binary("OR", Or, self.and_, self.or_)

    def and_(self) -> Formula:
        return self._binary("AND", And, self.not_, self.and_)

    def not_(self) -> Formula:
        if self.peek()[0] == "NOT":
            self.advance()
            return Not(self.not_())
        return self.atom()

    def atom(self) -> Formula:
        tok = self.advance()
        if tok[0] == "IDENT":
            return Var(tok[1])
        if tok[0] == "LPAREN":
            f = self.ord()
            close = self.advance()
            if close[0] != "RPAREN":
                raise self.error("expected ')'", close)
            return f
        if tok[0] == "EOF":
            raise self.error("unexpected end of input", tok)
        raise self.error(f"expected a variable or '(' but found {tok[1]!r}", tok)


def parse(text: str) -> Formula:
    """Parse ``text`` into a formula. Raises :class:`ParseError`."""
    return _Parser(text).parse()


# -- printer ---------------------------------------------------------------

_PREC = {OrdDisj: 1, Or: 2, And: 3, Not: 4, Var: 5}
_OPS = {OrdDisj: "><", Or: "|", And: "&"}


def to_text(f: Formula) -> str:
    """Canonical ASCII rendering with the fewest parentheses that round-trip."""
    if isinstance(f, Var):
        return f.name
    if isinstance(f, Not):
        inner = to_text(f.child)
        if _PREC[type(f.child)] < _PREC[Not]:
            inner = f"({inner})"
        return "!" + inner
    prec = _PREC[type(f)]
    left, right = to_text(f.left), to_text(f.right)
    # right-associative: an equal-precedence left operand needs parens
    if _PREC[type(f.left)] <= prec:
        left = f"({left})"
    if _PREC[type(f.right)] < prec:
        right = f"({right})"
    return f"{left} {_OPS[type(f)]} {right}"


# -- variables and interpretations -----------------------------------------

def variables(f: Formula) -> frozenset:
    """The set of variable names occurring in ``f``."""
    out = set()
    stack = [f]
    while stack:
        g = stack.pop()
        if isinstance(g, Var):
            out.add(g.name)
        elif isinstance(g, Not):
            stack.append(g.child)
        else:
            stack.append(g.left)
            stack.append(g.right)
    return frozenset(out)


def size(f: Formula) -> int:
    """Number of connectives in ``f``."""
    if isinstance(f, Var):
        return 0
    if isinstance(f, Not):
        return 1 + size(f.child)
    return 1 + size(f.left) + size(f.right)


def is_classical(f: Formula) -> bool:
    """True iff ``f`` contains no ordered disjunction."""
    if isinstance(f, Var):
        return True
    if isinstance(f, OrdDisj):
        return False
    if isinstance(f, Not):
        return is_classical(f.child)
    return is_classical(f.left) and is_classical(f.right)


def all_interpretations(vars_or_formula, cap: int = DEFAULT_CAP) -> List[frozenset]:
    """Every subset of the variables, by binary counting over sorted names.

    The first name in sorted order is the most significant bit, so for
    ``{a, b}`` the order is ``{}, {b}, {a}, {a, b}``.
    """
    if isinstance(vars_or_formula, (Var, Not, And, Or, OrdDisj)):
        names = sorted(variables(vars_or_formula))
    else:
        names = sorted(set(vars_or_formula))
    n = len(names)
    if n > cap:
        raise CapExceeded(f"{n} variables exceed the enumeration cap of {cap}")
    out = []
    for k in range(1 << n):
        out.append(frozenset(names[i] for i in range(n) if k >> (n - 1 - i) & 1))
    return out


def parse_interpretation(text: str) -> frozenset:
    """Parse a comma-separated variable list such as ``"a,b"``; ``""`` is empty."""
    text = text.strip()
    if text.startswith("{") and text.endswith("}"):
        text = text[1:-1]
    names = [part.strip() for part in text.split(",")] if text.strip() else []
    for name in names:
        if not IDENT_RE.fullmatch(name):
            raise ValueError(f"invalid variable name {name!r} in interpretation")
    return frozenset(names)


def format_interpretation(i) -> str:
    return "{" + ",".join(sorted(i)) + "}"
