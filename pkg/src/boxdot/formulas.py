"""Formula language of the bi-modal evidence logic.

The core AST has exactly five constructors: atoms, negation, implication,
and the two knowledge modalities ``[.]`` (attainable knowledge, from finitely
many pieces of evidence) and ``[]`` (knowledge from the whole evidence set).
``&``, ``|`` and ``<->`` exist only in the concrete syntax and are desugared
at parse time:

    a & b    ==  !(a -> !b)
    a | b    ==  !a -> b
    a <-> b  ==  (a -> b) & (b -> a)

Grammar (whitespace-insensitive, ``#`` starts a line comment)::

    formula := iff
    iff     := impl ( "<->" impl )?
    impl    := disj ( "->" impl )?
    disj    := conj ( "|" conj )*
    conj    := unary ( "&" unary )*
    unary   := ( "!" | "[]" | "[.]" ) unary | atom
    atom    := IDENT | "(" formula ")"
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

__all__ = [
    "Formula",
    "Atom",
    "Not",
    "Implies",
    "AttainKnow",
    "Know",
    "ParseError",
    "CapacityError",
    "parse",
    "modal_depth",
    "atom_names",
    "subformulas",
    "substitute",
]

IDENT_RE = re.compile(r"[a-zA-Z_][a-zA-Z0-9_]*")


@dataclass(frozen=True)
class Formula:
    """Base class; concrete nodes are the five dataclasses below."""

    # Formulas are hashed constantly by the evaluators' memo tables; caching
    # the structural hash keeps deep trees cheap to look up.
    def _cached_hash(self, parts):
        h = self.__dict__.get("_hash")
        if h is None:
            h = hash(parts)
            object.__setattr__(self, "_hash", h)
        return h


@dataclass(frozen=True)
class Atom(Formula):
    name: str

    def __str__(self):
        return self.name

    def __hash__(self):
        return self._cached_hash(("atom", self.name))


@dataclass(frozen=True)
class Not(Formula):
    child: Formula

    def __str__(self):
        return f"(!{self.child})"

    def __hash__(self):
        return self._cached_hash(("not", self.child))


@dataclass(frozen=True)
class Implies(Formula):
    left: Formula
    right: Formula

    def __str__(self):
        return f"({self.left} -> {self.right})"

    def __hash__(self):
        return self._cached_hash(("implies", self.left, self.right))


@dataclass(frozen=True)
class AttainKnow(Formula):
    """Attainable knowledge, written ``[.]``."""

    child: Formula

    def __str__(self):
        return f"([.]{self.child})"

    def __hash__(self):
        return self._cached_hash(("attain", self.child))


@dataclass(frozen=True)
class Know(Formula):
    """Full knowledge, written ``[]``."""

    child: Formula

    def __str__(self):
        return f"([]{self.child})"

    def __hash__(self):
        return self._cached_hash(("know", self.child))


class ParseError(ValueError):
    """Raised on malformed formula text; carries line and column (1-based)."""

    def __init__(self, message, line, column):
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column


class CapacityError(RuntimeError):
    """A desk-scale capacity bound was exceeded."""


# ---------- tokenizer ----------

@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    line: int
    column: int


def _tokenize(text):
    tokens = []
    line = 1
    col = 1
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch == "#":
            while i < n and text[i] != "\n":
                i += 1
            continue
        m = IDENT_RE.match(text, i)
        if m:
            tokens.append(_Token("IDENT", m.group(), line, col))
            col += len(m.group())
            i = m.end()
            continue
        if text.startswith("<->", i):
            tokens.append(_Token("IFF", "<->", line, col))
            i += 3
            col += 3
            continue
        if text.startswith("->", i):
            tokens.append(_Token("ARROW", "->", line, col))
            i += 2
            col += 2
            continue
        if ch == "[":
            if text.startswith("[]", i):
                tokens.append(_Token("BOX", "[]", line, col))
                i += 2
                col += 2
                continue
            if text.startswith("[.]", i):
                tokens.append(_Token("BOXDOT", "[.]", line, col))
                i += 3
                col += 3
                continue
            raise ParseError("unbalanced '[': expected '[]' or '[.]'", line, col)
        for kind, lit in (("NOT", "!"), ("AND", "&"), ("OR", "|"),
                          ("LPAREN", "("), ("RPAREN", ")")):
            if ch == lit:
                tokens.append(_Token(kind, lit, line, col))
                break
        else:
            raise ParseError(f"unexpected character {ch!r}", line, col)
        i += 1
        col += 1
    tokens.append(_Token("EOF", "", line, col))
    return tokens


# ---------- recursive-descent parser ----------

class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind, what):
        tok = self.peek()
        if tok.kind != kind:
            found = repr(tok.text) if tok.kind != "EOF" else "end of input"
            raise ParseError(f"expected {what}, found {found}", tok.line, tok.column)
        return self.advance()

    def parse_formula(self):
        left = self.parse_impl()
        if self.peek().kind == "IFF":
            self.advance()
            right = self.parse_impl()
            # a <-> b  ==  (a -> b) & (b -> a)
            return _conj(Implies(left, right), Implies(right, left))
        return left

    def parse_impl(self):
        left = self.parse_disj()
        if self.peek().kind == "ARROW":
            self.advance()
            right = self.parse_impl()  # right-associative
            return Implies(left, right)
        return left

    def parse_disj(self):
        parts = [self.parse_conj()]
        while self.peek().kind == "OR":
            self.advance()
            parts.append(self.parse_conj())
        f = parts[0]
        for p in parts[1:]:
            f = Implies(Not(f), p)  # a | b  ==  !a -> b
        return f

    def parse_conj(self):
        parts = [self.parse_unary()]
        while self.peek().kind == "AND":
            self.advance()
            parts.append(self.parse_unary())
        f = parts[0]
        for p in parts[1:]:
            f = _conj(f, p)
        return f

    def parse_unary(self):
        tok = self.peek()
        if tok.kind == "NOT":
            self.advance()
            return Not(self.parse_unary())
        if tok.kind == "BOX":
            self.advance()
            return Know(self.parse_unary())
        if tok.kind == "BOXDOT":
            self.advance()
            return AttainKnow(self.parse_unary())
        return self.parse_atom()

    def parse_atom(self):
        tok = self.peek()
        if tok.kind == "IDENT":
            self.advance()
            return Atom(tok.text)
        if tok.kind == "LPAREN":
            self.advance()
            f = self.parse_formula()
            self.expect("RPAREN", "')'")
            return f
        found = repr(tok.text) if tok.kind != "EOF" else "end of input"
        raise ParseError(f"expected an atom, '(', '!', '[]' or '[.]', found {found}",
                         tok.line, tok.column)


def _conj(a, b):
    return Not(Implies(a, Not(b)))


def parse(text):
    """Parse formula text into the desugared core AST."""
    tokens = _tokenize(text)
    if tokens[0].kind == "EOF":
        raise ParseError("empty input", tokens[0].line, tokens[0].column)
    p = _Parser(tokens)
    f = p.parse_formula()
    tok = p.peek()
    if tok.kind != "EOF":
        raise ParseError(f"unexpected trailing input {tok.text!r}", tok.line, tok.column)
    return f


# ---------- structural queries ----------

@lru_cache(maxsize=None)
def modal_depth(f):
    """Maximum nesting of [.] / [] along any root-to-leaf path."""
    if isinstance(f, Atom):
        return 0
    if isinstance(f, Not):
        return modal_depth(f.child)
    if isinstance(f, Implies):
        return max(modal_depth(f.left), modal_depth(f.right))
    if isinstance(f, (AttainKnow, Know)):
        return 1 + modal_depth(f.child)
    raise TypeError(f"not a formula: {f!r}")


@lru_cache(maxsize=None)
def atom_names(f):
    """Set of atom names occurring in f (as a frozenset)."""
    if isinstance(f, Atom):
        return frozenset((f.name,))
    if isinstance(f, (Not, AttainKnow, Know)):
        return atom_names(f.child)
    if isinstance(f, Implies):
        return atom_names(f.left) | atom_names(f.right)
    raise TypeError(f"not a formula: {f!r}")


def subformulas(f):
    """All subformulas of f, root first (preorder, with repeats)."""
    out = [f]
    if isinstance(f, (Not, AttainKnow, Know)):
        out.extend(subformulas(f.child))
    elif isinstance(f, Implies):
        out.extend(subformulas(f.left))
        out.extend(subformulas(f.right))
    return out


def substitute(f, mapping):
    """Replace atoms by formulas; atoms missing from the mapping stay put."""
    if isinstance(f, Atom):
        return mapping.get(f.name, f)
    if isinstance(f, Not):
        return Not(substitute(f.child, mapping))
    if isinstance(f, AttainKnow):
        return AttainKnow(substitute(f.child, mapping))
    if isinstance(f, Know):
        return Know(substitute(f.child, mapping))
    if isinstance(f, Implies):
        return Implies(substitute(f.left, mapping), substitute(f.right, mapping))
    raise TypeError(f"not a formula: {f!r}")
