"""Attack-tree AST and its textual format.

Trees are strictly binary: ``OR(a, b, c)`` in the surface syntax is
desugared to right-nested binary nodes before construction.  The grammar
of the ``.sat`` format is::

    tree     := node
    node     := IDENT | OP "(" node ("," node)+ ")"
    OP       := "OR" | "AND" | "SAND"
    IDENT    := [A-Za-z_][A-Za-z0-9_-]*

``#`` starts a comment running to end of line; whitespace is
insignificant.  An operator keyword not followed by ``(`` is read as a
plain identifier.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from sandcastle.errors import ParseError

IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_-]*")

_OPS = ("OR", "AND", "SAND")


class AttackTree:
    """Base class of the four node kinds; nodes are immutable values."""

    __slots__ = ()


@dataclass(frozen=True)
class Base(AttackTree):
    name: str

    def __post_init__(self):
        if not IDENT_RE.fullmatch(self.name):
            raise ValueError(f"invalid base attack name {self.name!r}")


@dataclass(frozen=True)
class Or(AttackTree):
    left: AttackTree
    right: AttackTree


@dataclass(frozen=True)
class And(AttackTree):
    left: AttackTree
    right: AttackTree


@dataclass(frozen=True)
class Sand(AttackTree):
    left: AttackTree
    right: AttackTree

Path = tuple[int, ...]

_CONSTRUCTORS = {"OR": Or, "AND": And, "SAND": Sand}
_OP_NAMES = {Or: "OR", And: "AND", Sand: "SAND"}


class _Token:
    __slots__ = ("kind", "text", "line", "column")

    def __init__(self, kind: str, text: str, line: int, column: int):
        self.kind = kind  # "ident" | "(" | ")" | "," | "eof"
        self.text = text
        self.line = line
        self.column = column


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    line, col = 1, 1
    i = 0
    n = len(text)
    while i < n:
        c = text[i]
        if c == "\n":
            line += 1
            col = 1
            i += 1
        elif c in " \t\r":
            i += 1
            col += 1
        elif c == "#":
            while i < n and text[i] != "\n":
                i += 1
        elif c in "(),":
            tokens.append(_Token(c, c, line, col))
            i += 1
            col += 1
        else:
            m = IDENT_RE.match(text, i)
            if not m:
                raise ParseError(f"unexpected character {c!r}", line, col)
            tokens.append(_Token("ident", m.group(), line, col))
            col += m.end() - i
            i = m.end()
    tokens.append(_Token("eof", "", line, col))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def next(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str) -> _Token:
        tok = self.next()
        if tok.kind != kind:
            raise ParseError(
                f"expected {kind!r}, found {tok.text or 'end of input'!r}",
                tok.line,
                tok.column,
            )
        return tok

    def node(self) -> AttackTree:
        tok = self.next()
        if tok.kind != "ident":
            raise ParseError(
                f"expected identifier or operator, found {tok.text or 'end of input'!r}",
                tok.line,
                tok.column,
            )
        if tok.text in _OPS and self.peek().kind == "(":
            self.next()
            args = [self.node()]
            while self.peek().kind == ",":
                self.next()
                args.append(self.node())
            self.expect(")")
            if len(args) < 2:
                raise ParseError(
                    f"{tok.text} needs at least 2 arguments, got {len(args)}",
                    tok.line,
                    tok.column,
                )
            ctor = _CONSTRUCTORS[tok.text]
            tree = args[-1]
            for arg in reversed(args[:-1]):
                tree = ctor(arg, tree)
            return tree
        return Base(tok.text)


def parse(text: str) -> AttackTree:
    """Parse DSL source into an attack tree.

    N-ary applications are right-nested; raises :class:`ParseError` with
    line/column on malformed input, operator arity < 2, or empty input.
    """
    tokens = _tokenize(text)
    if tokens[0].kind == "eof":
        raise ParseError("empty input", tokens[0].line, tokens[0].column)
    parser = _Parser(tokens)
    tree = parser.node()
    trailing = parser.peek()
    if trailing.kind != "eof":
        raise ParseError(
            f"trailing input starting at {trailing.text!r}",
            trailing.line,
            trailing.column,
        )
    return tree


def render(tree: AttackTree) -> str:
    """Render a tree back to DSL source; ``parse(render(t))`` equals ``t``."""
    match tree:
        case Base(name):
            return name
        case Or(l, r) | And(l, r) | Sand(l, r):
            return f"{_OP_NAMES[type(tree)]}({render(l)}, {render(r)})"
    raise TypeError(f"not an attack tree: {tree!r}")


def base_attacks(tree: AttackTree) -> tuple[str, ...]:
    """Deduplicated, lexicographically sorted leaf names."""
    names: set[str] = set()

    def walk(node: AttackTree) -> None:
        match node:
            case Base(name):
                names.add(name)
            case Or(l, r) | And(l, r) | Sand(l, r):
                walk(l)
                walk(r)

    walk(tree)
    return tuple(sorted(names))


def node_count(tree: AttackTree) -> int:
    match tree:
        case Base():
            return 1
        case Or(l, r) | And(l, r) | Sand(l, r):
            return 1 + node_count(l) + node_count(r)
    raise TypeError(f"not an attack tree: {tree!r}")


def subtree_at(tree: AttackTree, path: Path) -> AttackTree:
    node = tree
    for step in path:
        match node:
            case Or(l, r) | And(l, r) | Sand(l, r):
                node = l if step == 0 else r
            case _:
                raise ValueError(f"path {path} leaves the tree at {node!r}")
    return node


def replace_at(tree: AttackTree, path: Path, new: AttackTree) -> AttackTree:
    if not path:
        return new
    step, rest = path[0], path[1:]
    match tree:
        case Or(l, r) | And(l, r) | Sand(l, r):
            ctor = type(tree)
            if step == 0:
                return ctor(replace_at(l, rest, new), r)
            return ctor(l, replace_at(r, rest, new))
    raise ValueError(f"path {path} leaves the tree at {tree!r}")


# Canonical child order: Base < Or < And < Sand, base names lexicographic,
# composites by constructor then left then right.
_RANK = {Base: 0, Or: 1, And: 2, Sand: 3}

_OrderKey = tuple


def order_key(tree: AttackTree) -> _OrderKey:
    """Total-order key; comparing keys is the structural order on trees."""
    match tree:
        case Base(name):
            return (0, name)
        case Or(l, r) | And(l, r) | Sand(l, r):
            return (_RANK[type(tree)], order_key(l), order_key(r))
    raise TypeError(f"not an attack tree: {tree!r}")
