"""Formulas, tree contexts, and sequents."""

from __future__ import annotations

from dataclasses import dataclass

from sandcastle.trees import And, AttackTree, Base, IDENT_RE, Or, Sand


class Formula:
    __slots__ = ()


@dataclass(frozen=True)
class Atom(Formula):
    name: str

    def __post_init__(self):
        if not IDENT_RE.fullmatch(self.name):
            raise ValueError(f"invalid atom name {self.name!r}")


@dataclass(frozen=True)
class Join(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Odot(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Rhd(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Limp(Formula):
    left: Formula
    right: Formula


_FORMULA_SYMBOL = {Join: "+", Odot: "*", Rhd: ">", Limp: "-o"}


def formula_str(formula: Formula) -> str:
    match formula:
        case Atom(name):
            return name
        case Join(l, r) | Odot(l, r) | Rhd(l, r) | Limp(l, r):
            return f"({formula_str(l)} {_FORMULA_SYMBOL[type(formula)]} {formula_str(r)})"
    raise TypeError(f"not a formula: {formula!r}")


class Context:
    __slots__ = ()


@dataclass(frozen=True)
class Unit(Context):
    pass


UNIT = Unit()


@dataclass(frozen=True)
class Leaf(Context):
    formula: Formula


@dataclass(frozen=True)
class Comma(Context):
    left: Context
    right: Context


@dataclass(frozen=True)
class Semi(Context):
    left: Context
    right: Context


@dataclass(frozen=True)
class Bullet(Context):
    left: Context
    right: Context


FORMERS = {"comma": Comma, "semi": Semi, "bullet": Bullet}
FORMER_NAMES = {Comma: "comma", Semi: "semi", Bullet: "bullet"}
_FORMER_SYMBOL = {Comma: ",", Semi: ";", Bullet: "."}

CtxPath = tuple[int, ...]


def context_str(ctx: Context) -> str:
    match ctx:
        case Unit():
            return "*"
        case Leaf(formula):
            return formula_str(formula)
        case Comma(l, r) | Semi(l, r) | Bullet(l, r):
            return f"({context_str(l)} {_FORMER_SYMBOL[type(ctx)]} {context_str(r)})"
    raise TypeError(f"not a context: {ctx!r}")


def ctx_subtree(ctx: Context, path: CtxPath) -> Context:
    node = ctx
    for step in path:
        match node:
            case Comma(l, r) | Semi(l, r) | Bullet(l, r):
                node = l if step == 0 else r
            case _:
                raise ValueError(f"path {path} leaves the context at {context_str(node)}")
    return node


def ctx_replace(ctx: Context, path: CtxPath, new: Context) -> Context:
    if not path:
        return new
    step, rest = path[0], path[1:]
    match ctx:
        case Comma(l, r) | Semi(l, r) | Bullet(l, r):
            ctor = type(ctx)
            if step == 0:
                return ctor(ctx_replace(l, rest, new), r)
            return ctor(l, ctx_replace(r, rest, new))
    raise ValueError(f"path {path} leaves the context at {context_str(ctx)}")


def context_leaves(ctx: Context) -> tuple[Formula, ...]:
    match ctx:
        case Unit():
            return ()
        case Leaf(formula):
            return (formula,)
        case Comma(l, r) | Semi(l, r) | Bullet(l, r):
            return context_leaves(l) + context_leaves(r)
    raise TypeError(f"not a context: {ctx!r}")


@dataclass(frozen=True)
class Sequent:
    context: Context
    goal: Formula

    def __str__(self) -> str:
        return f"{context_str(self.context)} |- {formula_str(self.goal)}"


def tree_to_formula(tree: AttackTree) -> Formula:
    """Base -> Atom, OR -> Join, AND -> Odot, SAND -> Rhd."""
    match tree:
        case Base(name):
            return Atom(name)
        case Or(l, r):
            return Join(tree_to_formula(l), tree_to_formula(r))
        case And(l, r):
            return Odot(tree_to_formula(l), tree_to_formula(r))
        case Sand(l, r):
            return Rhd(tree_to_formula(l), tree_to_formula(r))
    raise TypeError(f"not an attack tree: {tree!r}")


def formula_to_tree(formula: Formula) -> AttackTree:
    """Inverse of ``tree_to_formula`` on the implication-free fragment."""
    match formula:
        case Atom(name):
            return Base(name)
        case Join(l, r):
            return Or(formula_to_tree(l), formula_to_tree(r))
        case Odot(l, r):
            return And(formula_to_tree(l), formula_to_tree(r))
        case Rhd(l, r):
            return Sand(formula_to_tree(l), formula_to_tree(r))
    raise ValueError(f"no attack-tree image for {formula_str(formula)}")
