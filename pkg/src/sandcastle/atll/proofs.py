"""Inference rules and the derivation checker.

The rules, with contexts written as trees and ``D(G)`` meaning the context
D with subcontext G at the step's path:

    Var:    A |- A
    CM:     G' |- G (context morphism)  and  G |- A   ==>   G' |- A
    Cut:    G |- A  and  D(A) |- C   ==>   D(G) |- C
    OdotI:  G |- A  and  D |- B   ==>   (G , D) |- A * B
    RhdI:   G |- A  and  D |- B   ==>   (G ; D) |- A > B
    JoinI:  G |- A  and  D |- B   ==>   (G . D) |- A + B
    OdotE:  G |- A * B  and  D(A , B) |- C   ==>   D(G) |- C
    RhdE:   G |- A > B  and  D(A ; B) |- C   ==>   D(G) |- C
    JoinE:  G |- A + B  and  D(A . B) |- C   ==>   D(G) |- C
    LimpI:  (G , A) |- B   ==>   G |- A -o B
    LimpE:  G |- A -o B  and  D |- A   ==>   (G , D) |- B

Choice introduction is monoidal, not a coproduct injection: both branches
are consumed, which keeps OR-idempotence out of the logic.
"""

from __future__ import annotations

from dataclasses import dataclass

from sandcastle.atll.ctx_rules import (
    CtxDerivation,
    Ruleset,
    _check_ctx,
    _Invalid,
)
from sandcastle.atll.syntax import (
    Bullet,
    Comma,
    CtxPath,
    Formula,
    Join,
    Leaf,
    Limp,
    Odot,
    Rhd,
    Semi,
    Sequent,
    context_str,
    ctx_replace,
    ctx_subtree,
    formula_str,
)


class Derivation:
    __slots__ = ()


@dataclass(frozen=True)
class Var(Derivation):
    formula: Formula


@dataclass(frozen=True)
class CM(Derivation):
    ctx: CtxDerivation
    premise: Derivation


@dataclass(frozen=True)
class Cut(Derivation):
    path: CtxPath
    left: Derivation
    right: Derivation


@dataclass(frozen=True)
class OdotI(Derivation):
    left: Derivation
    right: Derivation


@dataclass(frozen=True)
class RhdI(Derivation):
    left: Derivation
    right: Derivation


@dataclass(frozen=True)
class JoinI(Derivation):
    left: Derivation
    right: Derivation


@dataclass(frozen=True)
class OdotE(Derivation):
    path: CtxPath
    principal: Derivation
    body: Derivation


@dataclass(frozen=True)
class RhdE(Derivation):
    path: CtxPath
    principal: Derivation
    body: Derivation


@dataclass(frozen=True)
class JoinE(Derivation):
    path: CtxPath
    principal: Derivation
    body: Derivation


@dataclass(frozen=True)
class LimpI(Derivation):
    premise: Derivation


@dataclass(frozen=True)
class LimpE(Derivation):
    fn: Derivation
    arg: Derivation


@dataclass(frozen=True)
class DerivVerdict:
    valid: bool
    sequent: Sequent | None = None
    node: int | None = None
    reason: str | None = None


_INTRO = {OdotI: (Odot, Comma), RhdI: (Rhd, Semi), JoinI: (Join, Bullet)}
_ELIM = {OdotE: (Odot, Comma), RhdE: (Rhd, Semi), JoinE: (Join, Bullet)}


def _check(d: Derivation, counter: list[int], ruleset: Ruleset) -> Sequent:
    index = counter[0]
    counter[0] += 1
    match d:
        case Var(formula):
            return Sequent(Leaf(formula), formula)
        case CM(ctxd, premise):
            try:
                source, target = _check_ctx(ctxd, [0], ruleset)
            except _Invalid as inner:
                raise _Invalid(
                    index, f"context derivation node {inner.node}: {inner.reason}"
                ) from None
            concl = _check(premise, counter, ruleset)
            if concl.context != target:
                raise _Invalid(
                    index,
                    f"premise context {context_str(concl.context)} is not the "
                    f"morphism target {context_str(target)}",
                )
            return Sequent(source, concl.goal)
        case Cut(path, left, right):
            left_seq = _check(left, counter, ruleset)
            right_seq = _check(right, counter, ruleset)
            try:
                hole = ctx_subtree(right_seq.context, path)
            except ValueError as exc:
                raise _Invalid(index, str(exc)) from None
            if hole != Leaf(left_seq.goal):
                raise _Invalid(
                    index,
                    f"cut hole {context_str(hole)} is not the formula "
                    f"{formula_str(left_seq.goal)}",
                )
            return Sequent(
                ctx_replace(right_seq.context, path, left_seq.context), right_seq.goal
            )
        case OdotI(l, r) | RhdI(l, r) | JoinI(l, r):
            conn, former = _INTRO[type(d)]
            ls = _check(l, counter, ruleset)
            rs = _check(r, counter, ruleset)
            return Sequent(former(ls.context, rs.context), conn(ls.goal, rs.goal))
        case OdotE(path, principal, body) | RhdE(path, principal, body) | JoinE(
            path, principal, body
        ):
            conn, former = _ELIM[type(d)]
            ps = _check(principal, counter, ruleset)
            if not isinstance(ps.goal, conn):
                raise _Invalid(
                    index,
                    f"principal goal {formula_str(ps.goal)} is not a "
                    f"{conn.__name__.lower()} formula",
                )
            bs = _check(body, counter, ruleset)
            try:
                hole = ctx_subtree(bs.context, path)
            except ValueError as exc:
                raise _Invalid(index, str(exc)) from None
            expected = former(Leaf(ps.goal.left), Leaf(ps.goal.right))
            if hole != expected:
                raise _Invalid(
                    index,
                    f"elimination hole {context_str(hole)} does not match "
                    f"{context_str(expected)}",
                )
            return Sequent(ctx_replace(bs.context, path, ps.context), bs.goal)
        case LimpI(premise):
            ps = _check(premise, counter, ruleset)
            match ps.context:
                case Comma(gamma, Leaf(arg)):
                    return Sequent(gamma, Limp(arg, ps.goal))
            raise _Invalid(
                index,
                f"premise context {context_str(ps.context)} is not of the "
                "form (G , A)",
            )
        case LimpE(fn, arg):
            fs = _check(fn, counter, ruleset)
            if not isinstance(fs.goal, Limp):
                raise _Invalid(
                    index, f"function goal {formula_str(fs.goal)} is not an implication"
                )
            As = _check(arg, counter, ruleset)
            if As.goal != fs.goal.left:
                raise _Invalid(
                    index,
                    f"argument proves {formula_str(As.goal)}, expected "
                    f"{formula_str(fs.goal.left)}",
                )
            return Sequent(Comma(fs.context, As.context), fs.goal.right)
    raise _Invalid(index, f"not a derivation node: {d!r}")


def check_derivation(d: Derivation, ruleset: Ruleset = Ruleset.FULL) -> DerivVerdict:
    """Bottom-up validation; nodes are numbered in preorder for errors.

    ``ruleset`` limits which distribution moves embedded context
    derivations may use (the paper ruleset grants right-distribution only).
    """
    try:
        sequent = _check(d, [0], ruleset)
    except _Invalid as exc:
        return DerivVerdict(False, node=exc.node, reason=exc.reason)
    return DerivVerdict(True, sequent=sequent)
