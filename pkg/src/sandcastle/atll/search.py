"""Bounded backward proof search with iterative deepening.

The strategy tries, in order: Var; a committed unit-normalization of the
context (one CM step eliminating every unit former); goal-directed
introductions; eliminations that unfold one composite context leaf via a
Var principal; and single context-morphism moves (associativity,
exchange, distribution, both directions, any position).  Cut is never
proposed: the search is decision support, not a complete prover, and a
derivation found at depth d has at most d rule applications on any
branch.  Failed sequents are memoized per remaining depth, so the
negative answer at a given depth is deterministic and reasonably fast.
"""

from __future__ import annotations

from typing import Iterator

from sandcastle.atll.ctx_rules import (
    CtxComp,
    CtxDerivation,
    CtxRuleError,
    CtxStep,
    Ruleset,
    apply_ctx_rule,
    rules_for,
)
from sandcastle.atll.proofs import (
    CM,
    Derivation,
    JoinE,
    JoinI,
    LimpE,
    LimpI,
    OdotE,
    OdotI,
    RhdE,
    RhdI,
    Var,
)
from sandcastle.atll.syntax import (
    Bullet,
    Comma,
    Context,
    CtxPath,
    FORMERS,
    Join,
    Leaf,
    Limp,
    Odot,
    Rhd,
    Semi,
    Sequent,
    Unit,
    ctx_replace,
    ctx_subtree,
)

_INTRO = {Odot: (OdotI, Comma), Rhd: (RhdI, Semi), Join: (JoinI, Bullet)}
_ELIM = {Odot: (OdotE, "comma"), Rhd: (RhdE, "semi"), Join: (JoinE, "bullet")}
_FORMER_NAME = {Comma: "comma", Semi: "semi", Bullet: "bullet"}

# moves proposed during exploration; unit introductions are never
# productive backward (normalization would strip them straight away)
_EXPLORE_SCHEMATIC = ("assoc-r", "assoc-l")
_EXPLORE_FIXED = (
    "exch-comma",
    "exch-bullet",
    "dist-semi-r-fwd",
    "dist-semi-r-rev",
    "dist-comma-r-fwd",
    "dist-comma-r-rev",
    "dist-semi-l-fwd",
    "dist-semi-l-rev",
)


def _paths(ctx: Context, here: CtxPath = ()) -> Iterator[CtxPath]:
    yield here
    match ctx:
        case Comma(l, r) | Semi(l, r) | Bullet(l, r):
            yield from _paths(l, here + (0,))
            yield from _paths(r, here + (1,))


def _unit_moves(ctx: Context) -> list[tuple[str, CtxPath, str]]:
    """First applicable unit elimination, or empty."""
    for path in _paths(ctx):
        node = ctx_subtree(ctx, path)
        match node:
            case Comma(l, r) | Semi(l, r) | Bullet(l, r):
                former = _FORMER_NAME[type(node)]
                if isinstance(l, Unit):
                    return [("unit-elim-l", path, former)]
                if isinstance(r, Unit):
                    return [("unit-elim-r", path, former)]
    return []


def _normalize_units(ctx: Context) -> tuple[Context, CtxDerivation | None]:
    """Eliminate unit formers everywhere; returns the chained CM evidence."""
    moves = []
    current = ctx
    while True:
        step = _unit_moves(current)
        if not step:
            break
        rule, path, former = step[0]
        moves.append(CtxStep(rule, path, former, current))
        current = apply_ctx_rule(rule, current, path, former)
    if not moves:
        return ctx, None
    chain = moves[-1]
    for step in reversed(moves[:-1]):
        chain = CtxComp(step, chain)
    return current, chain


def _ctx_moves(
    ctx: Context, ruleset: Ruleset
) -> Iterator[tuple[CtxStep, Context]]:
    allowed = set(rules_for(ruleset))
    for path in _paths(ctx):
        node = ctx_subtree(ctx, path)
        formers = (
            (_FORMER_NAME[type(node)],)
            if isinstance(node, (Comma, Semi, Bullet))
            else ()
        )
        for rule in _EXPLORE_SCHEMATIC:
            for former in formers:
                try:
                    result = apply_ctx_rule(rule, ctx, path, former)
                except (CtxRuleError, ValueError):
                    continue
                yield CtxStep(rule, path, former, ctx), result
        for rule in _EXPLORE_FIXED:
            if rule not in allowed:
                continue
            try:
                result = apply_ctx_rule(rule, ctx, path, None)
            except (CtxRuleError, ValueError):
                continue
            yield CtxStep(rule, path, None, ctx), result


class _Searcher:
    def __init__(self, ruleset: Ruleset):
        self.ruleset = ruleset
        self.failed: dict[Sequent, int] = {}

    def prove(self, sequent: Sequent, budget: int) -> Derivation | None:
        if budget <= 0:
            return None
        if self.failed.get(sequent, 0) >= budget:
            return None
        found = self._attempt(sequent, budget)
        if found is None and budget > self.failed.get(sequent, 0):
            self.failed[sequent] = budget
        return found

    def _attempt(self, sequent: Sequent, budget: int) -> Derivation | None:
        ctx, goal = sequent.context, sequent.goal

        if ctx == Leaf(goal):
            return Var(goal)

        normalized, evidence = _normalize_units(ctx)
        if evidence is not None:
            sub = self.prove(Sequent(normalized, goal), budget - 1)
            return CM(evidence, sub) if sub is not None else None

        # introductions
        intro = _INTRO.get(type(goal))
        if intro is not None:
            intro_cls, former = intro
            if isinstance(ctx, former):
                left = self.prove(Sequent(ctx.left, goal.left), budget - 1)
                if left is not None:
                    right = self.prove(Sequent(ctx.right, goal.right), budget - 1)
                    if right is not None:
                        return intro_cls(left, right)
        if isinstance(goal, Limp):
            sub = self.prove(
                Sequent(Comma(ctx, Leaf(goal.left)), goal.right), budget - 1
            )
            if sub is not None:
                return LimpI(sub)

        # eliminations: unfold a composite leaf in place
        for path in _paths(ctx):
            node = ctx_subtree(ctx, path)
            if not isinstance(node, Leaf):
                continue
            formula = node.formula
            elim = _ELIM.get(type(formula))
            if elim is None:
                continue
            elim_cls, former_name = elim
            expanded = ctx_replace(
                ctx,
                path,
                FORMERS[former_name](Leaf(formula.left), Leaf(formula.right)),
            )
            sub = self.prove(Sequent(expanded, goal), budget - 1)
            if sub is not None:
                return elim_cls(path, Var(formula), sub)

        # implication elimination with a Var head
        if isinstance(ctx, Comma) and isinstance(ctx.left, Leaf):
            head = ctx.left.formula
            if isinstance(head, Limp) and head.right == goal:
                sub = self.prove(Sequent(ctx.right, head.left), budget - 1)
                if sub is not None:
                    return LimpE(Var(head), sub)

        # context-morphism exploration
        for step, rewritten in _ctx_moves(ctx, self.ruleset):
            if rewritten == ctx:
                continue
            sub = self.prove(Sequent(rewritten, goal), budget - 1)
            if sub is not None:
                return CM(step, sub)

        return None


def search(
    goal: Sequent, depth: int = 14, ruleset: Ruleset = Ruleset.FULL
) -> Derivation | None:
    """Iterative-deepening backward search; None when the bound exhausts."""
    if depth < 1:
        raise ValueError("depth must be at least 1")
    searcher = _Searcher(ruleset)
    for bound in range(1, depth + 1):
        found = searcher.prove(goal, bound)
        if found is not None:
            return found
    return None
