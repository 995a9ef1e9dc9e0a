"""The context-morphism judgment: checkable transformations of contexts.

Primitive steps rewrite one subcontext, addressed by a path; ``CtxId`` and
``CtxComp`` give reflexivity and transitivity.  Associativity and unit
rules are schematic in the former; exchange exists only for comma and
bullet (sequential conjunction must not commute); distribution rules let
semicolon and comma distribute over bullet in the right argument, and the
full ruleset additionally grants semicolon left-argument distribution.
"""

from __future__ import annotations

from dataclasses import dataclass

from sandcastle.atll.syntax import (
    Bullet,
    Comma,
    Context,
    CtxPath,
    FORMERS,
    Semi,
    UNIT,
    Unit,
    context_str,
    ctx_replace,
    ctx_subtree,
)
from sandcastle.rewrite import AxiomSet

Ruleset = AxiomSet


class CtxRuleError(ValueError):
    pass


def _former(name: str | None):
    if name not in FORMERS:
        raise CtxRuleError(f"rule needs a former (comma|semi|bullet), got {name!r}")
    return FORMERS[name]


def _assoc_r(node: Context, former):
    if isinstance(node, former) and isinstance(node.left, former):
        return former(node.left.left, former(node.left.right, node.right))
    raise CtxRuleError("expected ((_ o _) o _) with the given former")


def _assoc_l(node: Context, former):
    if isinstance(node, former) and isinstance(node.right, former):
        return former(former(node.left, node.right.left), node.right.right)
    raise CtxRuleError("expected (_ o (_ o _)) with the given former")


def _unit_intro_l(node: Context, former):
    return former(UNIT, node)


def _unit_intro_r(node: Context, former):
    return former(node, UNIT)


def _unit_elim_l(node: Context, former):
    if isinstance(node, former) and isinstance(node.left, Unit):
        return node.right
    raise CtxRuleError("expected (* o _) with the given former")


def _unit_elim_r(node: Context, former):
    if isinstance(node, former) and isinstance(node.right, Unit):
        return node.left
    raise CtxRuleError("expected (_ o *) with the given former")


def _exch(kind):
    def apply(node: Context, former):
        if former is not None and former is not kind:
            raise CtxRuleError("exchange rule fixes its former")
        if isinstance(node, kind):
            return kind(node.right, node.left)
        raise CtxRuleError(f"no exchange at a {type(node).__name__} node")

    return apply


def _dist_r_fwd(outer):
    def apply(node: Context, former):
        if isinstance(node, outer) and isinstance(node.right, Bullet):
            g, d, s = node.left, node.right.left, node.right.right
            return Bullet(outer(g, d), outer(g, s))
        raise CtxRuleError("expected (G o (D . S)) for right distribution")

    return apply


def _dist_r_rev(outer):
    def apply(node: Context, former):
        if (
            isinstance(node, Bullet)
            and isinstance(node.left, outer)
            and isinstance(node.right, outer)
            and node.left.left == node.right.left
        ):
            return outer(node.left.left, Bullet(node.left.right, node.right.right))
        raise CtxRuleError("expected ((G o D) . (G o S)) with equal G")

    return apply


def _dist_semi_l_fwd(node: Context, former):
    if isinstance(node, Semi) and isinstance(node.left, Bullet):
        g, d, s = node.left.left, node.left.right, node.right
        return Bullet(Semi(g, s), Semi(d, s))
    raise CtxRuleError("expected ((G . D) ; S) for left distribution")


def _dist_semi_l_rev(node: Context, former):
    if (
        isinstance(node, Bullet)
        and isinstance(node.left, Semi)
        and isinstance(node.right, Semi)
        and node.left.right == node.right.right
    ):
        return Semi(Bullet(node.left.left, node.right.left), node.left.right)
    raise CtxRuleError("expected ((G ; S) . (D ; S)) with equal S")


_SCHEMATIC = {
    "assoc-r": _assoc_r,
    "assoc-l": _assoc_l,
    "unit-intro-l": _unit_intro_l,
    "unit-intro-r": _unit_intro_r,
    "unit-elim-l": _unit_elim_l,
    "unit-elim-r": _unit_elim_r,
}

_FIXED = {
    "exch-comma": _exch(Comma),
    "exch-bullet": _exch(Bullet),
    "dist-semi-r-fwd": _dist_r_fwd(Semi),
    "dist-semi-r-rev": _dist_r_rev(Semi),
    "dist-comma-r-fwd": _dist_r_fwd(Comma),
    "dist-comma-r-rev": _dist_r_rev(Comma),
    "dist-semi-l-fwd": _dist_semi_l_fwd,
    "dist-semi-l-rev": _dist_semi_l_rev,
}

CTX_RULES = tuple(_SCHEMATIC) + tuple(_FIXED)
FULL_ONLY_CTX_RULES = ("dist-semi-l-fwd", "dist-semi-l-rev")


def rules_for(ruleset: Ruleset) -> tuple[str, ...]:
    if ruleset is Ruleset.FULL:
        return CTX_RULES
    return tuple(r for r in CTX_RULES if r not in FULL_ONLY_CTX_RULES)


def apply_ctx_rule(
    rule: str,
    context: Context,
    path: CtxPath = (),
    former: str | None = None,
    ruleset: Ruleset = Ruleset.FULL,
) -> Context:
    """Rewrite the subcontext at ``path``; raises CtxRuleError on mismatch."""
    if rule in FULL_ONLY_CTX_RULES and ruleset is not Ruleset.FULL:
        raise CtxRuleError(f"{rule} is not available under ruleset={ruleset.value}")
    node = ctx_subtree(context, path)
    if rule in _SCHEMATIC:
        new = _SCHEMATIC[rule](node, _former(former))
    elif rule in _FIXED:
        new = _FIXED[rule](node, FORMERS.get(former) if former else None)
    else:
        raise CtxRuleError(f"unknown context rule {rule!r}")
    return ctx_replace(context, path, new)


class CtxDerivation:
    __slots__ = ()


@dataclass(frozen=True)
class CtxId(CtxDerivation):
    context: Context


@dataclass(frozen=True)
class CtxComp(CtxDerivation):
    first: CtxDerivation
    second: CtxDerivation


@dataclass(frozen=True)
class CtxStep(CtxDerivation):
    rule: str
    path: CtxPath
    former: str | None
    source: Context


@dataclass(frozen=True)
class CtxVerdict:
    valid: bool
    source: Context | None = None
    target: Context | None = None
    node: int | None = None
    reason: str | None = None


class _Invalid(Exception):
    def __init__(self, node: int, reason: str):
        self.node = node
        self.reason = reason
        super().__init__(f"node {node}: {reason}")


def _check_ctx(d: CtxDerivation, counter: list[int], ruleset: Ruleset) -> tuple[Context, Context]:
    index = counter[0]
    counter[0] += 1
    match d:
        case CtxId(context):
            return context, context
        case CtxStep(rule, path, former, source):
            try:
                target = apply_ctx_rule(rule, source, path, former, ruleset)
            except (CtxRuleError, ValueError) as exc:
                raise _Invalid(index, str(exc)) from None
            return source, target
        case CtxComp(first, second):
            src1, tgt1 = _check_ctx(first, counter, ruleset)
            src2, tgt2 = _check_ctx(second, counter, ruleset)
            if tgt1 != src2:
                raise _Invalid(
                    index,
                    f"composition mismatch: {context_str(tgt1)} vs {context_str(src2)}",
                )
            return src1, tgt2
    raise _Invalid(index, f"not a context derivation: {d!r}")


def check_ctx_derivation(
    d: CtxDerivation, ruleset: Ruleset = Ruleset.FULL
) -> CtxVerdict:
    """Validate bottom-up; on success return the endpoints."""
    try:
        source, target = _check_ctx(d, [0], ruleset)
    except _Invalid as exc:
        return CtxVerdict(False, node=exc.node, reason=exc.reason)
    return CtxVerdict(True, source=source, target=target)


def steps_chain(source: Context, moves: list[tuple[str, CtxPath, str | None]]) -> CtxDerivation:
    """Convenience builder: a comp-chain of primitive steps from ``source``."""
    if not moves:
        return CtxId(source)
    rule, path, former = moves[0]
    step = CtxStep(rule, path, former, source)
    current = apply_ctx_rule(rule, source, path, former)
    rest = steps_chain(current, moves[1:])
    if isinstance(rest, CtxId):
        return step
    return CtxComp(step, rest)
