"""The on-disk proof format (``.atp``): canonical s-expressions.

Grammar (heads are fixed; whitespace separates items):

    formula   := IDENT | (join f f) | (odot f f) | (rhd f f) | (limp f f)
    context   := * | (fm formula) | (comma c c) | (semi c c) | (bullet c c)
    path      := (at INT*)
    former    := comma | semi | bullet
    ctxderiv  := (ctx-id context)
               | (ctx-comp ctxderiv ctxderiv)
               | (RULE path former context)      for assoc/unit rules
               | (RULE path context)             for exchange/dist rules
    deriv     := (var formula) | (cm ctxderiv deriv)
               | (cut path deriv deriv)
               | (odot-i deriv deriv) | (rhd-i deriv deriv) | (join-i deriv deriv)
               | (odot-e path deriv deriv) | (rhd-e path deriv deriv)
               | (join-e path deriv deriv)
               | (limp-i deriv) | (limp-e deriv deriv)
    sequent   := (seq context formula)

A file holds exactly one derivation in canonical rendering (single spaces,
no comments); loading rejects anything that would re-render differently.
"""

from __future__ import annotations

import re

from sandcastle.atll.ctx_rules import (
    CTX_RULES,
    CtxComp,
    CtxDerivation,
    CtxId,
    CtxStep,
    _FIXED,
    _SCHEMATIC,
)
from sandcastle.atll.proofs import (
    CM,
    Cut,
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
    Atom,
    Bullet,
    Comma,
    Context,
    Formula,
    Join,
    Leaf,
    Limp,
    Odot,
    Rhd,
    Semi,
    Sequent,
    UNIT,
    Unit,
)
from sandcastle.errors import ParseError
from sandcastle.trees import IDENT_RE

_TOKEN_RE = re.compile(r"\(|\)|[^\s()]+")

SExpr = str | list


def _tokenize(text: str) -> list[str]:
    pos = 0
    tokens = []
    for match in _TOKEN_RE.finditer(text):
        between = text[pos : match.start()]
        if between.strip():
            raise ParseError(f"unexpected characters {between.strip()!r}")
        tokens.append(match.group())
        pos = match.end()
    if text[pos:].strip():
        raise ParseError(f"unexpected characters {text[pos:].strip()!r}")
    return tokens


def parse_sexpr(text: str) -> SExpr:
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty input")
    pos = 0

    def parse_one() -> SExpr:
        nonlocal pos
        if pos >= len(tokens):
            raise ParseError("unexpected end of input")
        token = tokens[pos]
        pos += 1
        if token == "(":
            items = []
            while pos < len(tokens) and tokens[pos] != ")":
                items.append(parse_one())
            if pos >= len(tokens):
                raise ParseError("missing closing parenthesis")
            pos += 1
            return items
        if token == ")":
            raise ParseError("unbalanced closing parenthesis")
        return token

    expr = parse_one()
    if pos != len(tokens):
        raise ParseError(f"trailing input after expression: {tokens[pos]!r}")
    return expr


def render_sexpr(expr: SExpr) -> str:
    if isinstance(expr, str):
        return expr
    return "(" + " ".join(render_sexpr(item) for item in expr) + ")"


# -- encoding -----------------------------------------------------------------

_FORMULA_HEADS = {Join: "join", Odot: "odot", Rhd: "rhd", Limp: "limp"}
_CONTEXT_HEADS = {Comma: "comma", Semi: "semi", Bullet: "bullet"}


def formula_to_sexpr(formula: Formula) -> SExpr:
    match formula:
        case Atom(name):
            return name
        case Join(l, r) | Odot(l, r) | Rhd(l, r) | Limp(l, r):
            return [
                _FORMULA_HEADS[type(formula)],
                formula_to_sexpr(l),
                formula_to_sexpr(r),
            ]
    raise TypeError(f"not a formula: {formula!r}")


def context_to_sexpr(ctx: Context) -> SExpr:
    match ctx:
        case Unit():
            return "*"
        case Leaf(formula):
            return ["fm", formula_to_sexpr(formula)]
        case Comma(l, r) | Semi(l, r) | Bullet(l, r):
            return [_CONTEXT_HEADS[type(ctx)], context_to_sexpr(l), context_to_sexpr(r)]
    raise TypeError(f"not a context: {ctx!r}")


def _path_to_sexpr(path: tuple[int, ...]) -> SExpr:
    return ["at"] + [str(step) for step in path]


def ctx_derivation_to_sexpr(d: CtxDerivation) -> SExpr:
    match d:
        case CtxId(context):
            return ["ctx-id", context_to_sexpr(context)]
        case CtxComp(first, second):
            return ["ctx-comp", ctx_derivation_to_sexpr(first), ctx_derivation_to_sexpr(second)]
        case CtxStep(rule, path, former, source):
            items = [rule, _path_to_sexpr(path)]
            if rule in _SCHEMATIC:
                items.append(former)
            items.append(context_to_sexpr(source))
            return items
    raise TypeError(f"not a context derivation: {d!r}")


def derivation_to_sexpr(d: Derivation) -> SExpr:
    match d:
        case Var(formula):
            return ["var", formula_to_sexpr(formula)]
        case CM(ctx, premise):
            return ["cm", ctx_derivation_to_sexpr(ctx), derivation_to_sexpr(premise)]
        case Cut(path, left, right):
            return ["cut", _path_to_sexpr(path), derivation_to_sexpr(left), derivation_to_sexpr(right)]
        case OdotI(l, r):
            return ["odot-i", derivation_to_sexpr(l), derivation_to_sexpr(r)]
        case RhdI(l, r):
            return ["rhd-i", derivation_to_sexpr(l), derivation_to_sexpr(r)]
        case JoinI(l, r):
            return ["join-i", derivation_to_sexpr(l), derivation_to_sexpr(r)]
        case OdotE(path, principal, body):
            return ["odot-e", _path_to_sexpr(path), derivation_to_sexpr(principal), derivation_to_sexpr(body)]
        case RhdE(path, principal, body):
            return ["rhd-e", _path_to_sexpr(path), derivation_to_sexpr(principal), derivation_to_sexpr(body)]
        case JoinE(path, principal, body):
            return ["join-e", _path_to_sexpr(path), derivation_to_sexpr(principal), derivation_to_sexpr(body)]
        case LimpI(premise):
            return ["limp-i", derivation_to_sexpr(premise)]
        case LimpE(fn, arg):
            return ["limp-e", derivation_to_sexpr(fn), derivation_to_sexpr(arg)]
    raise TypeError(f"not a derivation: {d!r}")


def sequent_to_sexpr(sequent: Sequent) -> SExpr:
    return ["seq", context_to_sexpr(sequent.context), formula_to_sexpr(sequent.goal)]


# -- decoding -----------------------------------------------------------------


def _expect_list(expr: SExpr, what: str) -> list:
    if not isinstance(expr, list) or not expr or not isinstance(expr[0], str):
        raise ParseError(f"expected {what}, got {render_sexpr(expr)!r}")
    return expr


def _arity(expr: list, n: int) -> None:
    if len(expr) != n + 1:
        raise ParseError(f"{expr[0]} takes {n} argument(s), got {len(expr) - 1}")


def sexpr_to_formula(expr: SExpr) -> Formula:
    if isinstance(expr, str):
        if not IDENT_RE.fullmatch(expr):
            raise ParseError(f"invalid atom {expr!r}")
        return Atom(expr)
    expr = _expect_list(expr, "a formula")
    heads = {"join": Join, "odot": Odot, "rhd": Rhd, "limp": Limp}
    if expr[0] not in heads:
        raise ParseError(f"unknown formula head {expr[0]!r}")
    _arity(expr, 2)
    return heads[expr[0]](sexpr_to_formula(expr[1]), sexpr_to_formula(expr[2]))


def sexpr_to_context(expr: SExpr) -> Context:
    if expr == "*":
        return UNIT
    expr = _expect_list(expr, "a context")
    if expr[0] == "fm":
        _arity(expr, 1)
        return Leaf(sexpr_to_formula(expr[1]))
    heads = {"comma": Comma, "semi": Semi, "bullet": Bullet}
    if expr[0] not in heads:
        raise ParseError(f"unknown context head {expr[0]!r}")
    _arity(expr, 2)
    return heads[expr[0]](sexpr_to_context(expr[1]), sexpr_to_context(expr[2]))


def _sexpr_to_path(expr: SExpr) -> tuple[int, ...]:
    expr = _expect_list(expr, "a path")
    if expr[0] != "at":
        raise ParseError(f"expected (at ...), got head {expr[0]!r}")
    steps = []
    for item in expr[1:]:
        if item not in ("0", "1"):
            raise ParseError(f"path steps are 0 or 1, got {item!r}")
        steps.append(int(item))
    return tuple(steps)


def sexpr_to_ctx_derivation(expr: SExpr) -> CtxDerivation:
    expr = _expect_list(expr, "a context derivation")
    head = expr[0]
    if head == "ctx-id":
        _arity(expr, 1)
        return CtxId(sexpr_to_context(expr[1]))
    if head == "ctx-comp":
        _arity(expr, 2)
        return CtxComp(sexpr_to_ctx_derivation(expr[1]), sexpr_to_ctx_derivation(expr[2]))
    if head in _SCHEMATIC:
        _arity(expr, 3)
        former = expr[2]
        if former not in ("comma", "semi", "bullet"):
            raise ParseError(f"invalid former {former!r}")
        return CtxStep(head, _sexpr_to_path(expr[1]), former, sexpr_to_context(expr[3]))
    if head in _FIXED:
        _arity(expr, 2)
        return CtxStep(head, _sexpr_to_path(expr[1]), None, sexpr_to_context(expr[2]))
    raise ParseError(f"unknown context rule {head!r} (known: {', '.join(CTX_RULES)})")


def sexpr_to_derivation(expr: SExpr) -> Derivation:
    expr = _expect_list(expr, "a derivation")
    head = expr[0]
    if head == "var":
        _arity(expr, 1)
        return Var(sexpr_to_formula(expr[1]))
    if head == "cm":
        _arity(expr, 2)
        return CM(sexpr_to_ctx_derivation(expr[1]), sexpr_to_derivation(expr[2]))
    if head == "cut":
        _arity(expr, 3)
        return Cut(
            _sexpr_to_path(expr[1]),
            sexpr_to_derivation(expr[2]),
            sexpr_to_derivation(expr[3]),
        )
    intro = {"odot-i": OdotI, "rhd-i": RhdI, "join-i": JoinI}
    if head in intro:
        _arity(expr, 2)
        return intro[head](sexpr_to_derivation(expr[1]), sexpr_to_derivation(expr[2]))
    elim = {"odot-e": OdotE, "rhd-e": RhdE, "join-e": JoinE}
    if head in elim:
        _arity(expr, 3)
        return elim[head](
            _sexpr_to_path(expr[1]),
            sexpr_to_derivation(expr[2]),
            sexpr_to_derivation(expr[3]),
        )
    if head == "limp-i":
        _arity(expr, 1)
        return LimpI(sexpr_to_derivation(expr[1]))
    if head == "limp-e":
        _arity(expr, 2)
        return LimpE(sexpr_to_derivation(expr[1]), sexpr_to_derivation(expr[2]))
    raise ParseError(f"unknown derivation head {head!r}")


def sexpr_to_sequent(expr: SExpr) -> Sequent:
    expr = _expect_list(expr, "a sequent")
    if expr[0] != "seq":
        raise ParseError(f"expected (seq ...), got head {expr[0]!r}")
    _arity(expr, 2)
    return Sequent(sexpr_to_context(expr[1]), sexpr_to_formula(expr[2]))


# -- files --------------------------------------------------------------------


def render_derivation(d: Derivation) -> str:
    return render_sexpr(derivation_to_sexpr(d))


def render_sequent(sequent: Sequent) -> str:
    return render_sexpr(sequent_to_sexpr(sequent))


def parse_sequent(text: str) -> Sequent:
    return sexpr_to_sequent(parse_sexpr(text))


def load_derivation(text: str) -> Derivation:
    """Parse a proof file, rejecting non-canonical renderings."""
    derivation = sexpr_to_derivation(parse_sexpr(text))
    canonical = render_derivation(derivation)
    if canonical != text.strip():
        raise ParseError(
            "file is not in canonical form (re-rendering differs); "
            "regenerate it with the renderer"
        )
    return derivation
