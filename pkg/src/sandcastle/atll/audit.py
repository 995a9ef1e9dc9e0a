"""Scalar soundness audit of every rule schema.

Each rule is read off at the four-value level: comma is interpreted by
the chosen scalar operator (parallel conjunction or tensor), semicolon by
sequential conjunction, bullet by choice, the shared unit symbol by the
tensor unit, and a sequent as the inequality interpretation(context) <=
interpretation(goal).  A rule is sound when, over every assignment of
values to its schematic metavariables, true premises force a true
conclusion.  Context-with-hole schemas are instantiated with the identity
hole and all six one-level holes (each former, each side), which is
exhaustive for monotone formers up to nesting depth one.

The report deliberately includes unsound rows: they document where a
comma interpretation clashes with a rule rather than resolving the clash.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable

from sandcastle.four import FOUR_VALUES, Four, TENSOR_UNIT, join4, limp4, odot4, rhd4, tensor4

COMMA_INTERPRETATIONS = ("odot", "tensor")

_HOLES: tuple[tuple[str, Callable], ...] = (
    ("hole=[]", lambda op, d, x: x),
    ("hole=(d , [])", lambda op, d, x: op["comma"](d, x)),
    ("hole=([] , d)", lambda op, d, x: op["comma"](x, d)),
    ("hole=(d ; [])", lambda op, d, x: op["semi"](d, x)),
    ("hole=([] ; d)", lambda op, d, x: op["semi"](x, d)),
    ("hole=(d . [])", lambda op, d, x: op["bullet"](d, x)),
    ("hole=([] . d)", lambda op, d, x: op["bullet"](x, d)),
)


@dataclass(frozen=True)
class RuleAudit:
    rule: str
    sound: bool
    checked: int
    witnesses: tuple[str, ...]


@dataclass(frozen=True)
class AuditReport:
    comma: str
    rules: tuple[RuleAudit, ...]

    def __getitem__(self, rule: str) -> RuleAudit:
        for entry in self.rules:
            if entry.rule == rule:
                return entry
        raise KeyError(rule)

    @property
    def unsound(self) -> tuple[str, ...]:
        return tuple(r.rule for r in self.rules if not r.sound)

    def to_json_dict(self) -> dict:
        return {
            "comma": self.comma,
            "rules": [
                {
                    "rule": r.rule,
                    "sound": r.sound,
                    "checked": r.checked,
                    "witnesses": list(r.witnesses),
                }
                for r in self.rules
            ],
        }


def _ops(comma_interp: str) -> dict[str, Callable]:
    if comma_interp not in COMMA_INTERPRETATIONS:
        raise ValueError(f"comma interpretation must be odot or tensor, got {comma_interp!r}")
    return {
        "comma": odot4 if comma_interp == "odot" else tensor4,
        "semi": rhd4,
        "bullet": join4,
    }


def _render(values: tuple[Four, ...]) -> str:
    return "(" + ", ".join(v.render() for v in values) + ")"


def _audit(name, arity, check) -> RuleAudit:
    witnesses = []
    checked = 0
    for values in itertools.product(FOUR_VALUES, repeat=arity):
        checked += 1
        label = check(*values)
        if label is not None:
            witnesses.append(label)
    return RuleAudit(name, not witnesses, checked, tuple(witnesses[:3]))


def _axiom(name, arity, lhs, rhs) -> RuleAudit:
    """Premise-free context rule: sound iff lhs <= rhs everywhere."""

    def check(*values):
        if lhs(*values) <= rhs(*values):
            return None
        return _render(values)

    return _audit(name, arity, check)


def _holed_elim(name, op, principal_value) -> RuleAudit:
    """Elimination schema: g <= conn(a,b) and H(ctx(a,b)) <= c entail H(g) <= c.

    ``principal_value`` gives the formula connective's scalar; the hole
    content uses the context former's scalar (they differ exactly when the
    comma interpretation is the tensor).
    """
    witnesses = []
    checked = 0
    for hole_label, hole in _HOLES:
        for g, a, b, c, d in itertools.product(FOUR_VALUES, repeat=5):
            checked += 1
            content = op["comma" if name.startswith("odot") else
                         "semi" if name.startswith("rhd") else "bullet"](a, b)
            if g <= principal_value(a, b) and hole(op, d, content) <= c:
                if not hole(op, d, g) <= c:
                    witnesses.append(f"{hole_label} {_render((g, a, b, c, d))}")
    return RuleAudit(name, not witnesses, checked, tuple(witnesses[:3]))


def audit_soundness(comma_interp: str = "odot") -> AuditReport:
    """Per-rule scalar soundness report under one comma interpretation."""
    op = _ops(comma_interp)
    unit = TENSOR_UNIT
    rules: list[RuleAudit] = []

    # context-morphism rules
    rules.append(_audit("ctx-id", 1, lambda a: None if a <= a else _render((a,))))
    rules.append(
        _audit(
            "ctx-comp",
            3,
            lambda a, b, c: None if not (a <= b and b <= c) or a <= c else _render((a, b, c)),
        )
    )
    for former in ("comma", "semi", "bullet"):
        f = op[former]
        rules.append(
            _audit(
                f"ctx-cong({former})",
                3,
                lambda a, b, d, f=f: None
                if not a <= b or (f(d, a) <= f(d, b) and f(a, d) <= f(b, d))
                else _render((a, b, d)),
            )
        )
        rules.append(
            _axiom(f"assoc-r({former})", 3, lambda a, b, c, f=f: f(f(a, b), c), lambda a, b, c, f=f: f(a, f(b, c)))
        )
        rules.append(
            _axiom(f"assoc-l({former})", 3, lambda a, b, c, f=f: f(a, f(b, c)), lambda a, b, c, f=f: f(f(a, b), c))
        )
        rules.append(_axiom(f"unit-intro-l({former})", 1, lambda a: a, lambda a, f=f: f(unit, a)))
        rules.append(_axiom(f"unit-intro-r({former})", 1, lambda a: a, lambda a, f=f: f(a, unit)))
        rules.append(_axiom(f"unit-elim-l({former})", 1, lambda a, f=f: f(unit, a), lambda a: a))
        rules.append(_axiom(f"unit-elim-r({former})", 1, lambda a, f=f: f(a, unit), lambda a: a))
    rules.append(
        _axiom("exch-comma", 2, lambda a, b: op["comma"](a, b), lambda a, b: op["comma"](b, a))
    )
    rules.append(
        _axiom("exch-bullet", 2, lambda a, b: op["bullet"](a, b), lambda a, b: op["bullet"](b, a))
    )
    dists = (
        ("dist-semi-r", "semi", lambda f: lambda a, b, c: (f(a, join4(b, c)), join4(f(a, b), f(a, c)))),
        ("dist-comma-r", "comma", lambda f: lambda a, b, c: (f(a, join4(b, c)), join4(f(a, b), f(a, c)))),
        ("dist-semi-l", "semi", lambda f: lambda a, b, c: (f(join4(a, b), c), join4(f(a, c), f(b, c)))),
    )
    for base_name, former, make in dists:
        sides = make(op[former])
        rules.append(
            _axiom(f"{base_name}-fwd", 3, lambda a, b, c, s=sides: s(a, b, c)[0], lambda a, b, c, s=sides: s(a, b, c)[1])
        )
        rules.append(
            _axiom(f"{base_name}-rev", 3, lambda a, b, c, s=sides: s(a, b, c)[1], lambda a, b, c, s=sides: s(a, b, c)[0])
        )

    # inference rules
    rules.append(_audit("var", 1, lambda a: None if a <= a else _render((a,))))
    rules.append(
        _audit(
            "cm",
            3,
            lambda g2, g, a: None if not (g2 <= g and g <= a) or g2 <= a else _render((g2, g, a)),
        )
    )

    def cut_audit() -> RuleAudit:
        witnesses = []
        checked = 0
        for hole_label, hole in _HOLES:
            for g, a, c, d in itertools.product(FOUR_VALUES, repeat=4):
                checked += 1
                if g <= a and hole(op, d, a) <= c and not hole(op, d, g) <= c:
                    witnesses.append(f"{hole_label} {_render((g, a, c, d))}")
        return RuleAudit("cut", not witnesses, checked, tuple(witnesses[:3]))

    rules.append(cut_audit())

    intro_specs = (
        ("odot-i", "comma", odot4),
        ("rhd-i", "semi", rhd4),
        ("join-i", "bullet", join4),
    )
    for name, former, conn in intro_specs:
        f = op[former]
        rules.append(
            _audit(
                name,
                4,
                lambda g, a, d, b, f=f, conn=conn: None
                if not (g <= a and d <= b) or f(g, d) <= conn(a, b)
                else _render((g, a, d, b)),
            )
        )

    rules.append(_holed_elim("odot-e", op, odot4))
    rules.append(_holed_elim("rhd-e", op, rhd4))
    rules.append(_holed_elim("join-e", op, join4))

    rules.append(
        _audit(
            "limp-i",
            3,
            lambda g, a, b: None
            if not op["comma"](g, a) <= b or g <= limp4(a, b)
            else _render((g, a, b)),
        )
    )
    rules.append(
        _audit(
            "limp-e",
            4,
            lambda g, a, b, d: None
            if not (g <= limp4(a, b) and d <= a) or op["comma"](g, d) <= b
            else _render((g, a, b, d)),
        )
    )

    return AuditReport(comma_interp, tuple(rules))
