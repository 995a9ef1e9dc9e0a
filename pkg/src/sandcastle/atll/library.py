"""Bundled derivations: both directions of the seven logical equivalences.

Commutativity of choice and parallel conjunction, associativity of all
three attack connectives, and distribution of parallel/sequential
conjunction over choice, each packaged as ``* |- lhs -o rhs``.  All
fourteen check under the paper ruleset: right-argument distribution
suffices for every entry (only the flagship two-tree example needs the
full ruleset's left distribution).
"""

from __future__ import annotations

from dataclasses import dataclass

from sandcastle.atll.ctx_rules import CtxStep, Ruleset
from sandcastle.atll.proofs import (
    CM,
    Derivation,
    JoinE,
    JoinI,
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
    Formula,
    Join,
    Leaf,
    Limp,
    Odot,
    Rhd,
    Semi,
    Sequent,
    UNIT,
)

_INTRO = {Odot: OdotI, Rhd: RhdI, Join: JoinI}
_ELIM = {Odot: OdotE, Rhd: RhdE, Join: JoinE}
_FORMER = {Odot: (Comma, "comma"), Rhd: (Semi, "semi"), Join: (Bullet, "bullet")}
_EXCH = {Comma: "exch-comma", Bullet: "exch-bullet"}
_DIST_FWD = {Comma: "dist-comma-r-fwd", Semi: "dist-semi-r-fwd"}
_DIST_REV = {Comma: "dist-comma-r-rev", Semi: "dist-semi-r-rev"}


@dataclass(frozen=True)
class LibraryEntry:
    name: str
    sequent: Sequent
    derivation: Derivation
    ruleset: Ruleset


def _implication(lhs: Formula, rhs: Formula, inner: Derivation) -> Derivation:
    """Wrap ``inner : lhs |- rhs`` into ``* |- lhs -o rhs``."""
    start = Comma(UNIT, Leaf(lhs))
    return LimpI(CM(CtxStep("unit-elim-l", (), "comma", start), inner))


def _commutativity(conn, a: Formula, b: Formula) -> Derivation:
    former, _ = _FORMER[conn]
    lhs, rhs = conn(a, b), conn(b, a)
    expanded = former(Leaf(a), Leaf(b))
    body = CM(
        CtxStep(_EXCH[former], (), None, expanded),
        _INTRO[conn](Var(b), Var(a)),
    )
    return _implication(lhs, rhs, _ELIM[conn]((), Var(lhs), body))


def _assoc_left_to_right(conn, a: Formula, b: Formula, c: Formula) -> Derivation:
    former, former_name = _FORMER[conn]
    lhs = conn(conn(a, b), c)
    rhs = conn(a, conn(b, c))
    grouped = former(former(Leaf(a), Leaf(b)), Leaf(c))
    inner = CM(
        CtxStep("assoc-r", (), former_name, grouped),
        _INTRO[conn](Var(a), _INTRO[conn](Var(b), Var(c))),
    )
    body = _ELIM[conn]((0,), Var(conn(a, b)), inner)
    return _implication(lhs, rhs, _ELIM[conn]((), Var(lhs), body))


def _assoc_right_to_left(conn, a: Formula, b: Formula, c: Formula) -> Derivation:
    former, former_name = _FORMER[conn]
    lhs = conn(a, conn(b, c))
    rhs = conn(conn(a, b), c)
    grouped = former(Leaf(a), former(Leaf(b), Leaf(c)))
    inner = CM(
        CtxStep("assoc-l", (), former_name, grouped),
        _INTRO[conn](_INTRO[conn](Var(a), Var(b)), Var(c)),
    )
    body = _ELIM[conn]((1,), Var(conn(b, c)), inner)
    return _implication(lhs, rhs, _ELIM[conn]((), Var(lhs), body))


def _dist_left_to_right(conn, a: Formula, b: Formula, c: Formula) -> Derivation:
    former, _ = _FORMER[conn]
    lhs = conn(a, Join(b, c))
    rhs = Join(conn(a, b), conn(a, c))
    expanded = former(Leaf(a), Bullet(Leaf(b), Leaf(c)))
    inner = CM(
        CtxStep(_DIST_FWD[former], (), None, expanded),
        JoinI(_INTRO[conn](Var(a), Var(b)), _INTRO[conn](Var(a), Var(c))),
    )
    body = JoinE((1,), Var(Join(b, c)), inner)
    return _implication(lhs, rhs, _ELIM[conn]((), Var(lhs), body))


def _dist_right_to_left(conn, a: Formula, b: Formula, c: Formula) -> Derivation:
    former, _ = _FORMER[conn]
    lhs = Join(conn(a, b), conn(a, c))
    rhs = conn(a, Join(b, c))
    distributed = Bullet(former(Leaf(a), Leaf(b)), former(Leaf(a), Leaf(c)))
    inner = CM(
        CtxStep(_DIST_REV[former], (), None, distributed),
        _INTRO[conn](Var(a), JoinI(Var(b), Var(c))),
    )
    body2 = _ELIM[conn]((1,), Var(conn(a, c)), inner)
    body1 = _ELIM[conn]((0,), Var(conn(a, b)), body2)
    return _implication(lhs, rhs, JoinE((), Var(lhs), body1))


def equivalence_library() -> list[LibraryEntry]:
    """The 14 derivations (7 equivalences, both implication directions)."""
    a, b, c = Atom("A"), Atom("B"), Atom("C")
    entries: list[LibraryEntry] = []

    def add(name: str, lhs: Formula, rhs: Formula, derivation: Derivation) -> None:
        entries.append(
            LibraryEntry(
                name, Sequent(UNIT, Limp(lhs, rhs)), derivation, Ruleset.PAPER
            )
        )

    add("join-comm-lr", Join(a, b), Join(b, a), _commutativity(Join, a, b))
    add("join-comm-rl", Join(b, a), Join(a, b), _commutativity(Join, b, a))
    add("odot-comm-lr", Odot(a, b), Odot(b, a), _commutativity(Odot, a, b))
    add("odot-comm-rl", Odot(b, a), Odot(a, b), _commutativity(Odot, b, a))
    add(
        "join-assoc-lr",
        Join(Join(a, b), c),
        Join(a, Join(b, c)),
        _assoc_left_to_right(Join, a, b, c),
    )
    add(
        "join-assoc-rl",
        Join(a, Join(b, c)),
        Join(Join(a, b), c),
        _assoc_right_to_left(Join, a, b, c),
    )
    add(
        "odot-assoc-lr",
        Odot(Odot(a, b), c),
        Odot(a, Odot(b, c)),
        _assoc_left_to_right(Odot, a, b, c),
    )
    add(
        "odot-assoc-rl",
        Odot(a, Odot(b, c)),
        Odot(Odot(a, b), c),
        _assoc_right_to_left(Odot, a, b, c),
    )
    add(
        "rhd-assoc-lr",
        Rhd(Rhd(a, b), c),
        Rhd(a, Rhd(b, c)),
        _assoc_left_to_right(Rhd, a, b, c),
    )
    add(
        "rhd-assoc-rl",
        Rhd(a, Rhd(b, c)),
        Rhd(Rhd(a, b), c),
        _assoc_right_to_left(Rhd, a, b, c),
    )
    add(
        "odot-dist-lr",
        Odot(a, Join(b, c)),
        Join(Odot(a, b), Odot(a, c)),
        _dist_left_to_right(Odot, a, b, c),
    )
    add(
        "odot-dist-rl",
        Join(Odot(a, b), Odot(a, c)),
        Odot(a, Join(b, c)),
        _dist_right_to_left(Odot, a, b, c),
    )
    add(
        "rhd-dist-lr",
        Rhd(a, Join(b, c)),
        Join(Rhd(a, b), Rhd(a, c)),
        _dist_left_to_right(Rhd, a, b, c),
    )
    add(
        "rhd-dist-rl",
        Join(Rhd(a, b), Rhd(a, c)),
        Rhd(a, Join(b, c)),
        _dist_right_to_left(Rhd, a, b, c),
    )
    return entries
