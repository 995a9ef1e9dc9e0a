"""Axiom rewriting: normal forms, traces, and syntactic equivalence.

The equational theory has seven axioms over OR/AND/SAND plus one optional
extension:

    E1  OR(OR(A,B),C)    ~ OR(A,OR(B,C))
    E2  AND(AND(A,B),C)  ~ AND(A,AND(B,C))
    E3  SAND(SAND(A,B),C)~ SAND(A,SAND(B,C))
    E4  OR(A,B)          ~ OR(B,A)
    E5  AND(A,B)         ~ AND(B,A)
    E6  AND(A,OR(B,C))   ~ OR(AND(A,B),AND(A,C))
    E7  SAND(A,OR(B,C))  ~ OR(SAND(A,B),SAND(A,C))
    Ext SAND(OR(A,B),C)  ~ OR(SAND(A,C),SAND(B,C))   (axiom set FULL only)

Normalization applies single axiom instances and records every step, so a
trace replays exactly.  The strategy: distribute AND over OR (both
arguments, the mirrored case via E5 then E6) and SAND over OR (second
argument via E7; first argument too under FULL via Ext) until no OR is
reachable below AND/SAND, flatten associative chains to right-nested
spines, and sort OR/AND spine elements by the structural order.  SAND
spine elements are never reordered.  SAND spines are flattened *before*
distributing so that the result does not depend on how E3 had grouped the
input; duplicate OR children are never merged (there is no OR-idempotence
axiom).
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from typing import Iterator

from sandcastle.errors import ResourceLimitError, RewriteError
from sandcastle.limits import node_budget
from sandcastle.trees import (
    And,
    AttackTree,
    Base,
    Or,
    Path,
    Sand,
    node_count,
    order_key,
    replace_at,
    subtree_at,
)


class Axiom(enum.Enum):
    E1 = "E1"
    E2 = "E2"
    E3 = "E3"
    E4 = "E4"
    E5 = "E5"
    E6 = "E6"
    E7 = "E7"
    EXT = "Ext"


class Direction(enum.Enum):
    LR = "LtoR"
    RL = "RtoL"

    @property
    def inverse(self) -> "Direction":
        return Direction.RL if self is Direction.LR else Direction.LR


class AxiomSet(enum.Enum):
    """PAPER is exactly E1-E7; FULL adds Ext (both directions)."""

    PAPER = "paper"
    FULL = "full"

    @classmethod
    def from_name(cls, name: str) -> "AxiomSet":
        try:
            return cls(name.lower())
        except ValueError:
            raise ValueError(f"unknown axiom set {name!r} (paper|full)") from None

    @property
    def axioms(self) -> tuple[Axiom, ...]:
        base = (Axiom.E1, Axiom.E2, Axiom.E3, Axiom.E4, Axiom.E5, Axiom.E6, Axiom.E7)
        return base + (Axiom.EXT,) if self is AxiomSet.FULL else base


@dataclass(frozen=True)
class RewriteStep:
    path: Path
    axiom: Axiom
    direction: Direction

    @property
    def inverted(self) -> "RewriteStep":
        return RewriteStep(self.path, self.axiom, self.direction.inverse)


@dataclass(frozen=True)
class RewriteTrace:
    steps: tuple[RewriteStep, ...]

    def __len__(self) -> int:
        return len(self.steps)


@dataclass(frozen=True)
class SyntacticVerdict:
    equivalent: bool
    trace: RewriteTrace | None = None


def _apply_local(node: AttackTree, axiom: Axiom, direction: Direction) -> tuple[AttackTree, int]:
    """Rewrite at the root of ``node``; returns (result, node-count delta)."""
    lr = direction is Direction.LR
    match axiom:
        case Axiom.E1 | Axiom.E2 | Axiom.E3:
            op = {Axiom.E1: Or, Axiom.E2: And, Axiom.E3: Sand}[axiom]
            if lr:
                if isinstance(node, op) and isinstance(node.left, op):
                    a, b, c = node.left.left, node.left.right, node.right
                    return op(a, op(b, c)), 0
            else:
                if isinstance(node, op) and isinstance(node.right, op):
                    a, b, c = node.left, node.right.left, node.right.right
                    return op(op(a, b), c), 0
        case Axiom.E4 | Axiom.E5:
            op = Or if axiom is Axiom.E4 else And
            if isinstance(node, op):
                return op(node.right, node.left), 0
        case Axiom.E6 | Axiom.E7:
            op = And if axiom is Axiom.E6 else Sand
            if lr:
                if isinstance(node, op) and isinstance(node.right, Or):
                    a = node.left
                    b, c = node.right.left, node.right.right
                    return Or(op(a, b), op(a, c)), node_count(a) + 1
            else:
                if (
                    isinstance(node, Or)
                    and isinstance(node.left, op)
                    and isinstance(node.right, op)
                    and node.left.left == node.right.left
                ):
                    a = node.left.left
                    return op(a, Or(node.left.right, node.right.right)), -(node_count(a) + 1)
        case Axiom.EXT:
            if lr:
                if isinstance(node, Sand) and isinstance(node.left, Or):
                    a, b = node.left.left, node.left.right
                    c = node.right
                    return Or(Sand(a, c), Sand(b, c)), node_count(c) + 1
            else:
                if (
                    isinstance(node, Or)
                    and isinstance(node.left, Sand)
                    and isinstance(node.right, Sand)
                    and node.left.right == node.right.right
                ):
                    c = node.left.right
                    return Sand(Or(node.left.left, node.right.left), c), -(node_count(c) + 1)
    raise RewriteError(f"{axiom.value} ({direction.value}) does not match {node!r}")


def apply_step(tree: AttackTree, step: RewriteStep) -> AttackTree:
    """Apply one axiom instance at a position; RewriteError on mismatch."""
    sub = subtree_at(tree, step.path)
    new_sub, _ = _apply_local(sub, step.axiom, step.direction)
    return replace_at(tree, step.path, new_sub)


def replay(tree: AttackTree, trace: RewriteTrace) -> AttackTree:
    """Replay a trace from ``tree``; each step must match where recorded."""
    for step in trace.steps:
        tree = apply_step(tree, step)
    return tree


def single_steps(tree: AttackTree, axioms: AxiomSet) -> Iterator[tuple[RewriteStep, AttackTree]]:
    """All single-step rewrites of ``tree``, in deterministic preorder."""

    def paths(node: AttackTree, here: Path) -> Iterator[Path]:
        yield here
        if not isinstance(node, Base):
            yield from paths(node.left, here + (0,))
            yield from paths(node.right, here + (1,))

    for path in paths(tree, ()):
        sub = subtree_at(tree, path)
        for axiom in axioms.axioms:
            for direction in (Direction.LR, Direction.RL):
                try:
                    new_sub, _ = _apply_local(sub, axiom, direction)
                except RewriteError:
                    continue
                step = RewriteStep(path, axiom, direction)
                yield step, replace_at(tree, path, new_sub)


def bounded_closure(
    tree: AttackTree,
    axioms: AxiomSet,
    depth: int,
    size_cap: int | None = None,
) -> frozenset[AttackTree]:
    """Breadth-first closure of single-step rewrites, up to ``depth`` steps.

    ``size_cap`` prunes intermediate trees above the given node count.
    This is the independent oracle used to cross-check normal-form
    equality at small scale; it never consults the normalizer.
    """
    seen = {tree}
    frontier = deque([tree])
    for _ in range(depth):
        if not frontier:
            break
        next_frontier: deque[AttackTree] = deque()
        while frontier:
            current = frontier.popleft()
            for _, result in single_steps(current, axioms):
                if size_cap is not None and node_count(result) > size_cap:
                    continue
                if result not in seen:
                    seen.add(result)
                    next_frontier.append(result)
        frontier = next_frontier
    return frozenset(seen)


class _Normalizer:
    """Stateful single-run normalizer; records every elementary step."""

    def __init__(self, tree: AttackTree, axioms: AxiomSet, budget: int):
        self.tree = tree
        self.axioms = axioms
        self.budget = budget
        self.steps: list[RewriteStep] = []
        self.size = node_count(tree)
        if self.size > budget:
            raise ResourceLimitError(f"input tree has {self.size} nodes, budget {budget}")

    def run(self) -> tuple[AttackTree, tuple[RewriteStep, ...]]:
        self._norm(())
        return self.tree, tuple(self.steps)

    # -- plumbing ---------------------------------------------------------

    def _node(self, path: Path) -> AttackTree:
        return subtree_at(self.tree, path)

    def _apply(self, path: Path, axiom: Axiom, direction: Direction) -> None:
        sub = subtree_at(self.tree, path)
        new_sub, delta = _apply_local(sub, axiom, direction)
        self.size += delta
        if self.size > self.budget:
            raise ResourceLimitError(
                f"normal form exceeds node budget {self.budget} (axiom set {self.axioms.value})"
            )
        self.tree = replace_at(self.tree, path, new_sub)
        self.steps.append(RewriteStep(path, axiom, direction))

    # -- spine helpers ----------------------------------------------------

    def _flatten(self, path: Path, op: type, axiom: Axiom) -> None:
        """Rotate until the op-spine below ``path`` is right-nested."""
        q = path
        while True:
            node = self._node(q)
            if not isinstance(node, op):
                return
            while isinstance(node.left, op):
                self._apply(q, axiom, Direction.LR)
                node = self._node(q)
            q = q + (1,)

    def _spine_elements(self, path: Path, op: type) -> list[Path]:
        """Paths of spine elements, assuming the spine is right-nested."""
        paths = []
        q = path
        while isinstance(self._node(q), op):
            paths.append(q + (0,))
            q = q + (1,)
        paths.append(q)
        return paths

    def _swap_adjacent(self, path: Path, i: int, m: int, assoc: Axiom, comm: Axiom) -> None:
        """Swap spine elements i and i+1 of an m-element commutative spine."""
        q = path + (1,) * i
        if i == m - 2:
            self._apply(q, comm, Direction.LR)
        else:
            self._apply(q, assoc, Direction.RL)
            self._apply(q + (0,), comm, Direction.LR)
            self._apply(q, assoc, Direction.LR)

    def _sort_spine(self, path: Path, op: type, assoc: Axiom, comm: Axiom) -> None:
        elems = self._spine_elements(path, op)
        m = len(elems)
        if m < 2:
            return
        keys = [order_key(self._node(p)) for p in elems]
        for end in range(m - 1, 0, -1):
            for i in range(end):
                if keys[i] > keys[i + 1]:
                    self._swap_adjacent(path, i, m, assoc, comm)
                    keys[i], keys[i + 1] = keys[i + 1], keys[i]

    # -- normalization ----------------------------------------------------

    def _norm(self, path: Path) -> None:
        node = self._node(path)
        if isinstance(node, Base):
            return
        self._norm(path + (0,))
        self._norm(path + (1,))
        node = self._node(path)
        if isinstance(node, Or):
            self._flatten(path, Or, Axiom.E1)
            self._sort_spine(path, Or, Axiom.E1, Axiom.E4)
        elif isinstance(node, And):
            self._dist_and(path)
        else:
            self._flatten(path, Sand, Axiom.E3)
            self._dist_sand(path)

    def _dist_and(self, path: Path) -> None:
        node = self._node(path)
        if isinstance(node.right, Or):
            self._apply(path, Axiom.E6, Direction.LR)
            self._dist_and(path + (0,))
            self._dist_and(path + (1,))
            self._flatten(path, Or, Axiom.E1)
            self._sort_spine(path, Or, Axiom.E1, Axiom.E4)
        elif isinstance(node.left, Or):
            self._apply(path, Axiom.E5, Direction.LR)
            self._dist_and(path)
        else:
            self._flatten(path, And, Axiom.E2)
            self._sort_spine(path, And, Axiom.E2, Axiom.E5)

    def _fix_sand_product(self, path: Path) -> None:
        """Renormalize a freshly built SAND product (flatten, redistribute)."""
        if isinstance(self._node(path), Sand):
            self._flatten(path, Sand, Axiom.E3)
            self._dist_sand(path)

    def _dist_sand(self, path: Path) -> None:
        """Distribute OR elements out of a flattened SAND spine.

        Under PAPER only elements after the first may move (E7); the head
        position is blocked, so spine heads may keep OR nodes in normal
        forms.  Under FULL the head distributes too (Ext), which clears
        every OR below SAND.
        """
        while True:
            node = self._node(path)
            if not isinstance(node, Sand):
                return
            spine_nodes = []
            q = path
            while isinstance(self._node(q), Sand):
                spine_nodes.append(q)
                q = q + (1,)
            elems = [p + (0,) for p in spine_nodes] + [q]
            m = len(elems)
            start = 0 if self.axioms is AxiomSet.FULL else 1
            idx = next(
                (j for j in range(start, m) if isinstance(self._node(elems[j]), Or)),
                None,
            )
            if idx is None:
                return
            if idx == 0:
                self._apply(path, Axiom.EXT, Direction.LR)
                self._fix_sand_product(path + (0,))
                self._fix_sand_product(path + (1,))
                self._flatten(path, Or, Axiom.E1)
                self._sort_spine(path, Or, Axiom.E1, Axiom.E4)
                return
            if idx == m - 1:
                q_last = spine_nodes[-1]
                self._apply(q_last, Axiom.E7, Direction.LR)
                self._fix_sand_product(q_last + (0,))
                self._fix_sand_product(q_last + (1,))
                self._flatten(q_last, Or, Axiom.E1)
                self._sort_spine(q_last, Or, Axiom.E1, Axiom.E4)
            else:
                # OR sits mid-spine: group it with the element before it,
                # distribute there, and rescan (the new OR bubbles left).
                q_prev = spine_nodes[idx - 1]
                self._apply(q_prev, Axiom.E3, Direction.RL)
                self._apply(q_prev + (0,), Axiom.E7, Direction.LR)
                self._fix_sand_product(q_prev + (0, 0))
                self._fix_sand_product(q_prev + (0, 1))
                self._flatten(q_prev + (0,), Or, Axiom.E1)
                self._sort_spine(q_prev + (0,), Or, Axiom.E1, Axiom.E4)


def normalize_with_trace(
    tree: AttackTree,
    axioms: AxiomSet = AxiomSet.FULL,
    budget: int | None = None,
) -> tuple[AttackTree, RewriteTrace]:
    """Normal form plus the trace of axiom instances that produced it."""
    normalizer = _Normalizer(tree, axioms, node_budget(budget))
    nf, steps = normalizer.run()
    return nf, RewriteTrace(steps)


def normalize(
    tree: AttackTree,
    axioms: AxiomSet = AxiomSet.FULL,
    budget: int | None = None,
) -> AttackTree:
    """Canonical form of ``tree`` under the given axiom set."""
    nf, _ = normalize_with_trace(tree, axioms, budget)
    return nf


def syntactic_equiv(
    t1: AttackTree,
    t2: AttackTree,
    axioms: AxiomSet = AxiomSet.FULL,
    budget: int | None = None,
) -> SyntacticVerdict:
    """Equivalent iff the normal forms coincide.

    On success the trace concatenates t1's normalization steps with the
    reverse of t2's, so replaying it from t1 lands exactly on t2.
    """
    nf1, trace1 = normalize_with_trace(t1, axioms, budget)
    nf2, trace2 = normalize_with_trace(t2, axioms, budget)
    if nf1 != nf2:
        return SyntacticVerdict(False, None)
    inverted = tuple(step.inverted for step in reversed(trace2.steps))
    return SyntacticVerdict(True, RewriteTrace(trace1.steps + inverted))
