"""The four-value truth algebra and tree evaluation.

Values form the chain 0 < 1/4 < 1/2 < 1.  AND maps to ``odot4``, SAND to
``rhd4``, OR to ``join4``; ``tensor4``/``limp4`` are the monoidal closed
structure used by the lineale and dialectica layers.  Equivalence checks
enumerate every valuation, in lexicographic order over the sorted base
names with values ordered 0 < 1/4 < 1/2 < 1, so counterexample witnesses
are deterministic.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Mapping

import numpy as np

from sandcastle.errors import MissingValuationError, ResourceLimitError
from sandcastle.limits import DEFAULT_BASE_CAP
from sandcastle.trees import And, AttackTree, Base, Or, Sand, base_attacks


class Four(enum.IntEnum):
    ZERO = 0
    QUARTER = 1
    HALF = 2
    ONE = 3

    def render(self) -> str:
        return _RENDER[self]

    @classmethod
    def parse(cls, text: str) -> "Four":
        try:
            return _PARSE[text.strip()]
        except KeyError:
            raise ValueError(f"not a truth value: {text!r} (expected 0, 1/4, 1/2, 1)") from None


_RENDER = {Four.ZERO: "0", Four.QUARTER: "1/4", Four.HALF: "1/2", Four.ONE: "1"}
_PARSE = {text: value for value, text in _RENDER.items()}

FOUR_VALUES = (Four.ZERO, Four.QUARTER, Four.HALF, Four.ONE)

Valuation = Mapping[str, Four]


def leq4(a: Four, b: Four) -> bool:
    return a <= b


def odot4(a: Four, b: Four) -> Four:
    """Parallel conjunction: 1 when neither argument is 0, else 0."""
    return Four.ONE if a != Four.ZERO and b != Four.ZERO else Four.ZERO


def rhd4(a: Four, b: Four) -> Four:
    """Sequential conjunction: 1 for a in {1/2,1} and b nonzero, 1/4 for
    a = 1/4 and b nonzero, else 0."""
    if b == Four.ZERO:
        return Four.ZERO
    if a >= Four.HALF:
        return Four.ONE
    if a == Four.QUARTER:
        return Four.QUARTER
    return Four.ZERO


def join4(a: Four, b: Four) -> Four:
    """Choice: maximum in the chain."""
    return max(a, b)


def tensor4(a: Four, b: Four) -> Four:
    """Linear tensor: max of the arguments unless either is 0; unit 1/4."""
    if a == Four.ZERO or b == Four.ZERO:
        return Four.ZERO
    return max(a, b)


TENSOR_UNIT = Four.QUARTER


def limp4(a: Four, b: Four) -> Four:
    """Linear implication: the residual of ``tensor4``.

    Equal to max{y : tensor4(a, y) <= b}, the unique table satisfying the
    closure law (a (x) y) <= b  iff  y <= (a -o b).  Clauses apply top to
    bottom: 0 when b < a, then b itself when a is nonzero and b is an
    intermediate value, else 1.
    """
    if b < a:
        return Four.ZERO
    if a != Four.ZERO and b in (Four.QUARTER, Four.HALF):
        return b
    return Four.ONE


def eval_tree(tree: AttackTree, valuation: Valuation) -> Four:
    """Structural fold of a tree over a valuation of its base attacks."""
    match tree:
        case Base(name):
            try:
                return valuation[name]
            except KeyError:
                raise MissingValuationError(name) from None
        case Or(l, r):
            return join4(eval_tree(l, valuation), eval_tree(r, valuation))
        case And(l, r):
            return odot4(eval_tree(l, valuation), eval_tree(r, valuation))
        case Sand(l, r):
            return rhd4(eval_tree(l, valuation), eval_tree(r, valuation))
    raise TypeError(f"not an attack tree: {tree!r}")


def _column(j: int, n: int) -> np.ndarray:
    """Values of the j-th (sorted) base across all 4**n valuations."""
    reps = 4 ** (n - 1 - j)
    block = np.repeat(np.arange(4, dtype=np.uint8), reps)
    return np.tile(block, 4**j)


def eval_all(tree: AttackTree, names: tuple[str, ...]) -> np.ndarray:
    """Evaluate under every valuation of ``names`` at once.

    Returns a uint8 array of length ``4**len(names)`` whose i-th entry is
    the value under the i-th valuation in enumeration order.  ``names``
    must cover the tree's base attacks.
    """
    n = len(names)
    index = {name: j for j, name in enumerate(names)}
    columns: dict[str, np.ndarray] = {}

    def fold(node: AttackTree) -> np.ndarray:
        match node:
            case Base(name):
                if name not in index:
                    raise MissingValuationError(name)
                if name not in columns:
                    columns[name] = _column(index[name], n)
                return columns[name]
            case Or(l, r):
                return np.maximum(fold(l), fold(r))
            case And(l, r):
                a, b = fold(l), fold(r)
                return np.where((a != 0) & (b != 0), np.uint8(3), np.uint8(0))
            case Sand(l, r):
                a, b = fold(l), fold(r)
                live = b != 0
                return np.where(
                    live & (a >= 2), np.uint8(3), np.where(live & (a == 1), np.uint8(1), np.uint8(0))
                )
        raise TypeError(f"not an attack tree: {node!r}")

    return fold(tree)


def valuation_at(index: int, names: tuple[str, ...]) -> dict[str, Four]:
    """The i-th valuation in enumeration order."""
    n = len(names)
    return {
        name: Four((index // 4 ** (n - 1 - j)) % 4) for j, name in enumerate(names)
    }


@dataclass(frozen=True)
class SemanticVerdict:
    """Outcome of a semantic comparison.

    ``kind`` is one of ``equivalent``, ``not-equivalent``, ``implied``,
    ``not-implied``.  Negative verdicts carry the first counterexample in
    enumeration order.
    """

    kind: str
    witness: dict[str, Four] | None = None
    lhs: Four | None = None
    rhs: Four | None = None

    @property
    def holds(self) -> bool:
        return self.kind in ("equivalent", "implied")


def _shared_names(t1: AttackTree, t2: AttackTree, cap: int | None) -> tuple[str, ...]:
    names = tuple(sorted(set(base_attacks(t1)) | set(base_attacks(t2))))
    limit = DEFAULT_BASE_CAP if cap is None else cap
    if len(names) > limit:
        raise ResourceLimitError(
            f"{len(names)} base attacks exceed the valuation cap {limit}"
        )
    return names


def semantic_equiv(t1: AttackTree, t2: AttackTree, cap: int | None = None) -> SemanticVerdict:
    """Compare truth tables over all valuations of the shared base attacks.

    Shared names denote the same propositional variable.  The first
    disagreement (in enumeration order) is returned as the witness.
    """
    names = _shared_names(t1, t2, cap)
    lhs = eval_all(t1, names)
    rhs = eval_all(t2, names)
    diff = lhs != rhs
    if not diff.any():
        return SemanticVerdict("equivalent")
    at = int(np.argmax(diff))
    return SemanticVerdict(
        "not-equivalent", valuation_at(at, names), Four(int(lhs[at])), Four(int(rhs[at]))
    )


def semantic_implies(t1: AttackTree, t2: AttackTree, cap: int | None = None) -> SemanticVerdict:
    """Pointwise ``<=`` over all valuations, with the first violation."""
    names = _shared_names(t1, t2, cap)
    lhs = eval_all(t1, names)
    rhs = eval_all(t2, names)
    bad = lhs > rhs
    if not bad.any():
        return SemanticVerdict("implied")
    at = int(np.argmax(bad))
    return SemanticVerdict(
        "not-implied", valuation_at(at, names), Four(int(lhs[at])), Four(int(rhs[at]))
    )


@dataclass(frozen=True)
class PropertyResult:
    name: str
    holds: bool
    checked: int
    witnesses: tuple[tuple[Four, ...], ...]


@dataclass(frozen=True)
class ScalarPropertyReport:
    results: tuple[PropertyResult, ...]

    def __getitem__(self, name: str) -> PropertyResult:
        for result in self.results:
            if result.name == name:
                return result
        raise KeyError(name)

    @property
    def failing(self) -> tuple[str, ...]:
        return tuple(r.name for r in self.results if not r.holds)


def _sweep(name, arity, predicate) -> PropertyResult:
    witnesses = []
    count = 0
    values = FOUR_VALUES
    if arity == 1:
        tuples = ((a,) for a in values)
    elif arity == 2:
        tuples = ((a, b) for a in values for b in values)
    elif arity == 3:
        tuples = ((a, b, c) for a in values for b in values for c in values)
    else:
        tuples = (
            (a, b, c, d)
            for a in values
            for b in values
            for c in values
            for d in values
        )
    for args in tuples:
        count += 1
        if not predicate(*args):
            witnesses.append(args)
    return PropertyResult(name, not witnesses, count, tuple(witnesses))


def check_scalar_properties() -> ScalarPropertyReport:
    """Exhaustive audit of the scalar connective laws.

    Positive laws (symmetry, associativity, distributivity, units,
    monotonicity, closure) are expected to hold everywhere; the three
    contraction/symmetry failures are reported with their witnesses so the
    suite can assert the exact expected pattern.
    """
    results = [
        _sweep("symmetry-odot", 2, lambda a, b: odot4(a, b) == odot4(b, a)),
        _sweep("symmetry-join", 2, lambda a, b: join4(a, b) == join4(b, a)),
        _sweep("symmetry-tensor", 2, lambda a, b: tensor4(a, b) == tensor4(b, a)),
        _sweep(
            "associativity-odot",
            3,
            lambda a, b, c: odot4(odot4(a, b), c) == odot4(a, odot4(b, c)),
        ),
        _sweep(
            "associativity-rhd",
            3,
            lambda a, b, c: rhd4(rhd4(a, b), c) == rhd4(a, rhd4(b, c)),
        ),
        _sweep(
            "associativity-join",
            3,
            lambda a, b, c: join4(join4(a, b), c) == join4(a, join4(b, c)),
        ),
        _sweep(
            "associativity-tensor",
            3,
            lambda a, b, c: tensor4(tensor4(a, b), c) == tensor4(a, tensor4(b, c)),
        ),
        _sweep(
            "dist-odot-right",
            3,
            lambda a, b, c: odot4(a, join4(b, c)) == join4(odot4(a, b), odot4(a, c)),
        ),
        _sweep(
            "dist-odot-left",
            3,
            lambda a, b, c: odot4(join4(a, b), c) == join4(odot4(a, c), odot4(b, c)),
        ),
        _sweep(
            "dist-rhd-right",
            3,
            lambda a, b, c: rhd4(a, join4(b, c)) == join4(rhd4(a, b), rhd4(a, c)),
        ),
        _sweep(
            "dist-rhd-left",
            3,
            lambda a, b, c: rhd4(join4(a, b), c) == join4(rhd4(a, c), rhd4(b, c)),
        ),
        _sweep("unit-tensor-right", 1, lambda a: tensor4(a, TENSOR_UNIT) == a),
        _sweep("unit-tensor-left", 1, lambda a: tensor4(TENSOR_UNIT, a) == a),
        _sweep(
            "monotone-odot",
            4,
            lambda a, b, c, d: not (a <= c and b <= d) or odot4(a, b) <= odot4(c, d),
        ),
        _sweep(
            "monotone-rhd",
            4,
            lambda a, b, c, d: not (a <= c and b <= d) or rhd4(a, b) <= rhd4(c, d),
        ),
        _sweep(
            "monotone-join",
            4,
            lambda a, b, c, d: not (a <= c and b <= d) or join4(a, b) <= join4(c, d),
        ),
        _sweep(
            "monotone-tensor",
            4,
            lambda a, b, c, d: not (a <= c and b <= d) or tensor4(a, b) <= tensor4(c, d),
        ),
        _sweep(
            "monotone-limp",
            4,
            lambda a, b, c, d: not (c <= a and b <= d) or limp4(a, b) <= limp4(c, d),
        ),
        _sweep(
            "closure",
            3,
            lambda a, b, c: (tensor4(a, b) <= c) == (a <= limp4(b, c)),
        ),
        _sweep("contraction-odot", 1, lambda a: odot4(a, a) == a),
        _sweep("contraction-rhd", 1, lambda a: rhd4(a, a) == a),
        _sweep("symmetry-rhd", 2, lambda a, b: rhd4(a, b) == rhd4(b, a)),
    ]
    return ScalarPropertyReport(tuple(results))


EXPECTED_FAILING_PROPERTIES = ("contraction-odot", "contraction-rhd", "symmetry-rhd")
