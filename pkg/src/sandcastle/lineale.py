"""Finite lineales as explicit tables, with an exhaustive axiom checker.

A lineale is a monoidal proset (reflexive+transitive order, symmetric
associative unital multiplication, compatible with the order) carrying an
implication that satisfies relative complement and adjunction.  Carriers
here are finite and explicit, so every axiom is decided by enumeration.
Anti-symmetry is deliberately never tested: prosets suffice.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass

from sandcastle.errors import ParseError, ResourceLimitError
from sandcastle.four import FOUR_VALUES, TENSOR_UNIT, leq4, limp4, tensor4


@dataclass(frozen=True)
class Violation:
    axiom: str
    witness: tuple[str, ...]


@dataclass(frozen=True)
class ViolationReport:
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def axioms(self) -> tuple[str, ...]:
        return tuple(v.axiom for v in self.violations)


@dataclass(frozen=True)
class FiniteLineale:
    """Carrier elements are named; tables index positionally."""

    carrier: tuple[str, ...]
    leq: tuple[tuple[bool, ...], ...]
    mult: tuple[tuple[int, ...], ...]
    unit: int
    imp: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.carrier)
        for name, table in (("leq", self.leq), ("mult", self.mult), ("imp", self.imp)):
            if len(table) != n or any(len(row) != n for row in table):
                raise ValueError(f"{name} table is not total on a carrier of size {n}")
        if not 0 <= self.unit < n:
            raise ValueError(f"unit index {self.unit} out of range")

    @property
    def size(self) -> int:
        return len(self.carrier)

    @property
    def is_proper(self) -> bool:
        """True when the multiplication is not idempotent (non-Heyting)."""
        return any(self.mult[i][i] != i for i in range(self.size))

    def signature(self) -> tuple:
        """Tables without carrier names, for structural comparison."""
        return (self.size, self.leq, self.mult, self.unit, self.imp)

    # -- interchange format -------------------------------------------------

    def to_json_dict(self) -> dict:
        index = dict(enumerate(self.carrier))
        return {
            "carrier": list(self.carrier),
            "leq": [list(row) for row in self.leq],
            "mult": [[index[e] for e in row] for row in self.mult],
            "unit": index[self.unit],
            "imp": [[index[e] for e in row] for row in self.imp],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "FiniteLineale":
        try:
            carrier = tuple(str(x) for x in data["carrier"])
            position = {name: i for i, name in enumerate(carrier)}
            if len(position) != len(carrier):
                raise ParseError("carrier contains duplicate element ids")

            def decode(table, label):
                rows = []
                for row in table:
                    rows.append(tuple(position[str(e)] for e in row))
                return tuple(rows)

            return cls(
                carrier=carrier,
                leq=tuple(tuple(bool(x) for x in row) for row in data["leq"]),
                mult=decode(data["mult"], "mult"),
                unit=position[str(data["unit"])],
                imp=decode(data["imp"], "imp"),
            )
        except KeyError as missing:
            raise ParseError(f"lineale JSON is missing {missing}") from None

    def dump(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)

    @classmethod
    def load(cls, text: str) -> "FiniteLineale":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from None
        return cls.from_json_dict(data)


def check_monoidal_proset(lineale: FiniteLineale) -> ViolationReport:
    """Exhaustively check the proset and monoid axioms.

    Reflexivity and transitivity of the order; associativity, two-sided
    identity and symmetry of the multiplication; compatibility of the two.
    """
    names = lineale.carrier
    n = lineale.size
    leq, mult, e = lineale.leq, lineale.mult, lineale.unit
    found = []
    for i in range(n):
        if not leq[i][i]:
            found.append(Violation("reflexivity", (names[i],)))
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if leq[i][j] and leq[j][k] and not leq[i][k]:
                    found.append(Violation("transitivity", (names[i], names[j], names[k])))
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if mult[mult[i][j]][k] != mult[i][mult[j][k]]:
                    found.append(Violation("associativity", (names[i], names[j], names[k])))
    for i in range(n):
        if mult[i][e] != i or mult[e][i] != i:
            found.append(Violation("identity", (names[i],)))
    for i in range(n):
        for j in range(n):
            if mult[i][j] != mult[j][i]:
                found.append(Violation("symmetry", (names[i], names[j])))
    for i in range(n):
        for j in range(n):
            if leq[i][j]:
                for k in range(n):
                    if not leq[mult[i][k]][mult[j][k]]:
                        found.append(Violation("compatibility", (names[i], names[j], names[k])))
    return ViolationReport(tuple(found))


def check_lineale(lineale: FiniteLineale) -> ViolationReport:
    """Monoidal-proset axioms plus relative complement and adjunction."""
    report = check_monoidal_proset(lineale)
    names = lineale.carrier
    n = lineale.size
    leq, mult, imp = lineale.leq, lineale.mult, lineale.imp
    found = list(report.violations)
    for a in range(n):
        for b in range(n):
            if not leq[mult[imp[a][b]][a]][b]:
                found.append(Violation("relative-complement", (names[a], names[b])))
    for a in range(n):
        for y in range(n):
            for b in range(n):
                if leq[mult[a][y]][b] and not leq[y][imp[a][b]]:
                    found.append(Violation("adjunction", (names[a], names[y], names[b])))
    return ViolationReport(tuple(found))


def four_lineale() -> FiniteLineale:
    """The four-value chain with tensor, unit 1/4, and linear implication."""
    values = FOUR_VALUES
    position = {v: i for i, v in enumerate(values)}
    return FiniteLineale(
        carrier=tuple(v.render() for v in values),
        leq=tuple(tuple(leq4(a, b) for b in values) for a in values),
        mult=tuple(tuple(position[tensor4(a, b)] for b in values) for a in values),
        unit=position[TENSOR_UNIT],
        imp=tuple(tuple(position[limp4(a, b)] for b in values) for a in values),
    )


def bool_lineale() -> FiniteLineale:
    """The two-element boolean lineale: conjunction with unit 1."""
    return FiniteLineale(
        carrier=("0", "1"),
        leq=((True, True), (False, True)),
        mult=((0, 0), (0, 1)),
        unit=1,
        imp=((1, 1), (0, 1)),
    )


def search_lineales(size: int) -> list[FiniteLineale]:
    """All lineales on a chain carrier of the given size (at most 4).

    Enumerates symmetric unital multiplications (unit row/column forced),
    filters by the monoid and compatibility axioms, then derives the only
    implication candidate from the adjunction: imp[a][b] is the largest y
    with mult(a, y) <= b, which exists iff the relative complement is
    satisfiable.  Every returned lineale passes ``check_lineale``.
    Enumeration order (unit position, then table assignment) is fixed.
    """
    if size < 1:
        raise ValueError("carrier size must be at least 1")
    if size > 4:
        raise ResourceLimitError("carrier sizes above 4 are not supported")
    names = tuple(str(i) for i in range(size))
    leq = tuple(tuple(i <= j for j in range(size)) for i in range(size))
    results = []
    for unit in range(size):
        free = [
            (i, j)
            for i in range(size)
            for j in range(i, size)
            if i != unit and j != unit
        ]
        for assignment in itertools.product(range(size), repeat=len(free)):
            table = [[0] * size for _ in range(size)]
            for i in range(size):
                table[i][unit] = i
                table[unit][i] = i
            for (i, j), value in zip(free, assignment):
                table[i][j] = value
                table[j][i] = value
            mult = tuple(tuple(row) for row in table)
            if not _monoid_ok(mult, unit, size):
                continue
            imp = _derive_imp(mult, size)
            if imp is None:
                continue
            candidate = FiniteLineale(names, leq, mult, unit, imp)
            if check_lineale(candidate).ok:
                results.append(candidate)
    return results


def _monoid_ok(mult, unit, size) -> bool:
    for i in range(size):
        for j in range(size):
            for k in range(size):
                if mult[mult[i][j]][k] != mult[i][mult[j][k]]:
                    return False
    for i in range(size):
        for j in range(i + 1, size):  # i < j, chain order
            for k in range(size):
                if mult[i][k] > mult[j][k]:
                    return False
    return True


def _derive_imp(mult, size):
    imp = []
    for a in range(size):
        row = []
        for b in range(size):
            best = None
            for y in range(size - 1, -1, -1):
                if mult[a][y] <= b:
                    best = y
                    break
            if best is None:
                return None
            row.append(best)
        imp.append(tuple(row))
    return tuple(imp)
