"""Finite dialectica spaces over the four-value chain.

A space is a triple (U, X, alpha) of two finite index sets and a total
Four-valued relation; a morphism (f, F) : (U,X,alpha) -> (V,Y,beta) sends
U -> V forward and Y -> X backward such that
``alpha(u, F(y)) <= beta(f(u), y)`` for all u, y.

Carrier elements are plain integers.  Composite carriers use fixed
encodings, documented once here and used everywhere:

* pairs: ``(i, j)`` over sizes (m, n) encodes as ``i*n + j``;
* sums: left ``i`` encodes as ``i``, right ``j`` as ``m + j``;
* function tables ``D -> C``: the tuple of outputs in domain order,
  read as a base-|C| numeral (first output is the most significant
  digit); this matches ``itertools.product`` order.

Tensor and internal hom materialize full function spaces, so their
carriers are budgeted (default 4096 per carrier).  Everything is exact:
values are compared with ``==``, never with tolerances.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass
from typing import Iterator, Mapping

from sandcastle.errors import MissingValuationError, ParseError, ResourceLimitError
from sandcastle.four import FOUR_VALUES, Four, TENSOR_UNIT, limp4, odot4, rhd4, tensor4
from sandcastle.limits import carrier_budget, enum_budget
from sandcastle.trees import And, AttackTree, Base, Or, Sand


@dataclass(frozen=True)
class DialSpace:
    u_size: int
    x_size: int
    alpha: tuple[tuple[Four, ...], ...]

    def __post_init__(self):
        if self.u_size < 0 or self.x_size < 0:
            raise ValueError("carrier sizes must be nonnegative")
        if len(self.alpha) != self.u_size or any(len(row) != self.x_size for row in self.alpha):
            raise ValueError(
                f"alpha must be a {self.u_size} x {self.x_size} table, "
                f"got {len(self.alpha)} rows"
            )

    def rel(self, u: int, x: int) -> Four:
        return self.alpha[u][x]

    # -- interchange format -------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "U": self.u_size,
            "X": self.x_size,
            "alpha": [[v.render() for v in row] for row in self.alpha],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "DialSpace":
        try:
            alpha = tuple(
                tuple(Four.parse(cell) for cell in row) for row in data["alpha"]
            )
            return cls(int(data["U"]), int(data["X"]), alpha)
        except KeyError as missing:
            raise ParseError(f"dialectica-space JSON is missing {missing}") from None
        except ValueError as exc:
            raise ParseError(str(exc)) from None

    def dump(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)

    @classmethod
    def load(cls, text: str) -> "DialSpace":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from None
        return cls.from_json_dict(data)


def is_morphism(
    source: DialSpace, target: DialSpace, f: tuple[int, ...], F: tuple[int, ...]
) -> bool:
    """True iff (f, F) satisfies the dialectica condition everywhere."""
    if len(f) != source.u_size or len(F) != target.x_size:
        raise ValueError(
            f"table shapes ({len(f)}, {len(F)}) do not match carriers "
            f"({source.u_size}, {target.x_size})"
        )
    if any(not 0 <= v < target.u_size for v in f):
        raise ValueError("forward table maps outside the target carrier")
    if any(not 0 <= v < source.x_size for v in F):
        raise ValueError("backward table maps outside the source carrier")
    for u in range(source.u_size):
        row = source.alpha[u]
        beta_row = target.alpha[f[u]]
        for y in range(target.x_size):
            if row[F[y]] > beta_row[y]:
                return False
    return True


@dataclass(frozen=True)
class DialMorphism:
    source: DialSpace
    target: DialSpace
    f: tuple[int, ...]
    F: tuple[int, ...]

    def __post_init__(self):
        if not is_morphism(self.source, self.target, self.f, self.F):
            raise ValueError("tables violate the dialectica condition")

    def to_json_dict(self) -> dict:
        return {"f": list(self.f), "F": list(self.F)}


def identity(space: DialSpace) -> DialMorphism:
    return DialMorphism(
        space, space, tuple(range(space.u_size)), tuple(range(space.x_size))
    )


def compose(m1: DialMorphism, m2: DialMorphism) -> DialMorphism:
    """First m1 then m2; backward components compose in reverse."""
    if m1.target != m2.source:
        raise ValueError("morphisms are not composable")
    f = tuple(m2.f[v] for v in m1.f)
    F = tuple(m1.F[m2.F[z]] for z in range(m2.target.x_size))
    return DialMorphism(m1.source, m2.target, f, F)


# -- carrier encodings -------------------------------------------------------


def _pair(i: int, j: int, n: int) -> int:
    return i * n + j


def _unpair(idx: int, n: int) -> tuple[int, int]:
    return divmod(idx, n)


def _fn_count(dom: int, cod: int) -> int:
    return cod**dom


def _fn_decode(idx: int, dom: int, cod: int) -> tuple[int, ...]:
    out = []
    for position in range(dom - 1, -1, -1):
        out.append((idx // cod**position) % cod)
    return tuple(out)


def _fn_encode(table: tuple[int, ...], cod: int) -> int:
    idx = 0
    for value in table:
        idx = idx * cod + value
    return idx


def _check_budget(name: str, size: int, budget: int) -> None:
    if size > budget:
        raise ResourceLimitError(f"{name} carrier of size {size} exceeds budget {budget}")


# -- space constructions ------------------------------------------------------


def unit_object() -> DialSpace:
    """Singleton carriers related by the tensor unit value."""
    return DialSpace(1, 1, ((TENSOR_UNIT,),))


def tensor(a: DialSpace, b: DialSpace, budget: int | None = None) -> DialSpace:
    """Tensor product: second carrier is (U_b -> X_a) x (U_a -> X_b)."""
    limit = carrier_budget(budget)
    u_size = a.u_size * b.u_size
    f_count = _fn_count(b.u_size, a.x_size)
    g_count = _fn_count(a.u_size, b.x_size)
    x_size = f_count * g_count
    _check_budget("tensor first", u_size, limit)
    _check_budget("tensor second", x_size, limit)
    f_tables = [_fn_decode(i, b.u_size, a.x_size) for i in range(f_count)]
    g_tables = [_fn_decode(i, a.u_size, b.x_size) for i in range(g_count)]
    alpha = []
    for ui in range(u_size):
        u, v = _unpair(ui, b.u_size)
        row = []
        for xi in range(x_size):
            fi, gi = _unpair(xi, g_count)
            f_table, g_table = f_tables[fi], g_tables[gi]
            row.append(tensor4(a.rel(u, f_table[v]), b.rel(v, g_table[u])))
        alpha.append(tuple(row))
    return DialSpace(u_size, x_size, tuple(alpha))


def hom(a: DialSpace, b: DialSpace, budget: int | None = None) -> DialSpace:
    """Internal hom: first carrier is (U_a -> U_b) x (X_b -> X_a)."""
    limit = carrier_budget(budget)
    f_count = _fn_count(a.u_size, b.u_size)
    g_count = _fn_count(b.x_size, a.x_size)
    u_size = f_count * g_count
    x_size = a.u_size * b.x_size
    _check_budget("hom first", u_size, limit)
    _check_budget("hom second", x_size, limit)
    f_tables = [_fn_decode(i, a.u_size, b.u_size) for i in range(f_count)]
    g_tables = [_fn_decode(i, b.x_size, a.x_size) for i in range(g_count)]
    alpha = []
    for ui in range(u_size):
        fi, gi = _unpair(ui, g_count)
        f_table, g_table = f_tables[fi], g_tables[gi]
        row = []
        for xi in range(x_size):
            u, y = _unpair(xi, b.x_size)
            row.append(limp4(a.rel(u, g_table[y]), b.rel(f_table[u], y)))
        alpha.append(tuple(row))
    return DialSpace(u_size, x_size, tuple(alpha))


def _pointwise(a: DialSpace, b: DialSpace, op) -> DialSpace:
    u_size = a.u_size * b.u_size
    x_size = a.x_size * b.x_size
    alpha = []
    for ui in range(u_size):
        u, v = _unpair(ui, b.u_size)
        row = []
        for xi in range(x_size):
            x, y = _unpair(xi, b.x_size)
            row.append(op(a.rel(u, x), b.rel(v, y)))
        alpha.append(tuple(row))
    return DialSpace(u_size, x_size, tuple(alpha))


def odot(a: DialSpace, b: DialSpace) -> DialSpace:
    """Parallel conjunction: products with the pointwise scalar odot4."""
    return _pointwise(a, b, odot4)


def rhd(a: DialSpace, b: DialSpace) -> DialSpace:
    """Sequential conjunction: products with the pointwise scalar rhd4."""
    return _pointwise(a, b, rhd4)


def choice(a: DialSpace, b: DialSpace) -> DialSpace:
    """Choice: disjoint unions; mixed action/state entries are 0."""
    u_size = a.u_size + b.u_size
    x_size = a.x_size + b.x_size
    alpha = []
    for u in range(u_size):
        row = []
        for x in range(x_size):
            if u < a.u_size and x < a.x_size:
                row.append(a.rel(u, x))
            elif u >= a.u_size and x >= a.x_size:
                row.append(b.rel(u - a.u_size, x - a.x_size))
            else:
                row.append(Four.ZERO)
        alpha.append(tuple(row))
    return DialSpace(u_size, x_size, tuple(alpha))


_ATTACK_OPS = {"odot": odot, "rhd": rhd, "choice": choice}


# -- functorial action --------------------------------------------------------


def map_pair(op: str, m1: DialMorphism, m2: DialMorphism) -> DialMorphism:
    """Componentwise action of a binary operator on morphisms.

    ``op`` is one of ``odot``, ``rhd``, ``choice``, ``tensor``.
    """
    a, b = m1.source, m2.source
    c, d = m1.target, m2.target
    if op in ("odot", "rhd"):
        build = _ATTACK_OPS[op]
        source, target = build(a, b), build(c, d)
        f = tuple(
            _pair(m1.f[u], m2.f[v], d.u_size)
            for u in range(a.u_size)
            for v in range(b.u_size)
        )
        F = tuple(
            _pair(m1.F[x], m2.F[y], b.x_size)
            for x in range(c.x_size)
            for y in range(d.x_size)
        )
        return DialMorphism(source, target, f, F)
    if op == "choice":
        source, target = choice(a, b), choice(c, d)
        f = tuple(m1.f[u] for u in range(a.u_size)) + tuple(
            c.u_size + m2.f[v] for v in range(b.u_size)
        )
        F = tuple(m1.F[x] for x in range(c.x_size)) + tuple(
            a.x_size + m2.F[y] for y in range(d.x_size)
        )
        return DialMorphism(source, target, f, F)
    if op == "tensor":
        source, target = tensor(a, b), tensor(c, d)
        f = tuple(
            _pair(m1.f[u], m2.f[v], d.u_size)
            for u in range(a.u_size)
            for v in range(b.u_size)
        )
        g_count_t = _fn_count(c.u_size, d.x_size)
        F = []
        for xi in range(target.x_size):
            phi_i, psi_i = _unpair(xi, g_count_t)
            phi = _fn_decode(phi_i, d.u_size, c.x_size)  # U_d -> X_c
            psi = _fn_decode(psi_i, c.u_size, d.x_size)  # U_c -> X_d
            phi_s = tuple(m1.F[phi[m2.f[v]]] for v in range(b.u_size))  # U_b -> X_a
            psi_s = tuple(m2.F[psi[m1.f[u]]] for u in range(a.u_size))  # U_a -> X_b
            F.append(
                _pair(
                    _fn_encode(phi_s, a.x_size),
                    _fn_encode(psi_s, b.x_size),
                    _fn_count(a.u_size, b.x_size),
                )
            )
        return DialMorphism(source, target, f, tuple(F))
    raise ValueError(f"unknown operator {op!r} (odot|rhd|choice|tensor)")


# -- structural morphisms ------------------------------------------------------


def _product_assoc(a, b, c, build):
    """(A . B) . C -> A . (B . C) for a plain-product operator."""
    source = build(build(a, b), c)
    target = build(a, build(b, c))
    f = []
    for ui in range(source.u_size):
        uv, w = _unpair(ui, c.u_size)
        u, v = _unpair(uv, b.u_size)
        f.append(_pair(u, _pair(v, w, c.u_size), b.u_size * c.u_size))
    F = []
    for xi in range(target.x_size):
        x, yz = _unpair(xi, b.x_size * c.x_size)
        y, z = _unpair(yz, c.x_size)
        F.append(_pair(_pair(x, y, b.x_size), z, c.x_size))
    return DialMorphism(source, target, tuple(f), tuple(F))


def _product_assoc_inv(a, b, c, build):
    source = build(a, build(b, c))
    target = build(build(a, b), c)
    f = []
    for ui in range(source.u_size):
        u, vw = _unpair(ui, b.u_size * c.u_size)
        v, w = _unpair(vw, c.u_size)
        f.append(_pair(_pair(u, v, b.u_size), w, c.u_size))
    F = []
    for xi in range(target.x_size):
        xy, z = _unpair(xi, c.x_size)
        x, y = _unpair(xy, b.x_size)
        F.append(_pair(x, _pair(y, z, c.x_size), b.x_size * c.x_size))
    return DialMorphism(source, target, tuple(f), tuple(F))


def _product_sym(a, b, build):
    source, target = build(a, b), build(b, a)
    f = []
    for ui in range(source.u_size):
        u, v = _unpair(ui, b.u_size)
        f.append(_pair(v, u, a.u_size))
    F = []
    for xi in range(target.x_size):
        y, x = _unpair(xi, a.x_size)
        F.append(_pair(x, y, b.x_size))
    return DialMorphism(source, target, tuple(f), tuple(F))


def _sum_left(i):
    return i


def _choice_assoc(a, b, c):
    # both groupings lay the three blocks out flat in the same order, so
    # the identity tables are the canonical re-tagging
    source = choice(choice(a, b), c)
    target = choice(a, choice(b, c))
    f = tuple(range(source.u_size))
    F = tuple(range(target.x_size))
    return DialMorphism(source, target, f, F)


def _choice_assoc_inv(a, b, c):
    source = choice(a, choice(b, c))
    target = choice(choice(a, b), c)
    return DialMorphism(source, target, tuple(range(source.u_size)), tuple(range(target.x_size)))


def _choice_sym(a, b):
    source, target = choice(a, b), choice(b, a)
    # forward: indexed by source actions (a-block first); backward: indexed
    # by target states (b-block first)
    f = tuple(b.u_size + u for u in range(a.u_size)) + tuple(range(b.u_size))
    F = tuple(a.x_size + x for x in range(b.x_size)) + tuple(range(a.x_size))
    return DialMorphism(source, target, f, F)


def _distl(a, b, c, build):
    """A . (B + C) -> (A . B) + (A . C) for . in {odot, rhd}."""
    source = build(a, choice(b, c))
    ab, ac = build(a, b), build(a, c)
    target = choice(ab, ac)
    sum_u = b.u_size + c.u_size
    sum_x = b.x_size + c.x_size
    f = []
    for ui in range(source.u_size):
        u, m = _unpair(ui, sum_u)
        if m < b.u_size:
            f.append(_pair(u, m, b.u_size))
        else:
            f.append(ab.u_size + _pair(u, m - b.u_size, c.u_size))
    F = []
    for xi in range(target.x_size):
        if xi < ab.x_size:
            x, y = _unpair(xi, b.x_size)
            F.append(_pair(x, y, sum_x))
        else:
            x, z = _unpair(xi - ab.x_size, c.x_size)
            F.append(_pair(x, b.x_size + z, sum_x))
    return DialMorphism(source, target, tuple(f), tuple(F))


def _distl_inv(a, b, c, build):
    source_of_fwd = build(a, choice(b, c))
    ab, ac = build(a, b), build(a, c)
    target_of_fwd = choice(ab, ac)
    sum_u = b.u_size + c.u_size
    sum_x = b.x_size + c.x_size
    f = []
    for ui in range(target_of_fwd.u_size):
        if ui < ab.u_size:
            u, v = _unpair(ui, b.u_size)
            f.append(_pair(u, v, sum_u))
        else:
            u, w = _unpair(ui - ab.u_size, c.u_size)
            f.append(_pair(u, b.u_size + w, sum_u))
    F = []
    for xi in range(source_of_fwd.x_size):
        x, m = _unpair(xi, sum_x)
        if m < b.x_size:
            F.append(_pair(x, m, b.x_size))
        else:
            F.append(ab.x_size + _pair(x, m - b.x_size, c.x_size))
    return DialMorphism(target_of_fwd, source_of_fwd, tuple(f), tuple(F))


def _tensor_assoc(a, b, c):
    """((A (x) B) (x) C) -> (A (x) (B (x) C)); see the module docstring for
    the function-space encodings the backward table shuffles."""
    ab = tensor(a, b)
    bc = tensor(b, c)
    source = tensor(ab, c)
    target = tensor(a, bc)
    f = []
    for ui in range(source.u_size):
        uv, w = _unpair(ui, c.u_size)
        u, v = _unpair(uv, b.u_size)
        f.append(_pair(u, _pair(v, w, c.u_size), bc.u_size))
    bc_g_count = _fn_count(b.u_size, c.x_size)
    ab_g_count = _fn_count(a.u_size, b.x_size)
    src_g_count = _fn_count(ab.u_size, c.x_size)
    F = []
    for xi in range(target.x_size):
        phi_i, psi_i = _unpair(xi, _fn_count(a.u_size, bc.x_size))
        phi = _fn_decode(phi_i, bc.u_size, a.x_size)  # U_b x U_c -> X_a
        psi = _fn_decode(psi_i, a.u_size, bc.x_size)  # U_a -> X_bc
        psi_parts = [_unpair(p, bc_g_count) for p in psi]
        psi1 = [_fn_decode(p1, c.u_size, b.x_size) for p1, _ in psi_parts]  # per u: U_c -> X_b
        psi2 = [_fn_decode(p2, b.u_size, c.x_size) for _, p2 in psi_parts]  # per u: U_b -> X_c
        # phi': U_c -> X_ab
        phi_s = []
        for w in range(c.u_size):
            fw = tuple(phi[_pair(v, w, c.u_size)] for v in range(b.u_size))  # U_b -> X_a
            gw = tuple(psi1[u][w] for u in range(a.u_size))  # U_a -> X_b
            phi_s.append(_pair(_fn_encode(fw, a.x_size), _fn_encode(gw, b.x_size), ab_g_count))
        # psi': U_a x U_b -> X_c
        psi_s = tuple(
            psi2[u][v] for u in range(a.u_size) for v in range(b.u_size)
        )
        F.append(
            _pair(
                _fn_encode(tuple(phi_s), ab.x_size),
                _fn_encode(psi_s, c.x_size),
                src_g_count,
            )
        )
    return DialMorphism(source, target, tuple(f), tuple(F))


def _tensor_assoc_inv(a, b, c):
    ab = tensor(a, b)
    bc = tensor(b, c)
    source = tensor(a, bc)
    target = tensor(ab, c)
    f = []
    for ui in range(source.u_size):
        u, vw = _unpair(ui, bc.u_size)
        v, w = _unpair(vw, c.u_size)
        f.append(_pair(_pair(u, v, b.u_size), w, c.u_size))
    bc_g_count = _fn_count(b.u_size, c.x_size)
    ab_g_count = _fn_count(a.u_size, b.x_size)
    tgt_g_count = _fn_count(a.u_size, bc.x_size)
    F = []
    for xi in range(target.x_size):
        phi_i, psi_i = _unpair(xi, _fn_count(ab.u_size, c.x_size))
        phi = _fn_decode(phi_i, c.u_size, ab.x_size)  # U_c -> X_ab
        psi = _fn_decode(psi_i, ab.u_size, c.x_size)  # U_a x U_b -> X_c
        phi_parts = [_unpair(p, ab_g_count) for p in phi]
        aw = [_fn_decode(p1, b.u_size, a.x_size) for p1, _ in phi_parts]  # per w: U_b -> X_a
        bw = [_fn_decode(p2, a.u_size, b.x_size) for _, p2 in phi_parts]  # per w: U_a -> X_b
        # phi'': U_b x U_c -> X_a
        phi_s = tuple(
            aw[w][v] for v in range(b.u_size) for w in range(c.u_size)
        )
        # psi'': U_a -> X_bc
        psi_s = []
        for u in range(a.u_size):
            first = tuple(bw[w][u] for w in range(c.u_size))  # U_c -> X_b
            second = tuple(psi[_pair(u, v, b.u_size)] for v in range(b.u_size))  # U_b -> X_c
            psi_s.append(_pair(_fn_encode(first, b.x_size), _fn_encode(second, c.x_size), bc_g_count))
        F.append(
            _pair(
                _fn_encode(phi_s, a.x_size),
                _fn_encode(tuple(psi_s), bc.x_size),
                tgt_g_count,
            )
        )
    return DialMorphism(source, target, tuple(f), tuple(F))


def _tensor_sym(a, b):
    source, target = tensor(a, b), tensor(b, a)
    f = []
    for ui in range(source.u_size):
        u, v = _unpair(ui, b.u_size)
        f.append(_pair(v, u, a.u_size))
    # X of B (x) A is (U_a -> X_b) x (U_b -> X_a): swap the components
    g_count_t = _fn_count(b.u_size, a.x_size)
    F = []
    for xi in range(target.x_size):
        p_i, q_i = _unpair(xi, g_count_t)
        F.append(_pair(q_i, p_i, _fn_count(a.u_size, b.x_size)))
    return DialMorphism(source, target, tuple(f), tuple(F))


def _unitor_left(a):
    unit = unit_object()
    source = tensor(unit, a)
    f = tuple(range(a.u_size))
    F = tuple(range(a.x_size))
    return DialMorphism(source, a, f, F)


def _unitor_left_inv(a):
    unit = unit_object()
    target = tensor(unit, a)
    return DialMorphism(a, target, tuple(range(a.u_size)), tuple(range(a.x_size)))


def _unitor_right(a):
    unit = unit_object()
    source = tensor(a, unit)
    return DialMorphism(source, a, tuple(range(a.u_size)), tuple(range(a.x_size)))


def _unitor_right_inv(a):
    unit = unit_object()
    target = tensor(a, unit)
    return DialMorphism(a, target, tuple(range(a.u_size)), tuple(range(a.x_size)))


_STRUCTURAL = {
    "assoc-odot": lambda a, b, c: _product_assoc(a, b, c, odot),
    "assoc-odot-inv": lambda a, b, c: _product_assoc_inv(a, b, c, odot),
    "assoc-rhd": lambda a, b, c: _product_assoc(a, b, c, rhd),
    "assoc-rhd-inv": lambda a, b, c: _product_assoc_inv(a, b, c, rhd),
    "assoc-choice": lambda a, b, c: _choice_assoc(a, b, c),
    "assoc-choice-inv": lambda a, b, c: _choice_assoc_inv(a, b, c),
    "assoc-tensor": lambda a, b, c: _tensor_assoc(a, b, c),
    "assoc-tensor-inv": lambda a, b, c: _tensor_assoc_inv(a, b, c),
    "sym-odot": lambda a, b: _product_sym(a, b, odot),
    "sym-choice": lambda a, b: _choice_sym(a, b),
    "sym-tensor": lambda a, b: _tensor_sym(a, b),
    "unitorL": lambda a: _unitor_left(a),
    "unitorL-inv": lambda a: _unitor_left_inv(a),
    "unitorR": lambda a: _unitor_right(a),
    "unitorR-inv": lambda a: _unitor_right_inv(a),
    "distl-odot": lambda a, b, c: _distl(a, b, c, odot),
    "distl-odot-inv": lambda a, b, c: _distl_inv(a, b, c, odot),
    "distl-rhd": lambda a, b, c: _distl(a, b, c, rhd),
    "distl-rhd-inv": lambda a, b, c: _distl_inv(a, b, c, rhd),
}

_ARITY = {1: ("unitorL", "unitorL-inv", "unitorR", "unitorR-inv"),
          2: ("sym-odot", "sym-choice", "sym-tensor")}


def structural(name: str, *spaces: DialSpace) -> DialMorphism:
    """Canonical structural morphism by name.

    Names: ``assoc-<op>``, ``sym-<op>`` (op in tensor/odot/choice; there
    is deliberately no ``sym-rhd``), ``unitorL``/``unitorR`` (tensor), and
    ``distl-<op>`` (op in odot/rhd), each with an ``-inv`` variant.
    """
    try:
        builder = _STRUCTURAL[name]
    except KeyError:
        raise ValueError(f"unavailable structural morphism {name!r}") from None
    expected = 1 if name.startswith("unitor") else 2 if name.startswith("sym") else 3
    if len(spaces) != expected:
        raise ValueError(f"{name} takes {expected} space(s), got {len(spaces)}")
    return builder(*spaces)


# -- search --------------------------------------------------------------------


def find_morphisms(
    a: DialSpace, b: DialSpace, budget: int | None = None
) -> list[DialMorphism]:
    """All morphisms a -> b, ordered lexicographically by table encodings."""
    limit = enum_budget(budget)
    candidates = _fn_count(a.u_size, b.u_size) * _fn_count(b.x_size, a.x_size)
    if candidates > limit:
        raise ResourceLimitError(
            f"{candidates} candidate morphism tables exceed budget {limit}"
        )
    found = []
    for f in itertools.product(range(b.u_size), repeat=a.u_size):
        for F in itertools.product(range(a.x_size), repeat=b.x_size):
            if is_morphism(a, b, f, F):
                found.append(DialMorphism(a, b, f, F))
    return found


def find_iso(
    a: DialSpace, b: DialSpace, budget: int | None = None
) -> tuple[DialMorphism, DialMorphism] | None:
    """First pair of mutually inverse morphisms, or None."""
    forward = find_morphisms(a, b, budget)
    if not forward:
        return None
    backward = find_morphisms(b, a, budget)
    id_a, id_b = identity(a), identity(b)
    for m in forward:
        for n in backward:
            if compose(m, n) == id_a and compose(n, m) == id_b:
                return m, n
    return None


# -- attack-tree interpretation -------------------------------------------------


Assignment = Mapping[str, DialSpace]


def interpret_tree(tree: AttackTree, nu: Assignment) -> DialSpace:
    """Fold a tree into a space: AND -> odot, SAND -> rhd, OR -> choice."""
    match tree:
        case Base(name):
            try:
                return nu[name]
            except KeyError:
                raise MissingValuationError(name) from None
        case Or(l, r):
            return choice(interpret_tree(l, nu), interpret_tree(r, nu))
        case And(l, r):
            return odot(interpret_tree(l, nu), interpret_tree(r, nu))
        case Sand(l, r):
            return rhd(interpret_tree(l, nu), interpret_tree(r, nu))
    raise TypeError(f"not an attack tree: {tree!r}")


# -- law verification -----------------------------------------------------------


@dataclass(frozen=True)
class LawResult:
    name: str
    checked: int
    violations: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return not self.violations


@dataclass(frozen=True)
class LawReport:
    seed: int
    samples: int
    results: tuple[LawResult, ...]

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    def __getitem__(self, name: str) -> LawResult:
        for result in self.results:
            if result.name == name:
                return result
        raise KeyError(name)

    def to_json_dict(self) -> dict:
        return {
            "seed": self.seed,
            "samples": self.samples,
            "laws": [
                {
                    "name": r.name,
                    "checked": r.checked,
                    "passed": r.passed,
                    "violations": list(r.violations),
                }
                for r in self.results
            ],
        }


def seeded_family(seed: int, samples: int) -> list[DialSpace]:
    """Canonical small spaces plus seeded random relations, carriers <= 2."""
    q, h, o, z = Four.QUARTER, Four.HALF, Four.ONE, Four.ZERO
    family = [
        DialSpace(0, 0, ()),
        DialSpace(1, 0, ((),)),
        DialSpace(0, 1, ()),
        DialSpace(1, 1, ((z,),)),
        DialSpace(1, 1, ((q,),)),
        DialSpace(1, 1, ((h,),)),
        DialSpace(1, 1, ((o,),)),
        DialSpace(2, 1, ((q,), (o,))),
        DialSpace(1, 2, ((h, z),)),
        DialSpace(2, 2, ((z, q), (h, o))),
        DialSpace(2, 2, ((o, o), (q, z))),
    ]
    rng = random.Random(seed)
    for _ in range(samples):
        u = rng.randint(1, 2)
        x = rng.randint(1, 2)
        alpha = tuple(
            tuple(rng.choice(FOUR_VALUES) for _ in range(x)) for _ in range(u)
        )
        family.append(DialSpace(u, x, alpha))
    return family


def _pool(family: list[DialSpace], cap: int = 60) -> list[DialMorphism]:
    n = len(family)
    pool: list[DialMorphism] = []
    for i in range(n):
        if len(pool) >= cap:
            break
        a = family[i]
        b = family[(i * 3 + 2) % n]
        try:
            found = find_morphisms(a, b, budget=4096)
        except ResourceLimitError:
            continue
        pool.extend(found[:2])
    for space in family[:6]:
        pool.append(identity(space))
    return pool[:cap]


def _triples(family: list[DialSpace]) -> Iterator[tuple[DialSpace, DialSpace, DialSpace]]:
    n = len(family)
    for i in range(n):
        yield family[i], family[(i * 5 + 1) % n], family[(i * 11 + 4) % n]


def _pairs(family: list[DialSpace]) -> Iterator[tuple[DialSpace, DialSpace]]:
    n = len(family)
    for i in range(n):
        yield family[i], family[(i * 7 + 3) % n]


def _is_identity(m: DialMorphism) -> bool:
    return m.source == m.target and m == identity(m.source)


def verify_laws(seed: int = 0xA77, samples: int = 200) -> LawReport:
    """Audit the categorical laws on a finite seeded family of spaces.

    This checks the laws on concrete instances only; it is a finite-model
    audit, not a proof.  Heavy tensor coherence (pentagon) runs on the
    singleton subfamily, everything else on carriers up to 2.
    """
    family = seeded_family(seed, samples)
    tiny = [s for s in family if s.u_size <= 1 and s.x_size <= 1][:8]
    pool = _pool(family)
    results: list[LawResult] = []

    def law(name: str, instances) -> None:
        checked = 0
        violations = []
        for label, holds in instances:
            checked += 1
            if not holds:
                violations.append(label)
        results.append(LawResult(name, checked, tuple(violations[:5])))

    # category laws
    law(
        "category-identity",
        (
            (
                f"morphism {k}",
                compose(identity(m.source), m) == m and compose(m, identity(m.target)) == m,
            )
            for k, m in enumerate(pool)
        ),
    )

    def assoc_instances():
        count = 0
        for m1 in pool:
            for m2 in pool:
                if m2.source != m1.target:
                    continue
                for m3 in pool:
                    if m3.source != m2.target:
                        continue
                    count += 1
                    yield (
                        f"chain {count}",
                        compose(compose(m1, m2), m3) == compose(m1, compose(m2, m3)),
                    )
                    if count >= 200:
                        return

    law("category-associativity", assoc_instances())

    # functoriality: pairwise action preserves identities and composition
    for op in ("odot", "rhd", "choice", "tensor"):
        def functor_instances(op=op):
            for i, (a, b) in enumerate(_pairs(family)):
                yield (
                    f"id {i}",
                    map_pair(op, identity(a), identity(b))
                    == identity(_ATTACK_OPS[op](a, b) if op != "tensor" else tensor(a, b)),
                )
            count = 0
            for m1 in pool:
                for m2 in pool:
                    if m2.source != m1.target:
                        continue
                    for n1 in pool[:10]:
                        for n2 in pool:
                            if n2.source != n1.target:
                                continue
                            count += 1
                            lhs = map_pair(op, compose(m1, m2), compose(n1, n2))
                            rhs = compose(map_pair(op, m1, n1), map_pair(op, m2, n2))
                            yield f"comp {count}", lhs == rhs
                            if count >= 25:
                                return

        law(f"functoriality-{op}", functor_instances())

    # associativity isos
    for op in ("odot", "rhd", "choice", "tensor"):
        def assoc_iso_instances(op=op):
            triples = _triples(family)
            if op == "tensor":
                triples = itertools.islice(triples, 24)
            for i, (a, b, c) in enumerate(triples):
                try:
                    fwd = structural(f"assoc-{op}", a, b, c)
                    rev = structural(f"assoc-{op}-inv", a, b, c)
                except ResourceLimitError:
                    continue
                yield (
                    f"triple {i}",
                    _is_identity(compose(fwd, rev)) and _is_identity(compose(rev, fwd)),
                )

        law(f"assoc-iso-{op}", assoc_iso_instances())

    # unitor isos and triangle
    def unitor_instances():
        for i, a in enumerate(family):
            left, left_inv = structural("unitorL", a), structural("unitorL-inv", a)
            right, right_inv = structural("unitorR", a), structural("unitorR-inv", a)
            yield (
                f"space {i}",
                _is_identity(compose(left, left_inv))
                and _is_identity(compose(left_inv, left))
                and _is_identity(compose(right, right_inv))
                and _is_identity(compose(right_inv, right)),
            )

    law("unitor-iso", unitor_instances())

    unit = unit_object()

    def triangle_instances():
        for i, (a, b) in enumerate(_pairs(family)):
            lhs = map_pair("tensor", structural("unitorR", a), identity(b))
            rhs = compose(
                structural("assoc-tensor", a, unit, b),
                map_pair("tensor", identity(a), structural("unitorL", b)),
            )
            yield f"pair {i}", lhs == rhs

    law("triangle-tensor", triangle_instances())

    def pentagon_instances():
        t = len(tiny)
        for i in range(t):
            a, b, c, d = tiny[i], tiny[(i + 1) % t], tiny[(i + 2) % t], tiny[(i + 3) % t]
            top = compose(
                structural("assoc-tensor", tensor(a, b), c, d),
                structural("assoc-tensor", a, b, tensor(c, d)),
            )
            bottom = compose(
                compose(
                    map_pair("tensor", structural("assoc-tensor", a, b, c), identity(d)),
                    structural("assoc-tensor", a, tensor(b, c), d),
                ),
                map_pair("tensor", identity(a), structural("assoc-tensor", b, c, d)),
            )
            yield f"quad {i}", top == bottom

    law("pentagon-tensor", pentagon_instances())

    # symmetry involutivity
    for op in ("odot", "choice", "tensor"):
        def sym_instances(op=op):
            for i, (a, b) in enumerate(_pairs(family)):
                fwd = structural(f"sym-{op}", a, b)
                rev = structural(f"sym-{op}", b, a)
                yield (
                    f"pair {i}",
                    _is_identity(compose(fwd, rev)) and _is_identity(compose(rev, fwd)),
                )

        law(f"sym-involutive-{op}", sym_instances())

    # distributor isos
    for op in ("odot", "rhd"):
        def distl_instances(op=op):
            for i, (a, b, c) in enumerate(_triples(family)):
                fwd = structural(f"distl-{op}", a, b, c)
                rev = structural(f"distl-{op}-inv", a, b, c)
                yield (
                    f"triple {i}",
                    _is_identity(compose(fwd, rev)) and _is_identity(compose(rev, fwd)),
                )

        law(f"distl-iso-{op}", distl_instances())

    # naturality squares
    def nat_assoc_instances(op):
        count = 0
        for i in range(len(pool)):
            m1 = pool[i]
            m2 = pool[(i * 7 + 1) % len(pool)]
            m3 = pool[(i * 3 + 5) % len(pool)]
            count += 1
            lhs = compose(
                structural(f"assoc-{op}", m1.source, m2.source, m3.source),
                map_pair(op, m1, map_pair(op, m2, m3)),
            )
            rhs = compose(
                map_pair(op, map_pair(op, m1, m2), m3),
                structural(f"assoc-{op}", m1.target, m2.target, m3.target),
            )
            yield f"triple {count}", lhs == rhs
            if op == "tensor" and count >= 6:
                return

    for op in ("odot", "rhd", "choice", "tensor"):
        law(f"naturality-assoc-{op}", nat_assoc_instances(op))

    def nat_sym_instances(op):
        for i in range(len(pool)):
            m1 = pool[i]
            m2 = pool[(i * 5 + 2) % len(pool)]
            lhs = compose(
                structural(f"sym-{op}", m1.source, m2.source),
                map_pair(op, m2, m1),
            )
            rhs = compose(
                map_pair(op, m1, m2),
                structural(f"sym-{op}", m1.target, m2.target),
            )
            yield f"pair {i}", lhs == rhs

    for op in ("odot", "choice", "tensor"):
        law(f"naturality-sym-{op}", nat_sym_instances(op))

    def nat_unitor_instances():
        for i, m in enumerate(pool):
            lhs_l = compose(structural("unitorL", m.source), m)
            rhs_l = compose(map_pair("tensor", identity(unit), m), structural("unitorL", m.target))
            lhs_r = compose(structural("unitorR", m.source), m)
            rhs_r = compose(map_pair("tensor", m, identity(unit)), structural("unitorR", m.target))
            yield f"morphism {i}", lhs_l == rhs_l and lhs_r == rhs_r

    law("naturality-unitors", nat_unitor_instances())

    def nat_distl_instances(op):
        for i in range(len(pool)):
            m1 = pool[i]
            m2 = pool[(i * 7 + 1) % len(pool)]
            m3 = pool[(i * 3 + 5) % len(pool)]
            lhs = compose(
                structural(f"distl-{op}", m1.source, m2.source, m3.source),
                map_pair("choice", map_pair(op, m1, m2), map_pair(op, m1, m3)),
            )
            rhs = compose(
                map_pair(op, m1, map_pair("choice", m2, m3)),
                structural(f"distl-{op}", m1.target, m2.target, m3.target),
            )
            yield f"triple {i}", lhs == rhs

    for op in ("odot", "rhd"):
        law(f"naturality-distl-{op}", nat_distl_instances(op))

    # sequential conjunction has no symmetry: the probe pair must admit no
    # morphism at all in the swapped direction
    probe_a = DialSpace(1, 1, ((Four.HALF,),))
    probe_b = DialSpace(1, 1, ((Four.QUARTER,),))
    swapped = find_morphisms(rhd(probe_a, probe_b), rhd(probe_b, probe_a))
    law("rhd-symmetry-probe", [("probe", not swapped)])

    return LawReport(seed, samples, tuple(results))
