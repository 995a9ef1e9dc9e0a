import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sandcastle.errors import MissingValuationError, ResourceLimitError
from sandcastle.four import (
    EXPECTED_FAILING_PROPERTIES,
    FOUR_VALUES,
    Four,
    TENSOR_UNIT,
    check_scalar_properties,
    eval_all,
    eval_tree,
    join4,
    leq4,
    limp4,
    odot4,
    rhd4,
    semantic_equiv,
    semantic_implies,
    tensor4,
    valuation_at,
)
from sandcastle.rewrite import AxiomSet, apply_step, single_steps
from sandcastle.trees import And, Base, Or, Sand, base_attacks, parse
from tests.util import DEFAULT_SEED, random_tree

Z, Q, H, O = Four.ZERO, Four.QUARTER, Four.HALF, Four.ONE

# Golden tables, rows indexed by the first argument in order 0, 1/4, 1/2, 1.
GOLDEN = {
    odot4: [
        [Z, Z, Z, Z],
        [Z, O, O, O],
        [Z, O, O, O],
        [Z, O, O, O],
    ],
    rhd4: [
        [Z, Z, Z, Z],
        [Z, Q, Q, Q],
        [Z, O, O, O],
        [Z, O, O, O],
    ],
    join4: [
        [Z, Q, H, O],
        [Q, Q, H, O],
        [H, H, H, O],
        [O, O, O, O],
    ],
    tensor4: [
        [Z, Z, Z, Z],
        [Z, Q, H, O],
        [Z, H, H, O],
        [Z, O, O, O],
    ],
    # limp4 is the tensor residual: the (1/4, 1/2) entry is 1/2, the single
    # point where the closure law forces a value below 1
    limp4: [
        [O, O, O, O],
        [Z, Q, H, O],
        [Z, Z, H, O],
        [Z, Z, Z, O],
    ],
}


def test_golden_tables():
    for op, table in GOLDEN.items():
        for i, a in enumerate(FOUR_VALUES):
            for j, b in enumerate(FOUR_VALUES):
                assert op(a, b) == table[i][j], (op.__name__, a, b)


def test_connective_spot_values():
    assert odot4(Q, Q) == O
    assert odot4(Z, O) == Z
    assert rhd4(Q, H) == Q
    assert rhd4(H, Q) == O
    assert all(rhd4(v, Z) == Z for v in FOUR_VALUES)
    assert join4(Q, H) == H
    assert tensor4(Q, Q) == Q
    assert all(tensor4(v, TENSOR_UNIT) == v for v in FOUR_VALUES if v != Z)
    assert tensor4(Z, TENSOR_UNIT) == Z
    assert limp4(O, Q) == Z
    assert limp4(H, H) == H
    assert limp4(Z, Z) == O


def test_leq4_chain():
    assert leq4(Z, Q) and leq4(Q, H) and leq4(H, O)
    assert not leq4(H, Q)
    assert all(leq4(v, v) for v in FOUR_VALUES)


def test_four_rendering():
    assert [v.render() for v in FOUR_VALUES] == ["0", "1/4", "1/2", "1"]
    assert Four.parse("1/2") == H
    with pytest.raises(ValueError):
        Four.parse("3/4")


# -- evaluation -------------------------------------------------------------


def test_eval_examples():
    a, b = Base("a"), Base("b")
    assert eval_tree(And(a, a), {"a": Q}) == O
    assert eval_tree(Sand(a, b), {"a": Q, "b": H}) == Q
    assert eval_tree(a, {"a": H}) == H


def test_eval_missing_binding():
    with pytest.raises(MissingValuationError) as exc:
        eval_tree(Or(Base("a"), Base("zz")), {"a": O})
    assert "zz" in str(exc.value)


def test_eval_all_matches_scalar():
    rng = random.Random(DEFAULT_SEED)
    for _ in range(25):
        tree = random_tree(rng, 9, ("a", "b", "c"))
        names = base_attacks(tree)
        bulk = eval_all(tree, names)
        for i in range(len(bulk)):
            valuation = valuation_at(i, names)
            assert Four(int(bulk[i])) == eval_tree(tree, valuation)


# -- semantic comparison ----------------------------------------------------


def test_semantic_equiv_atm():
    t1 = parse("SAND(AND(b1, OR(b2, b3)), b4)")
    t2 = parse("OR(SAND(AND(b1, b2), b4), SAND(AND(b1, b3), b4))")
    assert semantic_equiv(t1, t2).kind == "equivalent"


def test_semantic_equiv_sand_witness():
    verdict = semantic_equiv(Sand(Base("a"), Base("b")), Sand(Base("b"), Base("a")))
    assert verdict.kind == "not-equivalent"
    assert verdict.witness == {"a": Q, "b": H}
    assert (verdict.lhs, verdict.rhs) == (Q, O)
    # the witness reproduces the reported values
    assert eval_tree(Sand(Base("a"), Base("b")), verdict.witness) == verdict.lhs
    assert eval_tree(Sand(Base("b"), Base("a")), verdict.witness) == verdict.rhs


def test_semantic_equiv_reflexive():
    t = parse("AND(a, SAND(b, c))")
    assert semantic_equiv(t, t).kind == "equivalent"


def test_semantic_implies_examples():
    t = parse("OR(a, b)")
    assert semantic_implies(t, t).kind == "implied"
    lhs = parse("OR(AND(a, b), AND(a, c))")
    rhs = parse("AND(a, OR(b, c))")
    assert semantic_implies(lhs, rhs).kind == "implied"
    assert semantic_implies(rhs, lhs).kind == "implied"
    verdict = semantic_implies(Sand(Base("a"), Base("b")), Sand(Base("b"), Base("a")))
    assert verdict.kind == "not-implied"
    assert verdict.witness == {"a": H, "b": Q}


def test_semantic_cap():
    names = [f"x{i:02d}" for i in range(13)]
    wide = Base(names[0])
    for name in names[1:]:
        wide = Or(wide, Base(name))
    with pytest.raises(ResourceLimitError):
        semantic_equiv(wide, wide)
    assert semantic_equiv(wide, wide, cap=13).kind == "equivalent"


def test_semantic_equiv_symmetric_transitive():
    trees = [
        parse("OR(a, b)"),
        parse("OR(b, a)"),
        parse("AND(a, b)"),
        parse("OR(a, OR(b, b))"),
        parse("SAND(a, b)"),
    ]
    for t1 in trees:
        for t2 in trees:
            assert (
                semantic_equiv(t1, t2).holds == semantic_equiv(t2, t1).holds
            )
            for t3 in trees:
                if semantic_equiv(t1, t2).holds and semantic_equiv(t2, t3).holds:
                    assert semantic_equiv(t1, t3).holds


# -- rewriting respects the semantics ---------------------------------------


def exhaustive_valuations(names):
    for combo in itertools.product(FOUR_VALUES, repeat=len(names)):
        yield dict(zip(names, combo))


def test_single_axiom_steps_preserve_eval():
    rng = random.Random(DEFAULT_SEED + 1)
    for _ in range(40):
        tree = random_tree(rng, 9, ("a", "b", "c"))
        options = list(single_steps(tree, AxiomSet.FULL))
        if not options:
            continue
        step, rewritten = rng.choice(options)
        names = base_attacks(tree)
        assert apply_step(tree, step) == rewritten
        for valuation in exhaustive_valuations(names):
            assert eval_tree(tree, valuation) == eval_tree(rewritten, valuation), step


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**30))
def test_syntactic_paper_equiv_implies_semantic(seed):
    rng = random.Random(seed)
    tree = random_tree(rng, 10, ("a", "b", "c"))
    from tests.util import perturb

    other, _ = perturb(rng, tree, rng.randint(1, 4))
    assert semantic_equiv(tree, other).holds


# -- scalar property report --------------------------------------------------


def test_scalar_property_report_pattern():
    report = check_scalar_properties()
    assert report.failing == EXPECTED_FAILING_PROPERTIES
    assert report["symmetry-odot"].checked == 16
    assert report["associativity-rhd"].checked == 64
    assert report["closure"].checked == 64
    assert report["monotone-limp"].checked == 256


def test_scalar_property_exact_counterexamples():
    report = check_scalar_properties()
    assert report["contraction-odot"].witnesses[0] == (Q,)
    assert odot4(Q, Q) == O
    assert report["contraction-rhd"].witnesses == ((H,),)
    assert rhd4(H, H) == O
    assert report["symmetry-rhd"].witnesses[0] == (Q, H)
    assert (rhd4(Q, H), rhd4(H, Q)) == (Q, O)


def test_join_scalar_idempotent():
    # idempotence holds for the scalar max but is deliberately not lifted
    # to tree equivalence (duplicate OR children stay distinct)
    assert all(join4(v, v) == v for v in FOUR_VALUES)


def test_sand_left_distribution_scalar():
    # justification for the FULL axiom set
    for x in FOUR_VALUES:
        for y in FOUR_VALUES:
            for z in FOUR_VALUES:
                assert rhd4(join4(x, y), z) == join4(rhd4(x, z), rhd4(y, z))
