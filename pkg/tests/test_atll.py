import pytest

from sandcastle.atll import (
    CM,
    Atom,
    Bullet,
    Comma,
    CtxComp,
    CtxId,
    CtxStep,
    Join,
    JoinE,
    JoinI,
    Leaf,
    Limp,
    LimpE,
    LimpI,
    Odot,
    OdotE,
    OdotI,
    Rhd,
    RhdI,
    Semi,
    Sequent,
    UNIT,
    Var,
    check_ctx_derivation,
    check_derivation,
    equivalence_library,
    formula_to_tree,
    tree_to_formula,
)
from sandcastle.atll.ctx_rules import CtxRuleError, Ruleset, apply_ctx_rule
from sandcastle.four import semantic_implies
from sandcastle.trees import parse

A, B, C = Atom("A"), Atom("B"), Atom("C")
LA, LB, LC = Leaf(A), Leaf(B), Leaf(C)


# -- context rules ----------------------------------------------------------


def test_apply_assoc():
    ctx = Semi(Semi(LA, LB), LC)
    assert apply_ctx_rule("assoc-r", ctx, (), "semi") == Semi(LA, Semi(LB, LC))
    with pytest.raises(CtxRuleError):
        apply_ctx_rule("assoc-r", ctx, (), "comma")


def test_apply_unit_rules():
    assert apply_ctx_rule("unit-intro-l", LA, (), "bullet") == Bullet(UNIT, LA)
    assert apply_ctx_rule("unit-elim-r", Comma(LA, UNIT), (), "comma") == LA
    with pytest.raises(CtxRuleError):
        apply_ctx_rule("unit-elim-l", Comma(LA, UNIT), (), "comma")


def test_apply_exchange_only_for_comma_and_bullet():
    assert apply_ctx_rule("exch-comma", Comma(LA, LB), ()) == Comma(LB, LA)
    assert apply_ctx_rule("exch-bullet", Bullet(LA, LB), ()) == Bullet(LB, LA)
    with pytest.raises(CtxRuleError):
        apply_ctx_rule("exch-comma", Semi(LA, LB), ())
    with pytest.raises(CtxRuleError):
        apply_ctx_rule("exch-bullet", Semi(LA, LB), ())


def test_apply_dist_rules():
    ctx = Semi(LA, Bullet(LB, LC))
    out = apply_ctx_rule("dist-semi-r-fwd", ctx, ())
    assert out == Bullet(Semi(LA, LB), Semi(LA, LC))
    assert apply_ctx_rule("dist-semi-r-rev", out, ()) == ctx
    left = Semi(Bullet(LA, LB), LC)
    out2 = apply_ctx_rule("dist-semi-l-fwd", left, ())
    assert out2 == Bullet(Semi(LA, LC), Semi(LB, LC))
    with pytest.raises(CtxRuleError):
        apply_ctx_rule("dist-semi-l-fwd", left, (), ruleset=Ruleset.PAPER)
    # rev requires equal shared parts
    bad = Bullet(Semi(LA, LB), Semi(LB, LC))
    with pytest.raises(CtxRuleError):
        apply_ctx_rule("dist-semi-r-rev", bad, ())


def test_apply_at_path():
    ctx = Comma(Semi(Semi(LA, LB), LC), LB)
    out = apply_ctx_rule("assoc-r", ctx, (0,), "semi")
    assert out == Comma(Semi(LA, Semi(LB, LC)), LB)


def test_check_ctx_id():
    verdict = check_ctx_derivation(CtxId(Comma(LA, LB)))
    assert verdict.valid
    assert verdict.source == verdict.target == Comma(LA, LB)


def test_check_ctx_exchange():
    d = CtxStep("exch-comma", (), None, Comma(LA, LB))
    verdict = check_ctx_derivation(d)
    assert verdict.valid
    assert verdict.target == Comma(LB, LA)


def test_check_ctx_rejects_exchange_at_semi():
    d = CtxStep("exch-comma", (), None, Semi(LA, LB))
    verdict = check_ctx_derivation(d)
    assert not verdict.valid
    assert "exchange" in verdict.reason


def test_check_ctx_comp_mismatch():
    d = CtxComp(
        CtxStep("exch-comma", (), None, Comma(LA, LB)),
        CtxStep("exch-comma", (), None, Comma(LA, LB)),
    )
    verdict = check_ctx_derivation(d)
    assert not verdict.valid
    assert "composition mismatch" in verdict.reason


def test_check_ctx_comp_chain():
    first = CtxStep("exch-comma", (), None, Comma(LA, LB))
    second = CtxStep("exch-comma", (), None, Comma(LB, LA))
    verdict = check_ctx_derivation(CtxComp(first, second))
    assert verdict.valid
    assert verdict.source == verdict.target == Comma(LA, LB)


def test_check_ctx_ruleset_blocks_left_dist():
    d = CtxStep("dist-semi-l-fwd", (), None, Semi(Bullet(LA, LB), LC))
    assert check_ctx_derivation(d, Ruleset.FULL).valid
    verdict = check_ctx_derivation(d, Ruleset.PAPER)
    assert not verdict.valid


# -- derivations -------------------------------------------------------------


def test_var():
    verdict = check_derivation(Var(A))
    assert verdict.valid
    assert verdict.sequent == Sequent(LA, A)


def test_odot_intro():
    verdict = check_derivation(OdotI(Var(A), Var(B)))
    assert verdict.valid
    assert verdict.sequent == Sequent(Comma(LA, LB), Odot(A, B))


def test_rhd_intro_orders_premises():
    verdict = check_derivation(RhdI(Var(B), Var(A)))
    assert verdict.valid
    # premises appear in order: left premise first
    assert verdict.sequent == Sequent(Semi(LB, LA), Rhd(B, A))


def test_swapped_rhd_claim_is_invalid():
    # deriving A;B |- B > A by gluing an identity morphism for (A ; B) onto
    # swapped-premise RhdI must fail: the contexts do not match
    d = CM(CtxId(Semi(LA, LB)), RhdI(Var(B), Var(A)))
    verdict = check_derivation(d)
    assert not verdict.valid
    assert "morphism target" in verdict.reason


def test_elim_checks_hole():
    principal = Var(Odot(A, B))
    body = CM(
        CtxStep("exch-comma", (), None, Comma(LA, LB)),
        OdotI(Var(B), Var(A)),
    )
    d = OdotE((), principal, body)
    verdict = check_derivation(d)
    assert verdict.valid
    assert verdict.sequent == Sequent(Leaf(Odot(A, B)), Odot(B, A))
    # wrong hole path
    bad = OdotE((0,), principal, body)
    assert not check_derivation(bad).valid


def test_limp_intro_shape():
    inner = CM(
        CtxStep("unit-elim-l", (), "comma", Comma(UNIT, LA)),
        Var(A),
    )
    d = LimpI(inner)
    verdict = check_derivation(d)
    assert verdict.valid
    assert verdict.sequent == Sequent(UNIT, Limp(A, A))
    # premise context not of shape (G , A)
    assert not check_derivation(LimpI(Var(A))).valid


def test_limp_elim():
    d = LimpE(Var(Limp(A, B)), Var(A))
    verdict = check_derivation(d)
    assert verdict.valid
    assert verdict.sequent == Sequent(Comma(Leaf(Limp(A, B)), LA), B)
    bad = LimpE(Var(Limp(A, B)), Var(B))
    assert not check_derivation(bad).valid


def test_join_elim_example():
    principal = Var(Join(B, C))
    inner = CM(
        CtxStep("dist-semi-r-fwd", (), None, Semi(LA, Bullet(LB, LC))),
        JoinI(RhdI(Var(A), Var(B)), RhdI(Var(A), Var(C))),
    )
    body = JoinE((1,), principal, inner)
    verdict = check_derivation(body)
    assert verdict.valid
    assert verdict.sequent == Sequent(
        Semi(LA, Leaf(Join(B, C))), Join(Rhd(A, B), Rhd(A, C))
    )


def test_invalid_node_index_reported():
    bad = OdotI(Var(A), LimpI(Var(B)))
    verdict = check_derivation(bad)
    assert not verdict.valid
    assert verdict.node == 2  # preorder: OdotI=0, Var=1, LimpI=2


# -- the bundled library ------------------------------------------------------


def test_library_has_14_valid_entries():
    library = equivalence_library()
    assert len(library) == 14
    for entry in library:
        verdict = check_derivation(entry.derivation, entry.ruleset)
        assert verdict.valid, (entry.name, verdict.reason)
        assert verdict.sequent == entry.sequent


def test_library_checks_under_paper_ruleset():
    for entry in equivalence_library():
        assert entry.ruleset == Ruleset.PAPER
        assert check_derivation(entry.derivation, Ruleset.PAPER).valid


def test_library_entries_present():
    names = {e.name for e in equivalence_library()}
    assert "join-assoc-lr" in names
    assert "rhd-assoc-lr" in names
    assert "rhd-dist-lr" in names


def test_library_statements_semantically_sound():
    # every entry * |- lhs -o rhs has lhs, rhs implication-free: the
    # corresponding trees must satisfy the pointwise ordering
    for entry in equivalence_library():
        goal = entry.sequent.goal
        lhs_tree = formula_to_tree(goal.left)
        rhs_tree = formula_to_tree(goal.right)
        assert semantic_implies(lhs_tree, rhs_tree).kind == "implied", entry.name


# -- formula/tree translation ------------------------------------------------


def test_tree_to_formula_atm():
    t1 = parse("SAND(AND(b1, OR(b2, b3)), b4)")
    formula = tree_to_formula(t1)
    assert formula == Rhd(
        Odot(Atom("b1"), Join(Atom("b2"), Atom("b3"))), Atom("b4")
    )
    assert formula_to_tree(formula) == t1


def test_formula_to_tree_rejects_implication():
    with pytest.raises(ValueError):
        formula_to_tree(Limp(A, B))
