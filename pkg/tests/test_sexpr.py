import pytest

from sandcastle.atll import (
    Atom,
    Bullet,
    Comma,
    Join,
    Leaf,
    Limp,
    Sequent,
    UNIT,
    Var,
    check_derivation,
    equivalence_library,
)
from sandcastle.atll.sexpr import (
    load_derivation,
    parse_sequent,
    parse_sexpr,
    render_derivation,
    render_sequent,
    render_sexpr,
    sexpr_to_context,
    sexpr_to_formula,
)
from sandcastle.errors import ParseError

A, B = Atom("A"), Atom("B")


def test_sexpr_parse_render_roundtrip():
    text = "(limp-i (cm (ctx-id *) (var A)))"
    assert render_sexpr(parse_sexpr(text)) == text


def test_parse_sexpr_errors():
    for bad in ["", "(a", "a)", "(a) b"]:
        with pytest.raises(ParseError):
            parse_sexpr(bad)
    # stray punctuation only fails at decode time, where identifiers matter
    with pytest.raises(ParseError):
        sexpr_to_formula(parse_sexpr("(join ,, b)"))


def test_formula_coding():
    expr = parse_sexpr("(limp (join A B) (join B A))")
    formula = sexpr_to_formula(expr)
    assert formula == Limp(Join(A, B), Join(B, A))


def test_context_coding():
    expr = parse_sexpr("(comma * (bullet (fm A) (fm B)))")
    ctx = sexpr_to_context(expr)
    assert ctx == Comma(UNIT, Bullet(Leaf(A), Leaf(B)))


def test_sequent_coding():
    sequent = Sequent(Comma(Leaf(A), Leaf(B)), Join(A, B))
    assert parse_sequent(render_sequent(sequent)) == sequent


def test_library_roundtrips_and_rechecks():
    for entry in equivalence_library():
        text = render_derivation(entry.derivation)
        loaded = load_derivation(text)
        assert loaded == entry.derivation
        verdict = check_derivation(loaded, entry.ruleset)
        assert verdict.valid
        assert verdict.sequent == entry.sequent


def test_loader_accepts_trailing_newline():
    text = render_derivation(Var(A)) + "\n"
    assert load_derivation(text) == Var(A)


def test_loader_rejects_noncanonical():
    with pytest.raises(ParseError) as exc:
        load_derivation("(var  A)")
    assert "canonical" in str(exc.value)


def test_loader_rejects_unknown_heads():
    with pytest.raises(ParseError):
        load_derivation("(frobnicate A)")
    with pytest.raises(ParseError):
        load_derivation("(var (weird A B))")
