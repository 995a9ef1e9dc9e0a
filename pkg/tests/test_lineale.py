import pytest

from sandcastle.errors import ParseError
from sandcastle.four import FOUR_VALUES, leq4, limp4, tensor4
from sandcastle.lineale import (
    FiniteLineale,
    bool_lineale,
    check_lineale,
    check_monoidal_proset,
    four_lineale,
    search_lineales,
)


def test_four_lineale_tables():
    lin = four_lineale()
    assert lin.carrier == ("0", "1/4", "1/2", "1")
    assert lin.carrier[lin.unit] == "1/4"
    assert lin.carrier[lin.mult[2][3]] == "1"  # 1/2 * 1 = 1
    assert lin.carrier[lin.imp[3][1]] == "0"  # 1 -o 1/4 = 0


def test_four_lineale_is_a_lineale():
    assert check_lineale(four_lineale()).ok


def test_bool_lineale_is_a_lineale():
    lin = bool_lineale()
    assert check_monoidal_proset(lin).ok
    assert check_lineale(lin).ok
    assert lin.mult[1][1] == 1
    assert lin.imp[1][0] == 0
    assert lin.imp[0][0] == 1
    assert not lin.is_proper


def test_four_lineale_is_proper():
    # tensor is not idempotent: 1/4 * 1/4 = 1/4 but ... check the flag
    lin = four_lineale()
    # 0*0=0, q*q=q, h*h=h, 1*1=1 -- tensor IS idempotent on the diagonal
    assert not lin.is_proper


def test_patched_mult_breaks_identity():
    lin = four_lineale()
    mult = [list(row) for row in lin.mult]
    mult[1][1] = 0  # 1/4 * 1/4 := 0 breaks the unit law at e = 1/4
    patched = FiniteLineale(lin.carrier, lin.leq, tuple(tuple(r) for r in mult), lin.unit, lin.imp)
    report = check_monoidal_proset(patched)
    assert not report.ok
    assert ("identity", ("1/4",)) in [(v.axiom, v.witness) for v in report.violations]


def test_patched_imp_breaks_relative_complement():
    lin = four_lineale()
    top = len(lin.carrier) - 1
    constant_one = tuple(tuple(top for _ in lin.carrier) for _ in lin.carrier)
    patched = FiniteLineale(lin.carrier, lin.leq, lin.mult, lin.unit, constant_one)
    report = check_lineale(patched)
    assert not report.ok
    witnesses = [v.witness for v in report.violations if v.axiom == "relative-complement"]
    assert ("1", "1/4") in witnesses


def test_adjunction_both_directions_for_four():
    # stronger than the defining axiom: a*y <= b iff y <= a -o b
    for a in FOUR_VALUES:
        for y in FOUR_VALUES:
            for b in FOUR_VALUES:
                assert leq4(tensor4(a, y), b) == leq4(y, limp4(a, b))


def test_malformed_tables_rejected():
    with pytest.raises(ValueError):
        FiniteLineale(("0", "1"), ((True,),), ((0, 0), (0, 1)), 1, ((1, 1), (0, 1)))
    with pytest.raises(ValueError):
        FiniteLineale(("0",), ((True,),), ((0,),), 3, ((0,),))


def test_json_roundtrip():
    lin = four_lineale()
    again = FiniteLineale.load(lin.dump())
    assert again == lin
    with pytest.raises(ParseError):
        FiniteLineale.load("{not json")
    with pytest.raises(ParseError):
        FiniteLineale.load('{"carrier": ["a"]}')


def test_search_size_1():
    found = search_lineales(1)
    assert len(found) == 1
    assert found[0].mult == ((0,),)
    assert found[0].imp == ((0,),)


def test_search_size_2_includes_bool():
    found = search_lineales(2)
    signatures = [lin.signature() for lin in found]
    assert bool_lineale().signature() in signatures


def test_search_size_3_finds_a_proper_lineale():
    found = search_lineales(3)
    assert found
    assert all(check_lineale(lin).ok for lin in found)
    proper = [lin for lin in found if lin.is_proper]
    assert proper
    # the three-value Lukasiewicz chain is among them: unit at the top,
    # mid * mid = bottom
    assert any(lin.unit == 2 and lin.mult[1][1] == 0 for lin in proper)


def test_search_deterministic():
    assert [l.signature() for l in search_lineales(3)] == [
        l.signature() for l in search_lineales(3)
    ]


def test_search_size_cap():
    from sandcastle.errors import ResourceLimitError

    with pytest.raises(ResourceLimitError):
        search_lineales(5)
    with pytest.raises(ValueError):
        search_lineales(0)
