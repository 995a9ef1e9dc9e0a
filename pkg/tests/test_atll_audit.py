import pytest

from sandcastle.atll import audit_soundness

ACCEPTANCE_RULES = ("exch-comma", "exch-bullet", "dist-semi-r-fwd", "dist-comma-r-fwd")


@pytest.mark.parametrize("interp", ["odot", "tensor"])
def test_named_rules_sound_under_both_interpretations(interp):
    report = audit_soundness(interp)
    for rule in ACCEPTANCE_RULES:
        assert report[rule].sound, (interp, rule)


def test_unit_elim_comma_unsound_under_odot():
    report = audit_soundness("odot")
    entry = report["unit-elim-l(comma)"]
    assert not entry.sound
    assert entry.witnesses[0] == "(1/4)"
    # under the tensor the unit laws for comma hold
    assert audit_soundness("tensor")["unit-elim-l(comma)"].sound


def test_odot_elim_unsound_under_tensor():
    # the comma former interprets below the parallel-conjunction formula,
    # so unfolding a * b into (a , b) over-counts under the tensor
    report = audit_soundness("tensor")
    assert not report["odot-e"].sound
    assert audit_soundness("odot")["odot-e"].sound


def test_limp_e_unsound_under_odot():
    assert not audit_soundness("odot")["limp-e"].sound
    assert audit_soundness("tensor")["limp-e"].sound


def test_structural_core_rules_sound():
    for interp in ("odot", "tensor"):
        report = audit_soundness(interp)
        for rule in ("ctx-id", "ctx-comp", "var", "cm", "cut",
                     "assoc-r(semi)", "assoc-l(semi)",
                     "dist-semi-l-fwd", "dist-semi-l-rev",
                     "odot-i", "rhd-i", "join-i", "limp-i"):
            assert report[rule].sound, (interp, rule)


def test_audit_deterministic():
    for interp in ("odot", "tensor"):
        first = audit_soundness(interp).to_json_dict()
        second = audit_soundness(interp).to_json_dict()
        assert first == second


def test_audit_rejects_unknown_interpretation():
    with pytest.raises(ValueError):
        audit_soundness("meet")


def test_counts():
    report = audit_soundness("odot")
    assert report["exch-comma"].checked == 16
    assert report["assoc-r(comma)"].checked == 64
    assert report["odot-i"].checked == 256
    # elimination schemas sweep 7 hole shapes x 4^5 assignments
    assert report["odot-e"].checked == 7 * 4**5
