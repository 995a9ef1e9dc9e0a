import json

import pytest

from sandcastle.cli import run
from sandcastle.lineale import four_lineale

T1 = "SAND(AND(b1, OR(b2, b3)), b4)"
T2 = "OR(SAND(AND(b1, b2), b4), SAND(AND(b1, b3), b4))"


@pytest.fixture
def atm_files(tmp_path):
    a = tmp_path / "t1.sat"
    b = tmp_path / "t2.sat"
    a.write_text(T1)
    b.write_text(T2)
    return str(a), str(b)


def invoke(argv, capsys):
    code, report = run(argv)
    output = capsys.readouterr().out
    return code, report, output


def test_parse_command(atm_files, capsys):
    a, _ = atm_files
    code, report, out = invoke(["parse", a], capsys)
    assert code == 0
    assert report.verdicts["base_attacks"] == ["b1", "b2", "b3", "b4"]
    assert "SAND(AND(b1, OR(b2, b3)), b4)" in out


def test_parse_error_exit_2(tmp_path, capsys):
    bad = tmp_path / "bad.sat"
    bad.write_text("OR(a")
    code, _, _ = invoke(["parse", str(bad)], capsys)
    assert code == 2


def test_missing_file_exit_2(capsys):
    code, _, _ = invoke(["parse", "/nonexistent/x.sat"], capsys)
    assert code == 2


def test_normalize_command(atm_files, capsys):
    a, b = atm_files
    code_full, report_full, _ = invoke(["normalize", a, "--axioms", "full"], capsys)
    code_paper, report_paper, _ = invoke(["normalize", a, "--axioms", "paper"], capsys)
    assert code_full == code_paper == 0
    assert report_full.verdicts["normal_form"] != report_paper.verdicts["normal_form"]
    _, report_b, _ = invoke(["normalize", b, "--axioms", "full"], capsys)
    assert report_full.verdicts["normal_form"] == report_b.verdicts["normal_form"]


def test_equiv_semantic_atm(atm_files, capsys):
    a, b = atm_files
    code, report, _ = invoke(["equiv", a, b, "--mode", "semantic"], capsys)
    assert code == 0
    assert report.verdicts["semantic"] == "equivalent"


def test_equiv_reflexive(atm_files, capsys):
    a, _ = atm_files
    code, _, _ = invoke(["equiv", a, a], capsys)
    assert code == 0


def test_equiv_both_paper_axioms_negative(atm_files, capsys):
    a, b = atm_files
    code, report, _ = invoke(
        ["equiv", a, b, "--mode", "both", "--axioms", "paper"], capsys
    )
    assert code == 1
    assert report.verdicts["syntactic"] == "distinct"
    assert report.verdicts["semantic"] == "equivalent"


def test_implies_negative_with_witness(tmp_path, capsys):
    x = tmp_path / "x.sat"
    y = tmp_path / "y.sat"
    x.write_text("SAND(a, b)")
    y.write_text("SAND(b, a)")
    code, report, _ = invoke(["implies", str(x), str(y)], capsys)
    assert code == 1
    assert report.witnesses["implies"]["valuation"] == {"a": "1/2", "b": "1/4"}


def test_table_tsv(tmp_path, capsys):
    f = tmp_path / "t.sat"
    f.write_text("OR(a, b)")
    code, _, out = invoke(["table", str(f)], capsys)
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "a\tb\tvalue"
    assert len(lines) == 1 + 16
    assert lines[1] == "0\t0\t0"
    assert lines[-1] == "1\t1\t1"


def test_lineale_check(tmp_path, capsys):
    f = tmp_path / "four.lineale.json"
    f.write_text(four_lineale().dump())
    code, report, _ = invoke(["lineale", "check", str(f)], capsys)
    assert code == 0
    assert report.verdicts["lineale"] == "valid"


def test_lineale_check_invalid(tmp_path, capsys):
    lin = four_lineale().to_json_dict()
    lin["imp"] = [["1"] * 4 for _ in range(4)]
    f = tmp_path / "broken.lineale.json"
    f.write_text(json.dumps(lin))
    code, report, _ = invoke(["lineale", "check", str(f)], capsys)
    assert code == 1
    axioms = {v["axiom"] for v in report.witnesses["violations"]}
    assert "relative-complement" in axioms


def test_lineale_search(capsys):
    code, report, _ = invoke(["lineale", "search", "--size", "2"], capsys)
    assert code == 0
    assert report.verdicts["count"] >= 1


def test_dial_verify_laws_small(capsys):
    code, report, _ = invoke(
        ["dial", "verify-laws", "--seed", "0xA77", "--samples", "8"], capsys
    )
    assert code == 0
    assert report.verdicts["all_passed"] is True


def test_dial_iso(tmp_path, capsys):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    a.write_text(json.dumps({"U": 1, "X": 1, "alpha": [["1/4"]]}))
    b.write_text(json.dumps({"U": 1, "X": 1, "alpha": [["1/4"]]}))
    code, report, _ = invoke(["dial", "iso", str(a), str(b)], capsys)
    assert code == 0
    assert report.verdicts["iso"] == "found"
    c = tmp_path / "c.json"
    c.write_text(json.dumps({"U": 1, "X": 1, "alpha": [["1"]]}))
    code, report, _ = invoke(["dial", "iso", str(a), str(c)], capsys)
    assert code == 1


def test_atll_check_roundtrip(tmp_path, capsys):
    from sandcastle.atll import equivalence_library
    from sandcastle.atll.sexpr import render_derivation

    entry = equivalence_library()[0]
    f = tmp_path / "proof.atp"
    f.write_text(render_derivation(entry.derivation) + "\n")
    code, report, _ = invoke(["atll", "check", str(f), "--rules", "paper"], capsys)
    assert code == 0
    assert report.verdicts["proof"] == "valid"


def test_atll_check_invalid_proof(tmp_path, capsys):
    f = tmp_path / "proof.atp"
    f.write_text("(limp-i (var A))")
    code, report, _ = invoke(["atll", "check", str(f)], capsys)
    assert code == 1
    assert report.verdicts["proof"] == "invalid"


def test_atll_search_commands(capsys):
    code, report, _ = invoke(
        ["atll", "search", "--goal", "(seq (fm a) a)", "--depth", "2"], capsys
    )
    assert code == 0
    assert report.verdicts["search"] == "found"
    code, report, _ = invoke(
        ["atll", "search", "--goal", "(seq * (limp (rhd a b) (rhd b a)))", "--depth", "6"],
        capsys,
    )
    assert code == 1


def test_atll_audit_both_interpretations(capsys):
    code, report, _ = invoke(["atll", "audit"], capsys)
    assert code == 0
    assert "comma=odot" in report.verdicts
    assert "comma=tensor" in report.verdicts


def test_demo_atm(capsys):
    code, report, _ = invoke(["demo", "atm"], capsys)
    assert code == 0
    assert report.verdicts["semantic"] == "equivalent"
    assert report.verdicts["syntactic_full"] == "equivalent"
    assert report.verdicts["syntactic_paper"] == "distinct"
    assert report.verdicts["atll_full_derivation"] == "found"


def test_json_output_byte_identical(atm_files, capsys):
    a, b = atm_files
    _, _, first = invoke(["equiv", a, b, "--json"], capsys)
    _, _, second = invoke(["equiv", a, b, "--json"], capsys)
    assert first == second
    parsed = json.loads(first)
    assert parsed["defaults"] == {"axioms": "full", "mode": "both", "depth": 14, "seed": 0xA77}
    assert "elapsed" not in first


def test_json_roundtrips(capsys):
    code, _, out = invoke(["lineale", "search", "--size", "2", "--json"], capsys)
    assert code == 0
    parsed = json.loads(out)
    assert parsed["exit"] == 0


def test_usage_error(capsys):
    code, _, _ = invoke(["frobnicate"], capsys)
    assert code == 2


def test_table_resource_limit_exit_3(tmp_path, capsys):
    names = [f"x{i:02d}" for i in range(13)]
    f = tmp_path / "wide.sat"
    f.write_text("OR(" + ", ".join(names) + ")")
    code, _, _ = invoke(["table", str(f)], capsys)
    assert code == 3
