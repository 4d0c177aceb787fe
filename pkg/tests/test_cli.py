"""Command-line interface: b-file parsing, report format, exit codes, goldens."""

import json
import pathlib

import jsonschema
import pytest

from doldseq.cli import InputError, dumps_report, loads_report, parse_bfile

HERE = pathlib.Path(__file__).parent
SCHEMA = json.loads((HERE.parent / "docs" / "report.schema.json").read_text())


def validate(out: str):
    jsonschema.validate(json.loads(out), SCHEMA)


# -- b-file parsing ----------------------------------------------------------


def test_parse_bfile_fibonacci_prefix():
    bf = parse_bfile("1 1\n2 1\n3 2\n")
    assert bf.entries == ((1, 1), (2, 1), (3, 2))
    assert bf.contiguous and bf.offset == 1


def test_parse_bfile_comment_and_single_entry():
    bf = parse_bfile("# comment\n1 5\n")
    assert bf.entries == ((1, 5),)


def test_parse_bfile_non_contiguous():
    bf = parse_bfile("1 1\n3 2\n")
    assert not bf.contiguous


def test_parse_bfile_errors():
    with pytest.raises(InputError, match="line 2"):
        parse_bfile("1 1\n2 x\n")
    with pytest.raises(InputError, match="line 1"):
        parse_bfile("1 1 1\n")
    with pytest.raises(InputError, match="duplicate"):
        parse_bfile("1 1\n1 2\n")
    with pytest.raises(InputError, match="increasing"):
        parse_bfile("3 1\n2 2\n")
    with pytest.raises(InputError):
        parse_bfile("# nothing\n")


# -- serialization -----------------------------------------------------------


def test_report_round_trip():
    doc = {
        "schema_version": "1",
        "command": "gen",
        "terms": [2**100, -3, 0],
        "nested": {"value": 10**30},
        "flag": True,
    }
    assert loads_report(dumps_report(doc)) == doc


# -- golden files for the documented invocations -----------------------------

GOLDEN_CASES = [
    ("fail_example", ["fail", "--coeffs", "12,3", "--initial", "2,25", "--horizon", "200"]),
    ("check_fibonacci", ["check", "--coeffs", "1,1", "--initial", "1,1", "--horizon", "50"]),
    ("power_order4", ["power", "--t", "4", "--coeffs", "0,10,0,-1", "--initial", "1,0,9,0", "--horizon", "6"]),
]


@pytest.mark.parametrize("name,argv", GOLDEN_CASES, ids=[c[0] for c in GOLDEN_CASES])
def test_golden_invocations(run_cli, name, argv):
    code, out = run_cli(argv)
    assert code == 0
    assert out == (HERE / "golden" / f"{name}.json").read_text()
    validate(out)


def test_golden_key_facts(run_cli):
    _, out = run_cli(GOLDEN_CASES[0][1])
    assert loads_report(out)["exact"] == 6
    _, out = run_cli(GOLDEN_CASES[1][1])
    assert 3 in [v["n"] for v in loads_report(out)["dold_violations"]]
    _, out = run_cli(GOLDEN_CASES[2][1])
    doc = loads_report(out)
    assert doc["empirical_lower"] == 6 and doc["fail"] == 6
    assert "exactness_source" in doc


# -- exit-code contract ------------------------------------------------------


def test_exit_code_zero_regardless_of_verdict(run_cli):
    code, out = run_cli(["fail", "--coeffs", "1,1", "--initial", "1,1"])
    assert code == 0
    assert loads_report(out)["fail"] == "infinity"
    validate(out)


def test_exit_code_one_on_input_error(run_cli):
    code, out = run_cli(["fail", "--coeffs", "1,x", "--initial", "1,1"])
    assert code == 1
    assert "error" in loads_report(out)
    validate(out)
    code, _ = run_cli(["fail", "--coeffs", "1,1"])
    assert code == 1
    code, _ = run_cli(["fail", "--coeffs", "1,0", "--initial", "1,1"])
    assert code == 1


def test_exit_code_one_on_unknown_flag(run_cli, capsys):
    code = __import__("doldseq.cli", fromlist=["run_command"]).run_command(["fail", "--bogus"])
    capsys.readouterr()
    assert code == 1


def test_exit_code_two_on_guard(run_cli):
    code, out = run_cli(["gen", "--coeffs", "10", "--initial", "1", "--horizon", "100", "--max-bits", "64"])
    assert code == 2
    doc = loads_report(out)
    assert doc.get("guard") is True
    validate(out)


# -- flags and input channels ------------------------------------------------


def test_flags_accepted_before_and_after_subcommand(run_cli):
    code1, out1 = run_cli(["check", "--coeffs", "1,1", "--initial", "1,3", "--horizon", "40"])
    code2, out2 = run_cli(["check", "--horizon", "40", "--coeffs", "1,1", "--initial", "1,3"])
    assert code1 == code2 == 0
    assert out1 == out2


def test_spec_file_input(run_cli, tmp_path):
    spec = tmp_path / "rec.json"
    spec.write_text(json.dumps({"coeffs": ["12", "3"], "initial": ["2", "25"]}))
    code, out = run_cli(["fail", "--spec", str(spec)])
    assert code == 0
    assert loads_report(out)["exact"] == 6


def test_human_output(run_cli):
    code, out = run_cli(["classify", "--human", "--coeffs", "12,3", "--initial", "2,25"])
    assert code == 0
    assert "order-2-irreducible" in out


def test_seed_flag_accepted(run_cli):
    code, out = run_cli(["classify", "--seed", "7", "--coeffs", "0,10,0,-1", "--initial", "0,5,0,49"])
    assert code == 0
    assert loads_report(out)["row"] == "irreducible"


# -- remaining subcommands ---------------------------------------------------


def test_gen_terms(run_cli):
    code, out = run_cli(["gen", "--coeffs", "12,3", "--initial", "2,25", "--horizon", "3"])
    assert code == 0
    assert loads_report(out)["terms"] == [2, 25, 306]
    validate(out)


def test_family_subcommand(run_cli):
    code, out = run_cli(["family", "--delta", "6"])
    assert code == 0
    doc = loads_report(out)
    assert doc["coeffs"] == [8, -7] and doc["initial"] == [6, 41]
    assert doc["report"]["empirical_lower"] % 6 == 0
    validate(out)


def test_witness_subcommand(run_cli):
    code, out = run_cli(["witness", "--coeffs", "1,1", "--initial", "1,1"])
    assert code == 0
    doc = loads_report(out)
    assert doc["status"] == "certified" and doc["witness"] == 2
    validate(out)


def test_density_subcommand(run_cli):
    code, out = run_cli(["density", "--poly", "1,0,1", "--prime-bound", "500"])
    assert code == 0
    doc = loads_report(out)
    assert 0.3 < doc["value"] < 0.7
    validate(out)
    code, _ = run_cli(["density", "--poly", "1,0,2"])
    assert code == 1


def test_bfile_check_powers_of_two(run_cli, tmp_path):
    path = tmp_path / "b.txt"
    path.write_text("".join(f"{n} {2**n}\n" for n in range(1, 61)))
    code, out = run_cli(["bfile-check", str(path), "--horizon", "60"])
    assert code == 0
    doc = loads_report(out)
    assert doc["dold_violations"] == [] and doc["sign_violations"] == []
    validate(out)


def test_bfile_check_offset_rebased_with_warning(run_cli, tmp_path):
    path = tmp_path / "b.txt"
    path.write_text("0 1\n1 2\n2 4\n")
    code, out = run_cli(["bfile-check", str(path)])
    assert code == 0
    doc = loads_report(out)
    assert doc["offset"] == 0
    assert any("re-based" in w for w in doc["warnings"])


def test_bfile_check_non_contiguous_limited(run_cli, tmp_path):
    path = tmp_path / "b.txt"
    path.write_text("1 1\n3 2\n")
    code, out = run_cli(["bfile-check", str(path)])
    assert code == 0
    doc = loads_report(out)
    assert doc["contiguous"] is False
    assert doc["horizon"] == 1
    assert any("non-contiguous" in w for w in doc["warnings"])


def test_bfile_check_missing_file(run_cli):
    code, _ = run_cli(["bfile-check", "/nonexistent/b.txt"])
    assert code == 1


def test_all_subcommand_outputs_validate(run_cli):
    invocations = [
        ["gen", "--coeffs", "1,1", "--initial", "1,3", "--horizon", "5"],
        ["check", "--coeffs", "12,3", "--initial", "2,25", "--horizon", "30"],
        ["fail", "--coeffs", "3", "--initial", "1", "--horizon", "30"],
        ["classify", "--coeffs", "8,-7", "--initial", "6,41"],
        ["power", "--t", "2", "--coeffs", "1,1", "--initial", "1,1", "--horizon", "5"],
        ["family", "--delta", "3"],
        ["witness", "--coeffs", "0,10,0,-1", "--initial", "0,5,0,49"],
        ["density", "--poly=-3,1", "--prime-bound", "300"],
    ]
    for argv in invocations:
        code, out = run_cli(argv)
        assert code == 0, argv
        validate(out)
