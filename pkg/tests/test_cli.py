import json

import pytest

from numsem import UsageError
from numsem.cli import Report, execute, main, parse, render

import data


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse_info():
    cmd = parse(["info", "13,19,24,44,49,54,55,59,60,66"])
    assert cmd.verb == "info"
    assert cmd.gens == list(data.E13)


def test_parse_search_flags():
    cmd = parse(["search", "--e-range", "10..12", "--v-offset", "3"])
    assert cmd.verb == "search"
    assert cmd.flags["e_range"] == "10..12"
    assert cmd.flags["v_offset"] == 3


def test_parse_bad_input_is_still_parsed():
    cmd = parse(["info", "4,6"])
    assert cmd.gens == [4, 6]
    report = execute(cmd)
    assert report.exit_code == 1
    assert report.payload["error"] == "GcdNotOne"


def test_parse_usage_errors():
    with pytest.raises(UsageError):
        parse([])
    with pytest.raises(UsageError):
        parse(["frobnicate", "2,3"])
    with pytest.raises(UsageError):
        parse(["info"])
    with pytest.raises(UsageError):
        parse(["info", "2,3", "--workers"])
    with pytest.raises(UsageError):
        parse(["info", "2,3", "--no-such-flag", "1"])
    with pytest.raises(UsageError):
        parse(["check", "bogus", "2,3"])
    with pytest.raises(UsageError):
        parse(["info", "2,3", "--format", "csv"])  # csv is search-only


def test_info_text_output(capsys, e13):
    code, out, err = run(["info", ",".join(map(str, data.E13))], capsys)
    assert code == 0
    assert "hilbert.arrow: [1,10,9,11,12,13->]" in out
    assert "d_sets.2: 44,49,54,59" in out
    assert "classification.symmetric: false" in out


def test_info_json_round_trip(capsys):
    code, out, err = run(
        ["info", ",".join(map(str, data.E13)), "--format", "json"], capsys
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["exit_code"] == 0
    payload = doc["payload"]
    assert payload["e"] == 13
    assert payload["hilbert"]["values"] == [1, 10, 9, 11, 12, 13]
    assert payload["d_sets"]["2"] == [44, 49, 54, 59]
    assert payload["classification"]["sp_params"]["p"] == 6
    # byte-identical re-render from the parsed payload
    report = Report(payload, doc["warnings"], doc["exit_code"])
    assert render(report, "json") == out


def test_check_exit_codes(capsys):
    gens = ",".join(map(str, data.E13))
    code, out, _ = run(["check", "offset-3", gens], capsys)
    assert code == 0
    code, out, _ = run(["check", "offset-4", gens], capsys)
    assert code == 2
    code, out, _ = run(["check", "chain", gens], capsys)
    assert code == 2
    code, out, _ = run(["check", "c3", ",".join(map(str, data.AP24_E17_B))], capsys)
    assert code == 2  # |Ap_2| = 4 fails the hypothesis
    code, out, _ = run(["check", "symmetric", "3,4"], capsys)
    assert code == 0 and "symmetric: true" in out
    code, out, _ = run(["check", "delta", gens], capsys)
    assert code == 0 and "ok: true" in out
    code, out, _ = run(["check", "cm", "5,6,7"], capsys)
    assert code == 0 and "tangent_cone_cm: true" in out


def test_check_family_member(capsys):
    gens = ",".join(map(str, data.SP_FAMILY[1][1]))
    code, out, _ = run(["check", "offset-3", gens], capsys)
    assert code == 0
    assert "decreasing: true" in out
    assert "consistent: true" in out


def test_validation_error_exit(capsys):
    code, out, err = run(["info", "4,6"], capsys)
    assert code == 1
    assert "GcdNotOne" in out


def test_usage_error_exit(capsys):
    code, out, err = run(["info"], capsys)
    assert code == 1
    assert "usage" in err


def test_residue_table_verb(capsys):
    code, out, _ = run(["residue-table", "13"], capsys)
    assert code == 0
    assert "admissible_h: 4,10" in out


def test_construct_sp_verb(capsys):
    code, out, _ = run(
        ["construct-sp", "--p", "6", "--k", "1", "--kprime", "0"], capsys
    )
    assert code == 0
    assert "generators: 13,19,24,44,49,54,55,59,60,66" in out
    code, out, _ = run(
        ["construct-sp", "--p", "1", "--k", "1", "--kprime", "5"], capsys
    )
    assert code == 1  # k' beyond the family constraint


def test_search_csv_determinism(capsys):
    argv = ["search", "--e-range", "13..13", "--v-offset", "3",
            "--gen-bound", "4e", "--format", "csv"]
    code1, out1, _ = run(argv + ["--workers", "1"], capsys)
    code2, out2, _ = run(argv + ["--workers", "2"], capsys)
    assert code1 == code2 == 0
    assert out1 == out2
    assert out1.startswith("e,v,generators,hilbert,decreasing_levels\n")


def test_search_empty_csv(capsys):
    code, out, _ = run(
        ["search", "--e-range", "10..11", "--v-offset", "3", "--gen-bound", "20e",
         "--format", "csv"], capsys
    )
    assert code == 0
    assert out == "e,v,generators,hilbert,decreasing_levels\n"


def test_seed_flag_accepted_and_echoed(capsys):
    code, out, _ = run(["hilbert", "2,3", "--seed", "7"], capsys)
    assert code == 0
    assert "seed: 7" in out
    code, out, _ = run(["hilbert", "2,3", "--seed", "7", "--format", "json"], capsys)
    assert json.loads(out)["payload"]["seed"] == 7


def test_strata_max_level_flag(capsys):
    gens = ",".join(map(str, data.E13))
    code, out, _ = run(["strata", gens, "--max-level", "3"], capsys)
    assert code == 0
    assert "c_sets.3: 57,62,67,72" in out
    assert "c_sets.4" not in out
    assert "d_sets.4" not in out
