import json

import pytest

from gradedpi import cli


MINIMAL = """
[group G]
kind = cyclic 2

[check gamma]
kind = permutability G
n = 2
"""


def test_parse_minimal():
    sc = cli.parse_scenario(MINIMAL)
    assert "G" in sc.groups
    assert len(sc.checks) == 1
    records = cli.run_scenario(sc)
    assert records[0].verdict == "holds"
    assert records[0].detail["2"]["P"] is True


def test_undefined_reference_is_positioned():
    text = """
[algebra A]
kind = twisted G a
"""
    with pytest.raises(cli.ParseError) as err:
        cli.parse_scenario(text)
    assert err.value.line == 2  # reported at the offending section header
    assert "undefined group" in str(err.value)


def test_unknown_kind_rejected():
    with pytest.raises(cli.ParseError):
        cli.parse_scenario("[group G]\nkind = octonion 3\n")
    with pytest.raises(cli.ParseError):
        cli.parse_scenario("[widget W]\nkind = x\n")
    with pytest.raises(cli.ParseError):
        cli.parse_scenario("[group G]\nkind cyclic\n")


def test_duplicate_sections_rejected():
    text = "[group G]\nkind = cyclic 2\n\n[group G]\nkind = cyclic 3\n"
    with pytest.raises(cli.ParseError):
        cli.parse_scenario(text)


def test_group_consistency_enforced_in_checks():
    text = """
[group G]
kind = cyclic 2

[group H]
kind = cyclic 3

[algebra A]
kind = group_algebra H

[check bad]
kind = corollary2 G A
"""
    with pytest.raises(cli.ParseError):
        cli.parse_scenario(text)


def _strip_times(payload: str):
    data = json.loads(payload)
    for r in data["records"]:
        r.pop("wall_time_s")
    return data


def test_a4_scenario_golden():
    sc = cli.parse_scenario(cli.load_builtin_scenario("a4.scenario"))
    records = cli.run_scenario(sc)
    assert len(records) == 7
    assert all(r.verdict == "holds" for r in records)
    by_check = {r.check: r for r in records}
    inv = by_check["invariants_fa4"].detail
    assert inv["wedderburn_degrees"] == [1, 1, 1, 3]
    assert inv["exponent"] == 9
    inv_t = by_check["invariants_ta4"].detail
    assert inv_t["wedderburn_degrees"] == [2, 2, 2]
    assert by_check["corollary2_ta4"].lhs == 9
    assert by_check["corollary2_ta4"].rhs == 16
    assert by_check["corollary_pid_ta4"].lhs == 6
    assert by_check["corollary_pid_ta4"].rhs == 18
    assert by_check["main_bound_fa4"].lhs == 3
    assert by_check["main_bound_fa4"].rhs == 81


def test_heisenberg_scenario_golden():
    sc = cli.parse_scenario(cli.load_builtin_scenario("heisenberg.scenario"))
    records = cli.run_scenario(sc)
    assert all(r.verdict == "holds" for r in records)


def test_round_trip_shipped_scenarios():
    for name in cli.builtin_scenarios():
        text = cli.load_builtin_scenario(name)
        sc = cli.parse_scenario(text)
        printed = cli.print_scenario(sc)
        sc2 = cli.parse_scenario(printed)
        assert cli.print_scenario(sc2) == printed


def test_determinism_modulo_wall_time():
    sc = cli.parse_scenario(cli.load_builtin_scenario("heisenberg.scenario"))
    a = cli.emit_report(cli.run_scenario(sc), "json", "x")
    b = cli.emit_report(cli.run_scenario(sc), "json", "x")
    assert _strip_times(a) == _strip_times(b)


def test_threaded_run_matches_sequential():
    sc = cli.parse_scenario(cli.load_builtin_scenario("heisenberg.scenario"))
    seq = cli.emit_report(cli.run_scenario(sc, threads=1), "json", "x")
    par = cli.emit_report(cli.run_scenario(sc, threads=4), "json", "x")
    assert _strip_times(seq) == _strip_times(par)


def test_failing_synthetic_check():
    text = """
[group G]
kind = symmetric 3

[algebra A]
kind = group_algebra G

[check too_tight]
kind = main_bound G A
k = 0
"""
    sc = cli.parse_scenario(text)
    records = cli.run_scenario(sc)
    (r,) = records
    assert r.verdict == "fails"
    assert r.lhs == 2 and r.rhs == 1  # gamma(S3) = 2 > exp^0 = 1


def test_budget_abort_is_skipped_never_holds():
    text = """
[group G]
kind = cyclic 2

[algebra A]
kind = group_algebra G

[check inv]
kind = invariants A
codimensions = 3
"""
    sc = cli.parse_scenario(text)
    records = cli.run_scenario(sc, budget=1)
    (r,) = records
    assert r.verdict == "skipped:budget"


def test_error_verdict_for_broken_check():
    text = """
[group G]
kind = symmetric 3

[algebra U]
kind = ut_full G
tuple = 0 1

[check pid]
kind = corollary_pid G U
"""
    sc = cli.parse_scenario(text)
    (r,) = cli.run_scenario(sc)
    assert r.verdict == "error"  # UT2 is not semisimple


def test_emit_empty_report():
    payload = cli.emit_report([], "json", "empty")
    data = json.loads(payload)
    assert data["schema"] == cli.REPORT_SCHEMA
    assert data["records"] == []
    text = cli.emit_report([], "text", "empty")
    assert "0 checks" in text or "0 failing" in text


def test_main_exit_codes(tmp_path, capsys):
    good = tmp_path / "ok.scenario"
    good.write_text(MINIMAL)
    assert cli.main(["run", str(good)]) == 0
    capsys.readouterr()
    assert cli.main(["validate", str(good)]) == 0
    capsys.readouterr()
    bad = tmp_path / "bad.scenario"
    bad.write_text("[algebra A]\nkind = twisted G a\n")
    assert cli.main(["validate", str(bad)]) == 2
    capsys.readouterr()
    failing = tmp_path / "fail.scenario"
    failing.write_text("""
[group G]
kind = symmetric 3

[algebra A]
kind = group_algebra G

[check too_tight]
kind = main_bound G A
k = 0
""")
    assert cli.main(["--format", "json", "run", str(failing)]) == 1
    out = capsys.readouterr().out
    data = json.loads(out)
    assert data["records"][0]["verdict"] == "fails"
    assert cli.main(["catalog"]) == 0
    capsys.readouterr()


def test_gsimple_and_table_sections(tmp_path):
    text = """
[group G]
kind = from_table
row = 0 1
row = 1 0
labels = e g

[subgroup H]
group = G
generators = 1

[cocycle t]
kind = trivial 1
group = G

[algebra A]
kind = gsimple G H t
tuple = 0

[check gr]
kind = grading A
"""
    sc = cli.parse_scenario(text)
    (r,) = cli.run_scenario(sc)
    assert r.verdict == "holds"
    assert r.detail["coset_condition"] is True


def test_degenerate_gsimple_reports_witness():
    text = """
[group G]
kind = cyclic 3

[subgroup H]
group = G
members = 0

[cocycle t]
kind = trivial 1
group = H

[algebra A]
kind = gsimple G H t
tuple = 0 1

[check gr]
kind = grading A
"""
    sc = cli.parse_scenario(text)
    (r,) = cli.run_scenario(sc)
    assert r.verdict == "holds"
    assert r.detail["strong"] is False
    assert r.detail["coset_condition"] is False
    assert r.witness == [2, 2]
