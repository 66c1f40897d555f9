"""Command-line interface: exit codes, formats, determinism."""

import io
import json
import math
from contextlib import redirect_stderr, redirect_stdout
from fractions import Fraction

import pytest

from cuspcensus.cli import main


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(argv)
    return code, out.getvalue(), err.getvalue()


def test_count_human_table():
    code, out, _ = run(["count", "--t", "7", "--D", "1"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split() == ["t", "D", "n", "count", "source"]
    counts = [line.split()[3] for line in lines[1:]]
    assert counts == ["1", "21", "35", "7"]


def test_count_csv_exact():
    code, out, _ = run(["count", "--t", "7", "--D", "1", "--format", "csv"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "t,D,n,count,source"
    assert lines[1:] == [
        "7,1,0,1,dp", "7,1,1,21,dp", "7,1,2,35,dp", "7,1,3,7,dp",
    ]


def test_count_json_lines_round_trip():
    code, out, _ = run(
        ["count", "--t", "40", "--D", "1", "--n", "20", "--format", "json-lines"]
    )
    assert code == 0
    (rec,) = [json.loads(line) for line in out.splitlines()]
    assert isinstance(rec["count"], str)
    assert int(rec["count"]) == math.comb(40, 40)


def test_count_range():
    code, out, _ = run(
        ["count", "--t", "1", "--t-max", "4", "--D", "2", "--format", "json-lines"]
    )
    assert code == 0
    recs = [json.loads(line) for line in out.splitlines()]
    assert [r["t"] for r in recs] == [1, 2, 3, 3, 4, 4]
    by_t = {}
    for r in recs:
        by_t[r["t"]] = by_t.get(r["t"], 0) + int(r["count"])
    assert by_t == {1: 1, 2: 2, 3: 4, 4: 8}


def test_alpha_encloses_golden_ratio():
    code, out, _ = run(["alpha", "--D", "2", "--digits", "12", "--format", "json-lines"])
    assert code == 0
    rec = json.loads(out)
    assert rec["lo"] == "1.618033988749"
    assert rec["hi"] == "1.618033988750"
    assert rec["digits"] == 12
    golden = (1 + Fraction(math.isqrt(5 * 10**40), 10**20)) / 2
    assert Fraction(rec["lo"]) < golden < Fraction(rec["hi"])


def test_constants_depth_one_exact():
    code, out, _ = run(
        ["constants", "--D", "2", "--n", "3", "--format", "json-lines"]
    )
    assert code == 0
    recs = {r["kind"]: r for r in map(json.loads, out.splitlines())}
    assert Fraction(recs["depth_one_limit"]["lo"]) == Fraction(1, 720)
    assert recs["coefficient_d"]["lo"] == "0.723606797749"
    assert recs["coefficient_d"]["hi"] == "0.723606797750"


def test_table1_families():
    code, out, _ = run(["table1", "--t", "8", "--D", "2", "--format", "json-lines"])
    assert code == 0
    recs = [json.loads(line) for line in out.splitlines()]
    assert [r["family"] for r in recs] == [
        "all", "low_lying", "depth_one", "depth_one", "depth_one", "two_excursions",
    ]
    assert recs[0]["exact"] == "128"
    assert recs[0]["approx"] is None
    assert recs[1]["approx_digits"] == 12


def test_bounds_sandwich_rendered_outward():
    code, out, _ = run(
        ["bounds", "--t", "10", "--t-max", "14", "--D", "2", "--format", "json-lines"]
    )
    assert code == 0
    for rec in map(json.loads, out.splitlines()):
        assert rec["ok"] == "true"
        assert Fraction(rec["lower"]) <= int(rec["count"]) <= Fraction(rec["upper"])


def test_enumerate_order_and_words():
    code, out, _ = run(["enumerate", "--t", "3", "--format", "json-lines"])
    assert code == 0
    recs = [json.loads(line) for line in out.splitlines()]
    assert [r["parts"] for r in recs] == ["1+1+1", "2+1", "1+2", "3"]
    assert recs[1]["eps"] == "++-"
    assert recs[1]["word"] == "ababaBabaBaB"


def test_enumerate_filter():
    code, out, _ = run(
        ["enumerate", "--t", "6", "--n", "2", "--D", "2", "--format", "csv"]
    )
    assert code == 0
    rows = out.splitlines()[1:]
    assert all(
        sum(1 for p in r.split(",")[2].split("+") if int(p) > 2) == 2 for r in rows
    )
    from cuspcensus.compositions import count_exact_excursions

    assert len(rows) == count_exact_excursions(6, 2, 2)


def test_verify_single_suite_exit_zero():
    code, out, _ = run(["verify", "--suite", "thm34"])
    assert code == 0
    assert " FAIL " not in out
    assert "final_relative_error" in out


def test_verify_failing_tolerance_exit_one():
    code, out, _ = run(["verify", "--suite", "thm34", "--tolerance", "1/100000"])
    assert code == 1
    assert "FAIL" in out


def test_verify_json_records_carry_comparison():
    code, out, _ = run(["verify", "--suite", "lemma33", "--format", "json-lines"])
    assert code == 0
    recs = [json.loads(line) for line in out.splitlines()]
    assert any(r["comparison"] == "within-relative" for r in recs)
    assert all(r["status"] == "pass" for r in recs)


def test_usage_errors_exit_two():
    for argv in (
        ["count", "--D", "2"],
        ["count", "--t", "0", "--D", "1"],
        ["alpha", "--D", "1"],
        ["bounds", "--D", "2"],
        ["verify", "--suite", "thm32", "--tolerance", "junk"],
    ):
        code, _, err = run(argv)
        assert code == 2, argv
        assert err.startswith("error:"), argv


def test_unknown_flag_exits_two():
    with pytest.raises(SystemExit) as exc:
        run(["count", "--t", "5", "--D", "1", "--bogus"])
    assert exc.value.code == 2


def test_unknown_suite_exits_two():
    with pytest.raises(SystemExit) as exc:
        run(["verify", "--suite", "nope"])
    assert exc.value.code == 2


def test_byte_identical_repeats():
    argv = ["count", "--t", "1", "--t-max", "30", "--D", "3", "--format", "json-lines"]
    outs = {run(argv)[1] for _ in range(3)}
    assert len(outs) == 1


def test_thread_count_does_not_change_output():
    base = ["verify", "--suite", "partition", "--oracle-max-t", "10",
            "--format", "csv"]
    _, out1, _ = run(base + ["--threads", "1"])
    _, out3, _ = run(base + ["--threads", "3"])
    assert out1 == out3


def test_out_file(tmp_path):
    target = tmp_path / "rows.csv"
    code, out, _ = run(
        ["count", "--t", "9", "--D", "2", "--format", "csv", "--out", str(target)]
    )
    assert code == 0
    assert out == ""
    lines = target.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "t,D,n,count,source"
    assert sum(int(line.split(",")[3]) for line in lines[1:]) == 2**8
