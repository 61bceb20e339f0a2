import json

import pytest
from gmpy2 import mpq

from mzstar import cli
from mzstar.cli import main
from mzstar.exact_core import PiValue
from mzstar.index_parser import parse_index
from mzstar.oracle import NumericConfig, decimal_str


def run(capsys, *argv):
    rc = main(list(argv))
    out = capsys.readouterr()
    return rc, out.out, out.err


def run_json(capsys, *argv):
    rc, out, err = run(capsys, *argv, "--json")
    return rc, json.loads(out), err


class TestEval:
    def test_31_pair(self, capsys):
        rc, doc, _ = run_json(capsys, "eval", "{3,1}^1")
        assert rc == 0
        assert doc["schema"] == 1
        assert doc["family"] == "31"
        assert doc["pi_power"] == 4
        assert (doc["numerator"], doc["denominator"]) == ("1", "72")
        assert doc["formula"] == "zeta_star_31_pow"
        assert doc["decimal"].startswith("1.35290404213892273")

    def test_empty_index(self, capsys):
        rc, doc, _ = run_json(capsys, "eval", "")
        assert rc == 0
        assert doc["pi_power"] == 0
        assert (doc["numerator"], doc["denominator"]) == ("1", "1")

    def test_twos(self, capsys):
        rc, doc, _ = run_json(capsys, "eval", "{2}^3")
        assert rc == 0
        assert (doc["numerator"], doc["denominator"]) == ("31", "15120")
        rc, doc, _ = run_json(capsys, "eval", "{2}^3", "--nostar")
        assert rc == 0
        assert (doc["numerator"], doc["denominator"]) == ("1", "5040")

    def test_index_is_canonical(self, capsys):
        rc, doc, _ = run_json(capsys, "eval", " { 3 , 1 } ^ 2 ")
        assert rc == 0
        assert doc["index"] == "3,1,3,1"
        assert parse_index(doc["index"]) == [3, 1, 3, 1]

    def test_formula_routes_agree(self, capsys):
        def value(*argv):
            rc, doc, _ = run_json(capsys, "eval", *argv)
            assert rc == 0
            return doc["numerator"], doc["denominator"], doc["pi_power"]

        base = value("{3,1}^2")
        for formula in ("t4", "muneta", "t7", "bell"):
            assert value("{3,1}^2", "--formula", formula) == base

        tail = value("3,1,2")
        for formula in ("t7", "bell"):
            assert value("3,1,2", "--formula", formula) == tail

        block = value("2,3,2,1")
        assert value("2,3,2,1", "--formula", "t7") == block
        assert value("2,2,3,2,2,1,2,2,2",
                     "--formula", "t7") == value("2,2,3,2,2,1,2,2,2")

    def test_formula_names_report_route(self, capsys):
        _, doc, _ = run_json(capsys, "eval", "3,1,2", "--formula", "t7")
        assert doc["formula"] == "t7_tail"
        _, doc, _ = run_json(capsys, "eval", "2,3,2,1")
        assert doc["formula"] == "bell_plain"

    def test_decimal_reproducible_at_128_bits(self, capsys):
        for index in ("{3,1}^2", "{2}^4", "3,1,2", "2,3,2,1"):
            rc, doc, _ = run_json(capsys, "eval", index)
            assert rc == 0
            pv = PiValue(mpq(int(doc["numerator"]), int(doc["denominator"])),
                         doc["pi_power"])
            redone = decimal_str(pv, NumericConfig(precision_bits=128))
            assert redone == doc["decimal"], index

    def test_human_output(self, capsys):
        rc, out, _ = run(capsys, "eval", "{3,1}^1")
        assert rc == 0
        assert "family: 31" in out
        assert "exact: 1/72 * pi^4" in out

    def test_syntax_error_exit_2(self, capsys):
        rc, _, err = run(capsys, "eval", "{3,1")
        assert rc == 2
        assert "position" in err

    def test_unsupported_family_exit_3(self, capsys):
        for index in ("4,5", "3,2", "1,2"):
            rc, _, err = run(capsys, "eval", index)
            assert rc == 3
            assert "oracle" in err

    def test_unsupported_combo_exit_3(self, capsys):
        rc, _, _ = run(capsys, "eval", "3,1,2", "--formula", "muneta")
        assert rc == 3
        rc, _, _ = run(capsys, "eval", "2,3,2,1", "--nostar")
        assert rc == 3
        rc, _, _ = run(capsys, "eval", "{2}^2", "--formula", "t4")
        assert rc == 3

    def test_conflicting_flags_exit_2(self, capsys):
        rc, _, _ = run(capsys, "eval", "{3,1}^1", "--formula", "t4",
                       "--nostar")
        assert rc == 2

    def test_bad_prec_exit_2(self, capsys):
        rc, _, _ = run(capsys, "eval", "{3,1}^1", "--prec", "32")
        assert rc == 2

    def test_unknown_flag_exit_2(self, capsys):
        rc, _, _ = run(capsys, "eval", "{3,1}^1", "--frobnicate")
        assert rc == 2


class TestSum:
    def test_examples(self, capsys):
        rc, doc, _ = run_json(capsys, "sum", "Z", "--d", "1", "--n", "0")
        assert rc == 0
        assert (doc["numerator"], doc["denominator"]) == ("1", "72")
        assert doc["pi_power"] == 4
        rc, doc, _ = run_json(capsys, "sum", "Z1", "--d", "1", "--n", "0")
        assert rc == 0
        assert doc["numerator"] == "0"
        rc, doc, _ = run_json(capsys, "sum", "Z0", "--d", "1", "--n", "0")
        assert rc == 0
        assert (doc["numerator"], doc["denominator"]) == ("1", "72")

    def test_split_consistency(self, capsys):
        _, z, _ = run_json(capsys, "sum", "Z", "--d", "2", "--n", "3")
        _, z0, _ = run_json(capsys, "sum", "Z0", "--d", "2", "--n", "3")
        _, z1, _ = run_json(capsys, "sum", "Z1", "--d", "2", "--n", "3")
        total = mpq(int(z0["numerator"]), int(z0["denominator"])) \
            + mpq(int(z1["numerator"]), int(z1["denominator"]))
        assert total == mpq(int(z["numerator"]), int(z["denominator"]))

    def test_d0_redirects_with_notice(self, capsys):
        rc, out, err = run(capsys, "sum", "Z0", "--d", "0", "--n", "2",
                           "--json")
        doc = json.loads(out)
        assert rc == 0
        assert "zeta_star_2_pow" in err
        assert doc["formula"] == "zeta_star_2_pow"
        assert (doc["numerator"], doc["denominator"]) == ("7", "360")

    def test_nostar_bowman_bradley(self, capsys):
        rc, doc, _ = run_json(capsys, "sum", "Z", "--d", "1", "--n", "0",
                              "--nostar")
        assert rc == 0
        assert doc["formula"] == "bowman_bradley_Z"
        assert (doc["numerator"], doc["denominator"]) == ("1", "360")

    def test_nostar_limited_to_Z(self, capsys):
        for kind in ("Z0", "Z1"):
            rc, _, err = run(capsys, "sum", kind, "--d", "1", "--n", "0",
                             "--nostar")
            assert rc == 2
            assert "kind Z" in err

    def test_bad_kind_and_bounds(self, capsys):
        rc, _, _ = run(capsys, "sum", "Z9", "--d", "1", "--n", "0")
        assert rc == 2
        rc, _, _ = run(capsys, "sum", "Z", "--d", "-1", "--n", "0")
        assert rc == 2


class TestCrosscheck:
    @pytest.mark.parametrize("suite,bounds", [
        ("t4-muneta", ["--max-d", "6"]),
        ("t11-yamamoto", ["--max-d", "2", "--max-n", "2"]),
        ("t7-bell", ["--max-d", "1", "--max-m", "1"]),
        ("eq08", ["--max-d", "2", "--max-n", "2"]),
        ("in4", ["--max-d", "4"]),
        ("t3-series", ["--max-d", "4"]),
    ])
    def test_suites_pass(self, capsys, suite, bounds):
        rc, doc, _ = run_json(capsys, "crosscheck", suite, *bounds)
        assert rc == 0
        assert doc["schema"] == 1
        assert doc["suite"] == suite
        assert doc["mismatch_count"] == 0
        assert doc["cases"]
        assert all(case["equal"] for case in doc["cases"])

    def test_human_verdict_lines(self, capsys):
        rc, out, _ = run(capsys, "crosscheck", "t4-muneta", "--max-d", "3")
        assert rc == 0
        assert out.count("ok") == 4
        assert "0 mismatch(es)" in out

    def test_mismatch_exits_4(self, capsys, monkeypatch):
        def broken(max_d, max_n, max_m):
            yield {"d": 0}, PiValue(mpq(1), 0), PiValue(mpq(2), 0)
        monkeypatch.setitem(cli._SUITES, "t4-muneta", (broken, {}))
        rc, out, _ = run(capsys, "crosscheck", "t4-muneta")
        assert rc == 4
        assert "MISMATCH" in out

    def test_unknown_suite_exit_2(self, capsys):
        rc, _, _ = run(capsys, "crosscheck", "nope")
        assert rc == 2


class TestBench:
    def test_rows(self, capsys):
        rc, doc, _ = run_json(capsys, "bench", "--formula", "t4",
                              "--formula", "muneta", "--d", "16",
                              "--d", "32", "--repeat", "2")
        assert rc == 0
        rows = doc["rows"]
        assert len(rows) == 4
        for row in rows:
            assert row["mean"] >= 0.0
            assert row["stddev"] >= 0.0
            assert row["repeat"] == 2
        assert {row["formula"] for row in rows} == {"t4", "muneta"}

    def test_single_repeat_no_warmup(self, capsys):
        rc, doc, _ = run_json(capsys, "bench", "--d", "8", "--repeat", "1",
                              "--no-warmup")
        assert rc == 0
        assert doc["rows"][0]["stddev"] == 0.0

    def test_bad_repeat(self, capsys):
        rc, _, _ = run(capsys, "bench", "--repeat", "0")
        assert rc == 2


class TestOracle:
    def test_basel(self, capsys):
        rc, doc, _ = run_json(capsys, "oracle", "2", "--K", "100000",
                              "--prec", "128")
        assert rc == 0
        # the value is the truncated sum; the missing mass sits inside
        # tail_estimate (about 1/K here)
        basel = 1.6449340668482264
        gap = basel - float(doc["value"])
        assert 0 < gap <= 2 * float(doc["tail_estimate"])
        assert doc["value"].startswith("1.64492")
        assert doc["precision_bits"] == 128
        assert doc["K"] == 100000

    def test_alternating(self, capsys):
        rc, doc, _ = run_json(capsys, "oracle", "-2", "--K", "1000")
        assert rc == 0
        assert doc["value"].startswith("-0.8224")

    def test_star_flag(self, capsys):
        _, star, _ = run_json(capsys, "oracle", "2,2", "--K", "2000")
        _, plain, _ = run_json(capsys, "oracle", "2,2", "--K", "2000",
                               "--nostar")
        assert star["star"] is True and plain["star"] is False
        assert float(star["value"]) > float(plain["value"])

    def test_divergent_exit_5(self, capsys):
        rc, _, err = run(capsys, "oracle", "1,2")
        assert rc == 5
        assert "diverges" in err

    def test_bad_K_exit_2(self, capsys):
        rc, _, _ = run(capsys, "oracle", "2", "--K", "5")
        assert rc == 2


class TestTables:
    def test_bernoulli_rows(self, capsys):
        rc, doc, _ = run_json(capsys, "bernoulli", "--max", "12")
        assert rc == 0
        rows = {row["k"]: (row["numerator"], row["denominator"])
                for row in doc["rows"]}
        assert rows[0] == ("1", "1")
        assert rows[1] == ("-1", "2")
        assert rows[3] == ("0", "1")
        assert rows[12] == ("-691", "2730")

    def test_series_tanhcot(self, capsys):
        rc, doc, _ = run_json(capsys, "series", "tanhcot", "--terms", "10")
        assert rc == 0
        assert doc["schema"] == 1
        assert "pi^n" in doc["grading"]
        q = {row["n"]: (row["numerator"], row["denominator"])
             for row in doc["coefficients"]}
        assert q[4] == ("1", "72")
        for n in (1, 3, 5, 7, 9):
            assert q[n] == ("0", "1")

    def test_series_zstar_rows(self, capsys):
        _, doc, _ = run_json(capsys, "series", "zstar2", "--terms", "4")
        q = {row["n"]: (row["numerator"], row["denominator"])
             for row in doc["coefficients"]}
        assert q[0] == ("1", "1")
        assert q[2] == ("1", "6")
        assert q[4] == ("7", "360")
        _, doc, _ = run_json(capsys, "series", "zstar4", "--terms", "8")
        q = {row["n"]: (row["numerator"], row["denominator"])
             for row in doc["coefficients"]}
        assert q[4] == ("1", "90")
        assert q[8] == ("13", "113400")


class TestTopLevel:
    def test_help_exits_0(self, capsys):
        assert run(capsys, "--help")[0] == 0

    def test_unknown_command_exit_2(self, capsys):
        assert run(capsys, "frobnicate")[0] == 2
