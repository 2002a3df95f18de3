"""Command line behaviour: exit codes, formats, determinism, config."""

import contextlib
import io
import json
import subprocess
import sys

import pytest

from dbkdom.cli import (CSV_COLUMNS, EXIT_BRACKET, EXIT_INCONCLUSIVE,
                        EXIT_INVALID, EXIT_OK, EXIT_USAGE, main)


def run_cli(*argv: str) -> tuple[int, str, str]:
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


def strip_ms(csv_text: str) -> str:
    # ms is wall clock and exempt from determinism; no other field may
    # contain a comma, so plain rsplit is safe
    return "\n".join(line.rsplit(",", 1)[0]
                     for line in csv_text.splitlines())


class TestGamma:
    def test_headline_table(self):
        code, out, _ = run_cli("gamma", "--family", "debruijn",
                               "-n", "40", "-d", "3", "-k", "3")
        assert code == EXIT_OK
        assert "gamma" in out and " 2\n" in out
        assert "witness" in out and "0;1" in out
        assert "condition congruence" in out and "yes" not in out

    def test_headline_json(self):
        code, out, _ = run_cli("gamma", "--family", "kautz",
                               "-n", "7", "-d", "2", "-k", "2",
                               "--format", "json")
        assert code == EXIT_OK
        row = json.loads(out)
        assert row["gamma"] == 2
        assert row["witness"] == [0, 1]
        assert row["method"] == "oracle"
        assert isinstance(row["ms"], int)

    def test_csv_single_row(self):
        code, out, _ = run_cli("gamma", "--family", "debruijn",
                               "-n", "7", "-d", "2", "-k", "2",
                               "--format", "csv")
        assert code == EXIT_OK
        header, row = out.splitlines()
        assert header == ",".join(CSV_COLUMNS)
        fields = row.split(",")
        assert fields[:9] == ["debruijn", "7", "2", "2", "1", "2", "1",
                              "congruence", "1"]

    def test_bracket_exit_when_oracle_disabled(self):
        code, out, _ = run_cli("gamma", "--family", "debruijn",
                               "-n", "40", "-d", "3", "-k", "3",
                               "--oracle-budget", "0", "--format", "json")
        assert code == EXIT_BRACKET
        row = json.loads(out)
        assert row["gamma"] is None
        assert row["bracket"] == [1, 2]
        assert row["method"] == "bracket"

    def test_inconclusive_exit_when_budget_exhausted(self):
        code, out, _ = run_cli("gamma", "--family", "debruijn",
                               "-n", "10", "-d", "3", "-k", "2",
                               "--oracle-budget", "1", "--format", "json")
        assert code == EXIT_INCONCLUSIVE
        assert json.loads(out)["method"] == "inconclusive"

    def test_out_file(self, tmp_path):
        target = tmp_path / "row.json"
        code, out, _ = run_cli("gamma", "--family", "debruijn",
                               "-n", "8", "-d", "2", "-k", "1",
                               "--format", "json", "--out", str(target))
        assert code == EXIT_OK
        assert out == ""
        assert json.loads(target.read_text())["n"] == 8


class TestUsageErrors:
    BAD = [
        ("gamma", "--family", "torus", "-n", "5", "-d", "2", "-k", "1"),
        ("gamma", "--family", "debruijn", "-n", "2..5", "-d", "2", "-k", "1"),
        ("gamma", "--family", "debruijn", "-n", "5", "-d", "1", "-k", "1"),
        ("gamma", "--family", "debruijn", "-n", "2", "-d", "3", "-k", "1"),
        ("gamma", "--family", "debruijn", "-n", "x", "-d", "2", "-k", "1"),
        ("sweep", "--family", "both", "-n", "5..2", "-d", "2", "-k", "1"),
        ("sweep", "--family", "both", "-n", "2..5", "-d", "2", "-k", "1",
         "--jobs", "0"),
        ("verify", "--family", "kautz", "-n", "7", "-d", "2", "-k", "1",
         "--set", "0,seven"),
        ("verify", "--family", "kautz", "-n", "7", "-d", "2", "-k", "1",
         "--set", "0,9"),
        ("problems", "--problem", "nonsense"),
        (),
    ]

    @pytest.mark.parametrize("argv", BAD, ids=lambda a: " ".join(a) or "none")
    def test_exit_two(self, argv):
        code, _, _ = run_cli(*argv)
        assert code == EXIT_USAGE

    def test_help_exits_zero(self):
        assert run_cli("--help")[0] == EXIT_OK
        assert run_cli("gamma", "--help")[0] == EXIT_OK


class TestVerify:
    def test_valid_set(self):
        code, out, _ = run_cli("verify", "--family", "kautz",
                               "-n", "7", "-d", "2", "-k", "2",
                               "--set", "0,1")
        assert code == EXIT_OK
        cert = json.loads(out)
        assert cert["valid"] is True
        assert cert["uncovered"] == []

    def test_invalid_set_reports_uncovered(self):
        code, out, _ = run_cli("verify", "--family", "debruijn",
                               "-n", "40", "-d", "3", "-k", "3",
                               "--set", "0")
        assert code == EXIT_INVALID
        cert = json.loads(out)
        assert cert["valid"] is False
        assert cert["uncovered"] == list(range(27, 40))

    def test_radius_zero_identity(self):
        everything = ",".join(map(str, range(7)))
        code, out, _ = run_cli("verify", "--family", "kautz",
                               "-n", "7", "-d", "2", "-k", "0",
                               "--set", everything)
        assert code == EXIT_OK
        assert json.loads(out)["valid"] is True

    def test_table_format(self):
        code, out, _ = run_cli("verify", "--family", "kautz",
                               "-n", "7", "-d", "2", "-k", "2",
                               "--set", "0;1", "--format", "table")
        assert code == EXIT_OK
        assert "valid" in out and "yes" in out


class TestSweep:
    ARGS = ("sweep", "--family", "both", "-n", "2..20", "-d", "2..3",
            "-k", "1..2")

    def test_csv_shape_and_order(self):
        code, out, _ = run_cli(*self.ARGS)
        assert code == EXIT_OK
        lines = out.splitlines()
        assert lines[0] == ",".join(CSV_COLUMNS)
        keys = []
        for line in lines[1:]:
            family, n, d, k = line.split(",")[:4]
            assert int(n) >= int(d)  # undefined instances skipped
            keys.append((family, int(n), int(d), int(k)))
        assert keys == sorted(keys)
        expected = 2 * sum(1 for n in range(2, 21) for d in (2, 3)
                           for _ in (1, 2) if n >= d)
        assert len(keys) == expected

    def test_rerun_is_byte_identical_modulo_ms(self):
        first = strip_ms(run_cli(*self.ARGS)[1])
        second = strip_ms(run_cli(*self.ARGS)[1])
        assert first == second

    def test_parallel_rows_match_serial(self):
        serial = strip_ms(run_cli(*self.ARGS, "--jobs", "1")[1])
        parallel = strip_ms(run_cli(*self.ARGS, "--jobs", "2")[1])
        assert serial == parallel

    def test_json_lines(self):
        code, out, _ = run_cli("sweep", "--family", "kautz",
                               "-n", "3..9", "-d", "2", "-k", "1",
                               "--format", "json")
        assert code == EXIT_OK
        rows = [json.loads(line) for line in out.splitlines()]
        assert [r["n"] for r in rows] == list(range(3, 10))
        assert all(r["gamma"] == -(-r["n"] // 3) for r in rows)
        assert all(r["method"] == "radius_one" for r in rows)

    def test_single_value_ranges(self):
        code, out, _ = run_cli("sweep", "--family", "debruijn",
                               "-n", "40", "-d", "3", "-k", "3")
        assert code == EXIT_OK
        assert len(out.splitlines()) == 2

    def test_budget_zero_brackets_exit_three(self):
        code, out, _ = run_cli("sweep", "--family", "debruijn",
                               "-n", "38..42", "-d", "3", "-k", "3",
                               "--oracle-budget", "0")
        assert code == EXIT_BRACKET
        gammas = [line.split(",")[6] for line in out.splitlines()[1:]]
        assert "" in gammas  # at least one undecided row


class TestConfig:
    def test_config_supplies_defaults(self, tmp_path):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({"oracle_budget": 0, "format": "json"}))
        code, out, _ = run_cli("gamma", "--family", "debruijn",
                               "-n", "40", "-d", "3", "-k", "3",
                               "--config", str(cfg))
        assert code == EXIT_BRACKET
        assert json.loads(out)["method"] == "bracket"

    def test_flag_overrides_config(self, tmp_path):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({"oracle_budget": 0}))
        code, out, _ = run_cli("gamma", "--family", "debruijn",
                               "-n", "40", "-d", "3", "-k", "3",
                               "--config", str(cfg),
                               "--oracle-budget", "100000",
                               "--format", "json")
        assert code == EXIT_OK
        assert json.loads(out)["gamma"] == 2

    def test_config_can_supply_ranges(self, tmp_path):
        # sweep requires explicit ranges; problems falls back to config
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({"n": "2..8", "d": 2, "k": 1}))
        code, out, _ = run_cli("problems", "--problem", "kautz-upper",
                               "--config", str(cfg), "--format", "json")
        assert code == EXIT_OK
        report = json.loads(out)
        assert report["envelope"]["n"] == list(range(2, 9))
        assert report["counts"]["consistent"] == 7

    def test_unknown_key_rejected(self, tmp_path):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({"oracle_fuel": 5}))
        code, _, err = run_cli("gamma", "--family", "debruijn",
                               "-n", "8", "-d", "2", "-k", "1",
                               "--config", str(cfg))
        assert code == EXIT_USAGE
        assert "oracle_fuel" in err

    def test_malformed_json_rejected(self, tmp_path):
        cfg = tmp_path / "cfg.json"
        cfg.write_text("{not json")
        assert run_cli("gamma", "--family", "debruijn", "-n", "8",
                       "-d", "2", "-k", "1",
                       "--config", str(cfg))[0] == EXIT_USAGE


class TestProblems:
    def test_counterexamples_found_in_small_envelope(self):
        code, out, _ = run_cli("problems", "--problem",
                               "debruijn-necessity",
                               "-n", "2..12", "-d", "2..3", "-k", "2",
                               "--format", "json")
        assert code == EXIT_INVALID
        report = json.loads(out)
        assert report["counts"]["counterexample"] >= 1
        hits = [r for r in report["rows"]
                if r["verdict"] == "counterexample"]
        assert any((r["n"], r["d"]) == (10, 3) for r in hits)
        for r in hits:
            assert r["condition"] is False
            assert r["certificate"]["valid"] is True
            assert len(r["certificate"]["set"]) == r["lower"]

    def test_radius_one_slice_all_consistent(self):
        code, out, _ = run_cli("problems", "--problem", "all",
                               "-n", "2..30", "-d", "2..3", "-k", "1",
                               "--format", "json")
        assert code == EXIT_OK
        payload = json.loads(out)
        for report in payload["reports"]:
            assert report["counts"]["counterexample"] == 0
            assert report["counts"]["inconclusive"] == 0

    def test_budget_zero_is_inconclusive_not_consistent(self):
        code, out, _ = run_cli("problems", "--problem", "kautz-upper",
                               "-n", "2..12", "-d", "2", "-k", "2",
                               "--oracle-budget", "0", "--format", "json")
        assert code == EXIT_INCONCLUSIVE
        report = json.loads(out)
        assert report["counts"]["counterexample"] == 0
        assert report["counts"]["inconclusive"] >= 1

    def test_table_format_lists_counterexamples(self):
        code, out, _ = run_cli("problems", "--problem", "kautz-upper",
                               "-n", "31", "-d", "2", "-k", "2",
                               "--format", "table")
        assert code == EXIT_INVALID
        assert "counterexample=1" in out.replace(" ", "")
        assert "set=" in out


class TestExport:
    def test_edge_list_golden(self):
        code, out, _ = run_cli("export", "--family", "debruijn",
                               "-n", "6", "-d", "3")
        assert code == EXIT_OK
        lines = out.splitlines()
        assert lines[0] == "# debruijn 6 3"
        assert lines[1:4] == ["0\t0", "0\t1", "0\t2"]
        assert len(lines) == 19

    def test_dot_output(self):
        code, out, _ = run_cli("export", "--family", "kautz",
                               "-n", "9", "-d", "2", "--format", "dot")
        assert code == EXIT_OK
        assert out.startswith("digraph kautz_9_2 {")
        assert out.rstrip().endswith("}")
        assert out.count("->") == 18

    def test_size_guard_exits_usage(self):
        code, _, err = run_cli("export", "--family", "debruijn",
                               "-n", "6000000", "-d", "2")
        assert code == EXIT_USAGE
        assert err


class TestEntryPoint:
    def test_installed_script(self):
        proc = subprocess.run(
            ["dbkdom", "gamma", "--family", "kautz", "-n", "7",
             "-d", "2", "-k", "2", "--format", "json"],
            capture_output=True, text=True)
        assert proc.returncode == EXIT_OK
        assert json.loads(proc.stdout)["gamma"] == 2

    def test_module_invocation(self):
        proc = subprocess.run(
            [sys.executable, "-m", "dbkdom.cli", "verify", "--family",
             "debruijn", "-n", "40", "-d", "3", "-k", "3", "--set", "0,1"],
            capture_output=True, text=True)
        assert proc.returncode == EXIT_OK
