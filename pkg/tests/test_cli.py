"""CLI behavior: formats, exit codes, cache handling, byte stability."""
import io
import json

from stirlab.cli import main
from stirlab.identities import REGISTRY, IdentityCheck


def run_cli(*argv: str) -> tuple[int, str]:
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


class TestEnumerate:
    def test_stirling_plain(self):
        code, out = run_cli("enumerate", "--class", "stirling", "--n", "2")
        assert code == 0
        assert out == "1122\n1221\n2211\n"

    def test_stirling_order_one(self):
        assert run_cli("enumerate", "--class", "stirling", "--n", "1")[1] == "11\n"

    def test_signed_plain(self):
        code, out = run_cli("enumerate", "--class", "signed", "--n", "1")
        assert out == "1\n-1\n"

    def test_matching_line_count(self):
        code, out = run_cli("enumerate", "--class", "matching", "--n", "2")
        assert code == 0
        assert len(out.splitlines()) == 3

    def test_json_stream(self):
        _, out = run_cli("--format", "json", "enumerate", "--class", "stirling",
                         "--n", "2")
        rows = [json.loads(line) for line in out.splitlines()]
        assert rows[0] == [1, 1, 2, 2]

    def test_csv_matching(self):
        _, out = run_cli("--format", "csv", "enumerate", "--class", "matching",
                         "--n", "2")
        assert out.splitlines()[0] == "1:2,3:4"

    def test_bound_violation_exits_2(self):
        code, _ = run_cli("enumerate", "--class", "stirling", "--n", "9")
        assert code == 2

    def test_bound_can_be_raised(self):
        code, out = run_cli("--bound", "9", "enumerate", "--class", "permutation",
                            "--n", "9")
        assert code == 0 and len(out.splitlines()) == 362880


class TestStats:
    def test_fap_table(self):
        code, out = run_cli("stats", "--class", "stirling", "--n", "2",
                            "--stats", "fap")
        assert code == 0
        assert out == "fap\tcount\n1\t1\n2\t1\n3\t1\n"

    def test_signed_fdes(self):
        _, out = run_cli("stats", "--class", "signed", "--n", "1",
                         "--stats", "fdes")
        assert out == "fdes\tcount\n0\t1\n1\t1\n"

    def test_joint_csv_row_major(self):
        _, out = run_cli("--format", "csv", "stats", "--class", "stirling",
                         "--n", "2", "--stats", "lap,dasc,dp")
        lines = out.splitlines()
        assert lines[0] == "lap,dasc,dp,count"
        values = [tuple(map(int, row.split(",")[:3])) for row in lines[1:]]
        assert values == sorted(values)

    def test_json(self):
        _, out = run_cli("--format", "json", "stats", "--class", "stirling",
                         "--n", "3", "--stats", "lap,dasc,dp")
        obj = json.loads(out)
        assert obj["n"] == 3 and obj["stats"] == ["lap", "dasc", "dp"]
        assert sum(e["count"] for e in obj["entries"]) == 15

    def test_unknown_stat_exits_2(self):
        assert run_cli("stats", "--class", "stirling", "--n", "2",
                       "--stats", "bogus")[0] == 2


class TestPoly:
    def test_t2(self, tmp_path):
        code, out = run_cli("--cache-dir", str(tmp_path), "poly", "--name", "T",
                            "--n", "2")
        assert code == 0 and out == "x + x^2 + x^3\n"

    def test_g3(self, tmp_path):
        _, out = run_cli("--cache-dir", str(tmp_path), "poly", "--name", "G",
                         "--n", "3")
        assert out == "2*x^2 + x*y^2 + 4*x^2*y + x^3\n"

    def test_n0(self):
        assert run_cli("poly", "--name", "N", "--n", "0")[1] == "1\n"

    def test_json_schema(self, tmp_path):
        _, out = run_cli("--format", "json", "poly", "--name", "A", "--n", "3")
        assert json.loads(out) == {"var": "x", "coeffs": ["1", "4", "1"]}
        _, out = run_cli("--cache-dir", str(tmp_path), "--format", "json",
                         "poly", "--name", "P", "--n", "2")
        terms = json.loads(out)
        assert {"e": [1, 1, 0], "c": "1"} in terms

    def test_cache_files_written(self, tmp_path):
        run_cli("--cache-dir", str(tmp_path), "poly", "--name", "P", "--n", "3")
        assert (tmp_path / "p-3.json").exists()

    def test_cache_env_var(self, tmp_path, monkeypatch):
        monkeypatch.setenv("STIRLAB_CACHE", str(tmp_path / "envcache"))
        run_cli("poly", "--name", "T", "--n", "2")
        assert (tmp_path / "envcache" / "t-2.json").exists()


class TestGrammar:
    def test_derivative_from_rule_file(self, tmp_path):
        rules = tmp_path / "flag.rules"
        rules.write_text("x -> x*y*z\ny -> y*z^2\nz -> y^2*z\n")
        code, out = run_cli("grammar", "--rules", str(rules), "--start", "x*y",
                            "--order", "1")
        assert code == 0 and out == "x*y*z^2 + x*y^2*z\n"

    def test_order_zero(self, tmp_path):
        rules = tmp_path / "uvw.rules"
        rules.write_text("u -> u*v*w; v -> 2*u*w; w -> u*w\n")
        assert run_cli("grammar", "--rules", str(rules), "--start", "w",
                       "--order", "0")[1] == "w\n"

    def test_refined_second_derivative(self, tmp_path):
        rules = tmp_path / "refined.rules"
        rules.write_text(
            "x -> x*z*q; y -> y*z*p; z -> x*y*z; p -> x*y*z; q -> x*y*z\n"
        )
        _, out = run_cli("grammar", "--rules", str(rules), "--start", "z",
                         "--order", "2")
        assert out == "p*x*y*z^2 + q*x*y*z^2 + x^2*y^2*z\n"

    def test_syntax_error_exits_2(self, tmp_path):
        rules = tmp_path / "bad.rules"
        rules.write_text("x -> \n")
        assert run_cli("grammar", "--rules", str(rules), "--start", "x",
                       "--order", "1")[0] == 2

    def test_missing_file_exits_2(self):
        assert run_cli("grammar", "--rules", "/nonexistent", "--start", "x",
                       "--order", "1")[0] == 2


class TestVerify:
    def test_single_identity_passes(self):
        code, out = run_cli("verify", "--identity", "gamma-eulerian",
                            "--max-n", "7")
        assert code == 0
        assert out.startswith("pass  gamma-eulerian (max_n=7)")

    def test_unknown_identity_exits_2(self):
        assert run_cli("verify", "--identity", "no-such")[0] == 2

    def test_bound_past_limit_exits_2(self):
        assert run_cli("verify", "--identity", "bona-equidistribution",
                       "--max-n", "99")[0] == 2

    def test_all_small_bound(self):
        code, out = run_cli("verify", "--all", "--max-n", "3")
        assert code == 0
        assert len(out.splitlines()) == len(REGISTRY)

    def test_json_report_schema(self):
        _, out = run_cli("--format", "json", "verify", "--identity",
                         "t-self-inverse", "--max-n", "4")
        report = json.loads(out)
        assert report[0]["name"] == "t-self-inverse"
        assert report[0]["pass"] is True
        assert report[0]["params"] == {"max_n": 4}

    def test_failure_exits_1(self, monkeypatch):
        import stirlab.identities as ids

        broken = IdentityCheck(
            "always-fails", "test stub", 2, 5, (), lambda bound: f"n={bound}: nope"
        )
        monkeypatch.setitem(ids.REGISTRY, "always-fails", broken)
        code, out = run_cli("verify", "--identity", "always-fails")
        assert code == 1
        assert "FAIL" in out and "witness: n=2: nope" in out

    def test_csv_report(self):
        _, out = run_cli("--format", "csv", "verify", "--identity",
                         "gamma-vanishing", "--max-n", "4")
        lines = out.splitlines()
        assert lines[0] == "name,max_n,pass,millis,witness"
        assert lines[1].startswith("gamma-vanishing,4,true,")


class TestByteStability:
    def test_repeated_runs_identical(self):
        a = run_cli("stats", "--class", "stirling", "--n", "3",
                    "--stats", "lap,dasc,dp")
        b = run_cli("stats", "--class", "stirling", "--n", "3",
                    "--stats", "lap,dasc,dp")
        assert a == b
        a = run_cli("enumerate", "--class", "stirling", "--n", "3")
        b = run_cli("enumerate", "--class", "stirling", "--n", "3")
        assert a == b
