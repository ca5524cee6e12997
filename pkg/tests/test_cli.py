"""End-to-end command-line runs through main()."""

import json
from concurrent.futures import ThreadPoolExecutor

import pytest

from monotone_hurwitz.cli.commands import EXIT_FAILURE, EXIT_OK, EXIT_USAGE, build_parser, main
from monotone_hurwitz.core.config import ConfigLoader


@pytest.fixture(autouse=True)
def plain_config(mocker):
    """Run without reading .env or HURWITZ_* variables."""
    return mocker.patch("monotone_hurwitz.cli.commands.ConfigLoader.from_env", return_value=ConfigLoader())


def run(capsys, *argv):
    status = main(list(argv))
    captured = capsys.readouterr()
    return status, captured.out, captured.err


class TestCompute:
    def test_monotone_by_genus(self, capsys):
        assert run(capsys, "compute", "monotone", "--alpha", "2,1", "--genus", "0") == (EXIT_OK, "12\n", "")

    def test_classical_by_r(self, capsys):
        status, out, _ = run(capsys, "compute", "classical", "--alpha", "3", "--r", "2")
        assert status == EXIT_OK
        assert out == "6\n"

    def test_all_methods_agree(self, capsys):
        status, out, _ = run(capsys, "compute", "monotone", "--alpha", "2,1", "--genus", "0", "--all-methods")
        assert status == EXIT_OK
        assert out.splitlines() == [
            "recurrence 12",
            "closed-form 12",
            "oracle 12",
            "toprec 12",
            "agreement=true",
        ]

    def test_closed_form_skipped_above_genus_zero(self, capsys):
        status, out, _ = run(capsys, "compute", "monotone", "--alpha", "2", "--genus", "1", "--all-methods")
        assert status == EXIT_OK
        lines = out.splitlines()
        assert lines[0] == "recurrence 1"
        assert lines[1].startswith("closed-form skipped:")
        assert lines[-1] == "agreement=true"

    def test_bms_disagreement_is_reported(self, capsys):
        status, out, _ = run(capsys, "compute", "bms", "--alpha", "2", "--r", "2", "--all-methods")
        assert status == EXIT_OK
        assert out.splitlines() == ["formula 6", "oracle 2", "status unreconciled", "agreement=false"]

    def test_json_output(self, capsys):
        status, out, _ = run(capsys, "compute", "classical", "--alpha", "3", "--r", "2",
                             "--all-methods", "--format", "json")
        assert status == EXIT_OK
        payload = json.loads(out)
        assert payload["values"] == {"joincut": "6", "closed-form": "6", "oracle": "6"}
        assert payload["agreement"] is True

    def test_jm_total(self, capsys):
        assert run(capsys, "compute", "jm-total", "--alpha", "1,1,1", "--r", "2")[:2] == (EXIT_OK, "3\n")

    def test_parallel_oracle(self, capsys, mocker):
        mocker.patch("monotone_hurwitz.oracle.parallel.ProcessPoolExecutor", ThreadPoolExecutor)
        status, out, _ = run(capsys, "compute", "oracle", "--alpha", "2,2", "--r", "4", "--workers", "2")
        assert status == EXIT_OK
        assert out == "18\n"

    def test_output_file(self, capsys, tmp_path):
        target = tmp_path / "value.txt"
        status, out, _ = run(capsys, "compute", "monotone", "--alpha", "3", "--genus", "0", "-o", str(target))
        assert status == EXIT_OK
        assert out == ""
        assert target.read_text(encoding="utf-8") == "4\n"

    def test_bad_alpha(self, capsys):
        status, out, err = run(capsys, "compute", "monotone", "--alpha", "2,x", "--genus", "0")
        assert status == EXIT_USAGE
        assert out == ""
        assert "Error" in err

    def test_missing_r_and_genus(self, capsys):
        assert run(capsys, "compute", "monotone", "--alpha", "2")[0] == EXIT_USAGE

    @pytest.mark.parametrize("method", ["recurrence", "oracle"])
    def test_wrong_parity_counts_zero(self, capsys, method):
        argv = ("compute", "monotone", "--alpha", "2,1", "--r", "2", "--method", method)
        assert run(capsys, *argv) == (EXIT_OK, "0\n", "")

    def test_wrong_parity_has_no_closed_form(self, capsys):
        argv = ("compute", "monotone", "--alpha", "2,1", "--r", "2", "--method", "closed-form")
        assert run(capsys, *argv)[0] == EXIT_USAGE

    def test_bms_needs_factor_count(self, capsys):
        status, out, err = run(capsys, "compute", "bms", "--alpha", "2", "--genus", "0")
        assert status == EXIT_USAGE
        assert out == ""
        assert "--r" in err

    def test_unknown_method(self, capsys):
        assert run(capsys, "compute", "monotone", "--alpha", "2", "--r", "1", "--method", "guess")[0] == EXIT_USAGE

    def test_bound_exceeded(self, capsys):
        status, _, err = run(capsys, "compute", "oracle", "--alpha", "4,4", "--r", "6", "--monotone-d-max", "6")
        assert status == EXIT_USAGE
        assert err


class TestTable:
    def test_csv(self, capsys):
        status, out, _ = run(capsys, "table", "--kind", "monotone", "--d-max", "2", "--format", "csv")
        assert status == EXIT_OK
        assert out == "alpha,genus,value\n1,0,1\n2,0,1\n\"1,1\",0,1\n"

    def test_plain_with_genus(self, capsys):
        status, out, _ = run(capsys, "table", "--d-max", "1", "--genus-max", "1")
        assert status == EXIT_OK
        assert out == "1 0 1\n1 1 0\n"

    def test_json_rows(self, capsys):
        status, out, _ = run(capsys, "table", "--d-max", "3", "--format", "json")
        assert status == EXIT_OK
        assert '{"alpha":[2,1],"genus":0,"r":3,"value":"12"}' in out.splitlines()

    def test_classical(self, capsys):
        status, out, _ = run(capsys, "table", "--kind", "classical", "--d-max", "3")
        assert status == EXIT_OK
        assert "3 0 6" in out.splitlines()

    def test_toprec_row(self, capsys):
        status, out, _ = run(capsys, "table", "--kind", "toprec", "--degree", "4")
        assert status == EXIT_OK
        assert out == "1,1,2,5,14\n"

    def test_toprec_two_points(self, capsys):
        status, out, _ = run(capsys, "table", "--kind", "toprec", "--points", "2", "--degree", "1")
        assert status == EXIT_OK
        assert out.splitlines() == ["0,0 1", "0,1 4", "1,0 4", "1,1 18"]

    def test_toprec_above_default_degree(self, capsys):
        status, out, _ = run(capsys, "table", "--kind", "toprec", "--degree", "10")
        assert status == EXIT_OK
        assert out == "1,1,2,5,14,42,132,429,1430,4862,16796\n"

    def test_toprec_cap(self, capsys):
        assert run(capsys, "table", "--kind", "toprec", "--genus", "3")[0] == EXIT_USAGE


class TestVerify:
    def test_suite_passes(self, capsys):
        status, out, _ = run(capsys, "verify", "--suite", "joincut", "--d-max", "3", "--r-max", "4")
        assert status == EXIT_OK
        assert "joincut" in out

    def test_json_results(self, capsys):
        status, out, _ = run(capsys, "verify", "--suite", "closed-form", "--weight", "3", "--format", "json")
        assert status == EXIT_OK
        result = json.loads(out)
        assert result["name"] == "closed-form"
        assert result["passed"] is True
        assert len(result["discrepancies"]) == 5

    def test_tampered_cache_exits_one(self, capsys, tmp_path):
        path = tmp_path / "memo.jsonl"
        path.write_text(
            '{"format":"monotone-memo","version":1}\n{"alpha":[2,1],"r":3,"M":"999"}\n',
            encoding="utf-8"
        )
        status, out, _ = run(capsys, "verify", "--suite", "oracle-vs-recurrence", "--d-max", "3",
                             "--cache", str(path))
        assert status == EXIT_FAILURE
        assert "FAILED" in out

    def test_unknown_suite(self):
        with pytest.raises(SystemExit) as excinfo:
            build_parser().parse_args(["verify", "--suite", "bogus"])
        assert excinfo.value.code == 2


class TestCache:
    def test_round_trip(self, capsys, tmp_path):
        path = tmp_path / "memo.jsonl"
        assert run(capsys, "compute", "monotone", "--alpha", "2,1", "--genus", "0", "--cache", str(path))[0] == EXIT_OK
        assert path.exists()

        status, out, _ = run(capsys, "cache", "stats", "--cache", str(path))
        assert status == EXIT_OK
        lines = out.splitlines()
        assert lines[0] == f"path {path}"
        assert lines[1].startswith("entries ")
        assert int(lines[1].split()[1]) > 0

        status, out, _ = run(capsys, "cache", "clear", "--cache", str(path))
        assert status == EXIT_OK
        assert out == f"cleared {path}\n"
        assert not path.exists()

    def test_stats_flag(self, capsys, tmp_path):
        status, _, err = run(capsys, "compute", "monotone", "--alpha", "3", "--genus", "0", "--stats")
        assert status == EXIT_OK
        assert "entries" in err

    def test_no_cache_path(self, capsys):
        assert run(capsys, "cache", "stats")[0] == EXIT_USAGE

    def test_bad_cache_file(self, capsys, tmp_path):
        path = tmp_path / "memo.jsonl"
        path.write_text("not json\n", encoding="utf-8")
        status, _, err = run(capsys, "compute", "monotone", "--alpha", "2", "--genus", "0", "--cache", str(path))
        assert status == EXIT_FAILURE
        assert err
