"""cli: subcommands, exit codes, deterministic output, JSON reports."""

import json
import subprocess
import sys

import pytest

from fibercorr.cli import run

from helpers import DISTINCT_COVER_TEXT, MINIMAL_COVER_TEXT, SIGMA_ID_COVER_TEXT


@pytest.fixture
def fixture_file(tmp_path):
    path = tmp_path / "distinct.cover"
    path.write_text(DISTINCT_COVER_TEXT)
    return str(path)


@pytest.fixture
def sigma_id_file(tmp_path):
    path = tmp_path / "sigma.cover"
    path.write_text(SIGMA_ID_COVER_TEXT)
    return str(path)


class TestExitCodes:
    def test_all_pass_is_zero(self, fixture_file, capsys):
        assert run(["report", fixture_file]) == 0
        out = capsys.readouterr().out
        assert "0 fail" in out

    def test_bad_file_is_two(self, tmp_path, capsys):
        path = tmp_path / "bad.cover"
        path.write_text("version 1\ntype cover\ngenus 1\ndegree 3\ngen (1 2 3)\ngen (1 2)\n")
        assert run(["validate", str(path)]) == 2
        assert "line 5" in capsys.readouterr().err

    def test_missing_file_is_two(self, capsys):
        assert run(["validate", "/nonexistent/path.cover"]) == 2

    def test_resource_limit_is_three(self, fixture_file, capsys):
        assert run(["minpoly", "--n", "10", "--ell", "8", "--max-fiber", "1000"]) == 3
        err = capsys.readouterr().err
        assert "100000000" in err  # the offending size is printed

    def test_usage_error_is_two(self, fixture_file, capsys):
        assert run(["transitivity", fixture_file, "--k", "9"]) == 2

    def test_flagged_run_still_exits_zero(self, sigma_id_file, capsys):
        assert run(["report", sigma_id_file]) == 0
        out = capsys.readouterr().out
        assert "FLAGGED" in out


class TestMinpoly:
    def test_roots_and_multiplicities_printed(self, capsys):
        assert run(["minpoly", "--n", "3", "--ell", "2"]) == 0
        out = capsys.readouterr().out
        assert "-2,1,4" in out
        assert "4,4,1" in out

    def test_deterministic_output(self, capsys):
        run(["minpoly", "--n", "3", "--ell", "2"])
        first = capsys.readouterr().out
        run(["minpoly", "--n", "3", "--ell", "2"])
        second = capsys.readouterr().out
        assert first == second


class TestReportPipeline:
    def test_reference_fixture(self, fixture_file, capsys):
        assert run(["report", fixture_file]) == 0
        out = capsys.readouterr().out
        assert "dims=4,4,2" in out
        assert "min_equation.zero" in out
        assert "torsion.bounds" in out

    def test_sigma_id_flags_irreducibility(self, sigma_id_file, capsys):
        assert run(["report", sigma_id_file]) == 0
        out = capsys.readouterr().out
        assert "FLAGGED irreducibility.consistency" in out
        assert "hypothesis not met" in out
        assert "PASS    min_equation.zero" in out

    def test_machine_report_is_superset(self, fixture_file, tmp_path, capsys):
        out_path = tmp_path / "report.json"
        run(["--out", str(out_path), "report", fixture_file])
        human = capsys.readouterr().out
        doc = json.loads(out_path.read_text())
        claims = {r["claim"] for r in doc["records"]}
        for line in human.splitlines():
            if line.startswith(("PASS", "FAIL", "FLAGGED")):
                claim = line.split()[1]
                assert claim in claims
        assert doc["summary"]["fail"] == 0

    def test_json_deterministic(self, fixture_file, tmp_path):
        a = tmp_path / "a.json"
        b = tmp_path / "b.json"
        run(["--out", str(a), "report", fixture_file])
        run(["--out", str(b), "report", fixture_file])
        assert a.read_text() == b.read_text()


class TestOtherCommands:
    def test_validate(self, fixture_file, capsys):
        assert run(["validate", fixture_file]) == 0
        out = capsys.readouterr().out
        assert "validate.factor[1]" in out
        assert "validate.factor[2]" in out

    def test_components(self, sigma_id_file, capsys):
        assert run(["components", sigma_id_file]) == 0
        out = capsys.readouterr().out
        assert "components=2" in out
        assert "genera=3,3" in out

    def test_transitivity(self, fixture_file, capsys):
        assert run(["transitivity", fixture_file, "--k", "2"]) == 0
        out = capsys.readouterr().out
        assert "transitive=True" in out

    def test_dims(self, fixture_file, capsys):
        assert run(["dims", fixture_file]) == 0
        assert "dims=4,4,2" in capsys.readouterr().out

    def test_torsion(self, capsys):
        assert run(["torsion", "--n", "2", "--ell", "2"]) == 0
        out = capsys.readouterr().out
        assert "exponents=4,8" in out

    def test_subquotient(self, capsys):
        assert run(["subquotient", "--n", "3", "--ell", "2", "--subset", "1"]) == 0
        out = capsys.readouterr().out
        assert "subquotient[1]" in out
        assert run(["subquotient", "--n", "3", "--ell", "2", "--subset", ""]) == 0

    def test_atlas_list_and_check(self, capsys):
        assert run(["atlas", "list"]) == 0
        out = capsys.readouterr().out
        assert "atlas.entry[M12]" in out
        assert run(["atlas", "check", "PSL(2,7):2"]) == 0
        out = capsys.readouterr().out
        assert "order=336" in out

    def test_atlas_check_group_file(self, tmp_path, capsys):
        path = tmp_path / "group.cover"
        path.write_text(
            "version 1\ntype group\nname S4\ndegree 4\n"
            "gen (1 2)\ngen (1 2 3 4)\norder 24\ntransitivity 4\n"
        )
        assert run(["atlas", "check", "--file", str(path)]) == 0
        assert "order=24" in capsys.readouterr().out

    def test_atlas_check_detects_corruption(self, tmp_path, capsys):
        path = tmp_path / "group.cover"
        path.write_text(
            "version 1\ntype group\nname S4\ndegree 4\n"
            "gen (1 2)\ngen (1 2 3 4)\norder 25\ntransitivity 4\n"
        )
        assert run(["atlas", "check", "--file", str(path)]) == 1
        assert "FAIL" in capsys.readouterr().out


class TestSubprocessEntry:
    def test_module_invocation(self, tmp_path):
        result = subprocess.run(
            [sys.executable, "-m", "fibercorr", "torsion", "--n", "2", "--ell", "2"],
            capture_output=True,
            text=True,
        )
        assert result.returncode == 0
        assert "exponents=4,8" in result.stdout
