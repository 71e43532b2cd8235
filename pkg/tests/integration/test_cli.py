"""
Integration tests for the command-line front end
"""

import json

import pytest
import yaml

from orthorec.cli import InputSpec, main, run
from orthorec.utils.constants import (
    EXIT_CHECK_FAILED,
    EXIT_INPUT_ERROR,
    EXIT_OK,
    EXIT_PRECONDITION_ERROR,
)


@pytest.fixture
def suite_file(tmp_path):
    path = tmp_path / "suite.yaml"
    path.write_text(yaml.safe_dump({
        "settings": {"parallel_cases": 1},
        "cases": [
            {"name": "exp", "operator": "Dx - 1", "basis": "hermite",
             "expected": {1: "2*n+2", 0: "-1"}},
            {"name": "bad", "operator": "2x", "basis": "hermite",
             "expected_error": "PARSE_ERROR"},
        ],
    }), encoding="utf-8")
    return path


class TestSingleRun:

    def test_text_output(self, capsys):
        assert main(["--basis", "chebyshev", "Dx - 1"]) == EXIT_OK
        out = capsys.readouterr().out
        assert out.splitlines()[0] == "u(n+2) + (2*n+2)*u(n+1) - u(n) = 0"

    def test_json_output(self, capsys):
        code = main(["--basis", "hermite", "--format", "json", "--name", "c",
                     "--check", "x^3", "Dx - 1"])
        assert code == EXIT_OK
        data = json.loads(capsys.readouterr().out)
        assert data["coefficients"] == ["-1", "2*n+2"]
        assert data["name"] == "c"
        assert data["text"] == "(2*n+2)*c(n+1) - c(n) = 0"
        assert data["check"][0]["passed"]

    def test_theta_mode(self, capsys):
        assert main(["--basis", "chebyshev", "--mode", "theta", "2*(1-x^2)*Dx - x"]) == EXIT_OK
        assert "mode: theta" in capsys.readouterr().out

    def test_taylor_without_basis(self, capsys):
        assert main(["--mode", "taylor", "x*Dx - 2"]) == EXIT_OK
        assert capsys.readouterr().out.startswith("(n-2)*u(n) = 0")

    def test_product(self, capsys):
        code = main(["--basis", "hermite", "--format", "json",
                     "--product", "Dx - 2", "Dx - 1"])
        assert code == EXIT_OK
        data = json.loads(capsys.readouterr().out)
        assert data["order"] == 1

    def test_config_file(self, tmp_path, capsys):
        config = tmp_path / "settings.yaml"
        config.write_text(yaml.safe_dump({"sequence_name": "w", "oracle_size": 8}),
                          encoding="utf-8")
        assert main(["--config", str(config), "--basis", "hermite", "Dx - 1"]) == EXIT_OK
        assert "w(n+1)" in capsys.readouterr().out

    def test_default_oracle_size(self, mocker, capsys):
        checks = mocker.patch("orthorec.cli.check_solutions", return_value=[("x", True)])
        assert main(["--basis", "hermite", "--check", "x", "Dx - 1"]) == EXIT_OK
        assert checks.call_args.args[3] == 16

    def test_config_oracle_size(self, tmp_path, mocker, capsys):
        config = tmp_path / "settings.yaml"
        config.write_text(yaml.safe_dump({"oracle_size": 8}), encoding="utf-8")
        checks = mocker.patch("orthorec.cli.check_solutions", return_value=[("x", True)])
        assert main(["--config", str(config), "--basis", "hermite", "--check", "x", "Dx - 1"]) == EXIT_OK
        assert checks.call_args.args[3] == 8

    def test_list_families(self, capsys):
        assert main(["--list-families"]) == EXIT_OK
        out = capsys.readouterr().out
        for name in ("chebyshev", "gegenbauer", "jacobi", "laguerre", "hermite"):
            assert name in out


class TestExitCodes:

    def test_missing_operator(self, capsys):
        assert main(["--basis", "hermite"]) == EXIT_INPUT_ERROR
        assert "operator is required" in capsys.readouterr().err

    def test_parse_error(self, capsys):
        assert main(["--basis", "hermite", "2x*Dx"]) == EXIT_INPUT_ERROR
        assert "PARSE_ERROR" in capsys.readouterr().err

    def test_unknown_family(self):
        assert main(["--basis", "legendre", "Dx"]) == EXIT_INPUT_ERROR

    def test_unsupported_mode(self, capsys):
        assert main(["--basis", "hermite", "--mode", "theta", "Dx - 1"]) == EXIT_PRECONDITION_ERROR
        assert "UNSUPPORTED_MODE" in capsys.readouterr().err

    def test_hypothesis_failure(self):
        assert main(["--basis", "chebyshev", "--mode", "theta", "Dx - 1"]) == EXIT_PRECONDITION_ERROR

    def test_missing_config(self, tmp_path, capsys):
        code = main(["--config", str(tmp_path / "none.yaml"), "--basis", "hermite", "Dx"])
        assert code == EXIT_INPUT_ERROR
        assert "IO_ERROR" in capsys.readouterr().err

    def test_invalid_config(self, tmp_path, capsys):
        config = tmp_path / "settings.yaml"
        config.write_text(yaml.safe_dump({"oracle_size": 2}), encoding="utf-8")
        assert main(["--config", str(config), "--basis", "hermite", "Dx"]) == EXIT_INPUT_ERROR
        assert "VALIDATION_ERROR" in capsys.readouterr().err

    def test_failed_check(self, mocker):
        mocker.patch("orthorec.cli.check_solutions", return_value=[("x", False)])
        rendered, code = run(InputSpec(operator="Dx - 1", basis="hermite", check=["x"]))
        assert code == EXIT_CHECK_FAILED
        assert "check x: FAIL" in rendered


class TestSuite:

    def test_suite_passes(self, suite_file, tmp_path, capsys):
        results = tmp_path / "results.json"
        code = main(["--suite", str(suite_file), "--results", str(results)])
        assert code == EXIT_OK
        assert "Passed: 2" in capsys.readouterr().out
        data = json.loads(results.read_text(encoding="utf-8"))
        assert [c["name"] for c in data["cases"]] == ["exp", "bad"]

    def test_suite_failure(self, tmp_path):
        path = tmp_path / "suite.yaml"
        path.write_text(yaml.safe_dump({"cases": [
            {"name": "wrong", "operator": "Dx - 1", "basis": "hermite", "expected": {0: "1"}},
        ]}), encoding="utf-8")
        assert main(["--suite", str(path)]) == EXIT_INPUT_ERROR

    def test_missing_suite(self, tmp_path, capsys):
        assert main(["--suite", str(tmp_path / "none.yaml")]) == EXIT_INPUT_ERROR
        assert "IO_ERROR" in capsys.readouterr().err

    def test_invalid_suite(self, tmp_path, capsys):
        path = tmp_path / "suite.yaml"
        path.write_text(yaml.safe_dump({"cases": []}), encoding="utf-8")
        assert main(["--suite", str(path)]) == EXIT_INPUT_ERROR
        assert "VALIDATION_ERROR" in capsys.readouterr().err

    def test_unwritable_results(self, suite_file, tmp_path, capsys):
        target = tmp_path / "missing_dir" / "results.json"
        assert main(["--suite", str(suite_file), "--results", str(target)]) == EXIT_INPUT_ERROR
        assert "IO_ERROR" in capsys.readouterr().err
