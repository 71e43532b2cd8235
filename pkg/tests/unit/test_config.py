"""
Unit tests for engine settings and golden-suite configuration
"""

from pathlib import Path

import pytest
import yaml
from pydantic import ValidationError

from orthorec.config import EngineSettings, GoldenCase, SuiteConfig, load_settings
from orthorec.utils.constants import Mode

REPO_ROOT = Path(__file__).resolve().parents[2]


def write_yaml(path, data):
    path.write_text(yaml.safe_dump(data), encoding="utf-8")
    return str(path)


class TestEngineSettings:

    def test_defaults(self):
        settings = EngineSettings()
        assert settings.sequence_name == "u"
        assert settings.oracle_size == 16
        assert settings.assert_irreducible

    @pytest.mark.parametrize("name", ["n", "x", "Dx", "2u", "a-b"])
    def test_invalid_sequence_name(self, name):
        with pytest.raises(ValidationError):
            EngineSettings(sequence_name=name)

    @pytest.mark.parametrize("size", [3, 257])
    def test_oracle_size_bounds(self, size):
        with pytest.raises(ValidationError):
            EngineSettings(oracle_size=size)

    def test_log_level(self):
        with pytest.raises(ValidationError):
            EngineSettings(log_level="TRACE")


class TestGoldenCase:

    def test_minimal(self):
        case = GoldenCase(name="c", operator="Dx - 1", basis="hermite", expected={0: "1"})
        assert case.mode is Mode.AUTO
        assert case.comparison == "exact"

    def test_both_expectations(self):
        with pytest.raises(ValidationError):
            GoldenCase(name="c", operator="Dx", basis="hermite", expected={0: "1"},
                       expected_error="PARSE_ERROR")

    def test_no_expectation(self):
        with pytest.raises(ValidationError):
            GoldenCase(name="c", operator="Dx", basis="hermite")

    def test_basis_required_outside_taylor(self):
        with pytest.raises(ValidationError):
            GoldenCase(name="c", operator="Dx", expected={0: "1"})
        case = GoldenCase(name="c", operator="Dx", mode="taylor", expected={0: "1"})
        assert case.basis is None

    def test_negative_shift(self):
        with pytest.raises(ValidationError):
            GoldenCase(name="c", operator="Dx", basis="hermite", expected={-1: "1"})

    def test_blank_operator(self):
        with pytest.raises(ValidationError):
            GoldenCase(name="c", operator="  ", basis="hermite", expected={0: "1"})


class TestSuiteConfig:

    def test_load_from_file(self, tmp_path):
        path = write_yaml(tmp_path / "suite.yaml", {
            "settings": {"sequence_name": "c", "parallel_cases": 2},
            "cases": [{"name": "a", "operator": "Dx", "basis": "hermite", "expected": {0: "1"}}],
        })
        config = SuiteConfig.load_from_file(path)
        assert config.settings.sequence_name == "c"
        assert config.get_case("a").operator == "Dx"
        assert config.get_case("missing") is None

    def test_duplicate_names(self, tmp_path):
        case = {"name": "a", "operator": "Dx", "basis": "hermite", "expected": {0: "1"}}
        path = write_yaml(tmp_path / "suite.yaml", {"cases": [case, case]})
        with pytest.raises(ValueError, match="Duplicate"):
            SuiteConfig.load_from_file(path)

    def test_empty_cases(self, tmp_path):
        path = write_yaml(tmp_path / "suite.yaml", {"cases": []})
        with pytest.raises(ValueError):
            SuiteConfig.load_from_file(path)

    def test_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            SuiteConfig.load_from_file(str(tmp_path / "nope.yaml"))

    def test_invalid_yaml(self, tmp_path):
        path = tmp_path / "bad.yaml"
        path.write_text("cases: [unclosed", encoding="utf-8")
        with pytest.raises(ValueError, match="Invalid YAML"):
            SuiteConfig.load_from_file(str(path))

    def test_empty_file(self, tmp_path):
        path = tmp_path / "empty.yaml"
        path.write_text("", encoding="utf-8")
        with pytest.raises(ValueError, match="empty"):
            SuiteConfig.load_from_file(str(path))

    def test_repository_golden_file(self):
        config = SuiteConfig.load_from_file(str(REPO_ROOT / "golden.yaml"))
        assert len(config.cases) >= 10
        assert any(case.expected_error for case in config.cases)


class TestLoadSettings:

    def test_bare_block(self, tmp_path):
        path = write_yaml(tmp_path / "settings.yaml", {"oracle_size": 32})
        assert load_settings(path).oracle_size == 32

    def test_nested_block(self, tmp_path):
        path = write_yaml(tmp_path / "settings.yaml", {"settings": {"log_level": "DEBUG"}})
        assert load_settings(path).log_level == "DEBUG"

    def test_invalid(self, tmp_path):
        path = write_yaml(tmp_path / "settings.yaml", {"oracle_size": 1})
        with pytest.raises(ValueError, match="Invalid settings"):
            load_settings(path)
