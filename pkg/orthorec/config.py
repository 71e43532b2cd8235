"""
Pydantic models for the engine settings and the golden-case suite.

A suite file is YAML with a ``settings`` block and a ``cases`` list; see
golden.yaml at the repository root.
"""

import re
from typing import Dict, List, Literal, Optional

from pydantic import BaseModel, Field, field_validator, model_validator

from .utils.constants import DEFAULT_ORACLE_SIZE, DEFAULT_SEQUENCE_NAME, Comparison, Mode

LogLevel = Literal["DEBUG", "INFO", "WARNING", "ERROR"]

SEQUENCE_NAME = re.compile(r"^[A-Za-z_][A-Za-z_0-9]*$")


class EngineSettings(BaseModel):
    """Runtime settings shared by the CLI and the suite runner."""
    sequence_name: str = DEFAULT_SEQUENCE_NAME
    oracle_size: int = Field(DEFAULT_ORACLE_SIZE, ge=4, le=256)
    parallel_cases: int = Field(4, ge=1, le=32)
    log_level: LogLevel = "WARNING"
    assert_irreducible: bool = True

    @field_validator("sequence_name")
    @classmethod
    def validate_sequence_name(cls, v: str) -> str:
        """Sequence names are identifiers other than n and x."""
        if not SEQUENCE_NAME.match(v) or v in ("n", "x", "Dx"):
            raise ValueError(f"Invalid sequence name: {v!r}")
        return v


class GoldenCase(BaseModel):
    """One operator/basis/mode triple with its expected recurrence or error."""
    name: str
    operator: str
    basis: Optional[str] = None
    mode: Mode = Mode.AUTO
    product: Optional[str] = None
    # shift -> coefficient text in n and the parameters
    expected: Dict[int, str] = Field(default_factory=dict)
    comparison: Comparison = "exact"
    # polynomial solutions checked with the oracle
    check: List[str] = Field(default_factory=list)
    expected_error: Optional[str] = None
    description: Optional[str] = None

    @field_validator("name", "operator")
    @classmethod
    def validate_not_empty(cls, v: str, info) -> str:
        if not v or not v.strip():
            raise ValueError(f"{info.field_name} cannot be empty")
        return v

    @field_validator("expected")
    @classmethod
    def validate_shifts(cls, v: Dict[int, str]) -> Dict[int, str]:
        for shift, text in v.items():
            if shift < 0:
                raise ValueError(f"Negative shift {shift} in expected recurrence")
            if not text.strip():
                raise ValueError(f"Empty coefficient for shift {shift}")
        return v

    @model_validator(mode="after")
    def validate_case_consistency(self) -> "GoldenCase":
        """A case expects either a recurrence or an error, and needs a basis unless Taylor."""
        if self.expected and self.expected_error:
            raise ValueError(f"Case {self.name!r} expects both a recurrence and an error")
        if not self.expected and not self.expected_error:
            raise ValueError(f"Case {self.name!r} expects neither a recurrence nor an error")
        if self.basis is None and self.mode is not Mode.TAYLOR:
            raise ValueError(f"Case {self.name!r} needs a basis for mode {self.mode.value}")
        return self


class SuiteConfig(BaseModel):
    """Complete golden-suite configuration."""
    settings: EngineSettings = Field(default_factory=EngineSettings)
    cases: List[GoldenCase]

    @field_validator("cases")
    @classmethod
    def validate_cases(cls, v: List[GoldenCase]) -> List[GoldenCase]:
        if not v:
            raise ValueError("cases section cannot be empty")
        names = [c.name for c in v]
        duplicates = {name for name in names if names.count(name) > 1}
        if duplicates:
            raise ValueError(f"Duplicate case names: {sorted(duplicates)}")
        return v

    @classmethod
    def load_from_file(cls, config_path: str) -> "SuiteConfig":
        """
        Load a suite from a YAML file.

        Raises:
            FileNotFoundError: If the file does not exist
            ValueError: If the YAML or the configuration is invalid
        """
        raw_config = _load_yaml(config_path)
        try:
            return cls.model_validate(raw_config)
        except Exception as e:
            raise ValueError(f"Invalid configuration: {e}")

    def get_case(self, name: str) -> Optional[GoldenCase]:
        for case in self.cases:
            if case.name == name:
                return case
        return None


def load_settings(config_path: str) -> EngineSettings:
    """
    Load EngineSettings from a YAML file holding either the bare settings or a ``settings`` key.

    Raises:
        FileNotFoundError: If the file does not exist
        ValueError: If the YAML or the settings are invalid
    """
    raw = _load_yaml(config_path)
    if isinstance(raw, dict) and "settings" in raw:
        raw = raw["settings"]
    try:
        return EngineSettings.model_validate(raw)
    except Exception as e:
        raise ValueError(f"Invalid settings: {e}")


def _load_yaml(config_path: str):
    import yaml
    from pathlib import Path

    config_file = Path(config_path)
    if not config_file.exists():
        raise FileNotFoundError(f"Configuration file not found: {config_path}")

    with open(config_file, "r", encoding="utf-8") as f:
        try:
            raw_config = yaml.safe_load(f)
        except yaml.YAMLError as e:
            raise ValueError(f"Invalid YAML in configuration file: {e}")

    if raw_config is None:
        raise ValueError("Configuration file is empty")
    return raw_config
