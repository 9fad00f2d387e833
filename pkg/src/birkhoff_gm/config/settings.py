"""Root configuration settings for birkhoff-gm."""

from __future__ import annotations

import tomllib
from pathlib import Path
from typing import Any

import yaml
from pydantic import Field
from pydantic_settings import (
    BaseSettings,
    PydanticBaseSettingsSource,
    SettingsConfigDict,
    TomlConfigSettingsSource,
)

from birkhoff_gm.config.logging_config import LoggingConfig
from birkhoff_gm.config.sampling import SamplingConfig
from birkhoff_gm.oracle.config import OracleConfig
from birkhoff_gm.solver.config import SolverOptions

USER_ENV_FILE = Path.home() / "birkhoff.env"


def _read_toml(path: Path) -> dict[str, Any]:
    with path.open("rb") as f:
        return tomllib.load(f)


def _read_yaml(path: Path) -> dict[str, Any]:
    with path.open() as f:
        return yaml.safe_load(f) or {}


_READERS = {".toml": _read_toml, ".yaml": _read_yaml, ".yml": _read_yaml}


class BirkhoffSettings(BaseSettings):
    """Settings shared by the library entry points and the CLI.

    Later sources lose to earlier ones:

    1. Keyword arguments (the CLI passes its flags here)
    2. ``BIRKHOFF_*`` environment variables
    3. ``.env`` in the working directory, then ``~/birkhoff.env``
    4. ``config.toml`` in the working directory
    5. Field defaults

    Sections nest with a double underscore, so
    ``BIRKHOFF_SOLVER__SUBDIVISION_RULE=longest-edge`` sets
    ``solver.subdivision_rule``.

    Attributes:
        logging: Log level, format and destination.
        solver: Branch-and-bound options.
        oracle: Exhaustive oracle limits.
        sampling: Seeds and sizes for randomized diagnostics.
    """

    model_config = SettingsConfigDict(
        env_prefix="BIRKHOFF_",
        env_nested_delimiter="__",
        env_file=(".env", USER_ENV_FILE),
        env_file_encoding="utf-8",
        toml_file="config.toml",
        extra="ignore",
        validate_default=True,
    )

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: type[BaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> tuple[PydanticBaseSettingsSource, ...]:
        """Slot ``config.toml`` in below the dotenv files."""
        return (
            init_settings,
            env_settings,
            dotenv_settings,
            TomlConfigSettingsSource(settings_cls),
            file_secret_settings,
        )

    logging: LoggingConfig = Field(
        default_factory=LoggingConfig,
        description="Log level, format and destination",
    )
    solver: SolverOptions = Field(
        default_factory=SolverOptions,
        description="Branch-and-bound options",
    )
    oracle: OracleConfig = Field(
        default_factory=OracleConfig,
        description="Exhaustive oracle limits",
    )
    sampling: SamplingConfig = Field(
        default_factory=SamplingConfig,
        description="Randomized diagnostics defaults",
    )

    @classmethod
    def from_file(cls, path: str | Path) -> BirkhoffSettings:
        """Build settings from an explicit TOML or YAML file (``--config``).

        File values win over the environment; dotenv files are skipped.

        Raises:
            FileNotFoundError: If the file does not exist.
            ValueError: If the suffix is not .toml, .yaml or .yml.
        """
        path = Path(path)
        if not path.exists():
            raise FileNotFoundError(f"Configuration file not found: {path}")
        reader = _READERS.get(path.suffix.lower())
        if reader is None:
            raise ValueError(f"Unsupported configuration file format: {path.suffix}")
        return cls(_env_file=None, **reader(path))

    def summary(self) -> dict[str, Any]:
        """Dump the effective settings as plain data for debug logging."""
        return self.model_dump(mode="json")
