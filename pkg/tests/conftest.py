"""Shared test fixtures and configuration for birkhoff-gm tests."""

from __future__ import annotations

import logging
import os
from collections.abc import Iterator
from fractions import Fraction
from pathlib import Path

import pytest

from birkhoff_gm.objective import (
    AdjacencyMatrix,
    SeparableQuadratic,
    diagonal_bias_objective,
    near_tie_objective,
)
from birkhoff_gm.polytope import ConstraintSystem, build_birkhoff, build_perturbed
from birkhoff_gm.solver import SolverOptions


@pytest.fixture
def k3() -> AdjacencyMatrix:
    """Triangle."""
    return AdjacencyMatrix.complete(3)


@pytest.fixture
def p3() -> AdjacencyMatrix:
    """Path 1-2-3."""
    return AdjacencyMatrix.path(3)


@pytest.fixture
def p4() -> AdjacencyMatrix:
    """Path 1-2-3-4."""
    return AdjacencyMatrix.path(4)


@pytest.fixture
def c4() -> AdjacencyMatrix:
    """Four-cycle 1-2-3-4-1."""
    return AdjacencyMatrix.cycle(4)


@pytest.fixture
def edgeless3() -> AdjacencyMatrix:
    """Three isolated vertices."""
    return AdjacencyMatrix.empty(3)


@pytest.fixture
def near_tie() -> SeparableQuadratic:
    """n = 2 objective whose surrogate optimum moves for large t."""
    return near_tie_objective()


@pytest.fixture
def diagonal_bias() -> SeparableQuadratic:
    """n = 3 objective with the identity as unique optimum."""
    return diagonal_bias_objective()


@pytest.fixture
def birkhoff3() -> ConstraintSystem:
    """Unperturbed 3 x 3 system."""
    return build_birkhoff(3)


@pytest.fixture
def perturbed3() -> ConstraintSystem:
    """3 x 3 surrogate with t = 1/100."""
    return build_perturbed(3, Fraction(1, 100))


@pytest.fixture
def fast_options() -> SolverOptions:
    """Small branch-and-bound budget for unit tests."""
    return SolverOptions(max_iterations=50)


@pytest.fixture
def graph_files(tmp_path: Path) -> dict[str, Path]:
    """Write K3 (matrix format) and P3 (edge-list format) to disk.

    Returns a mapping of graph name to file path.
    """
    k3_path = tmp_path / "k3.txt"
    k3_path.write_text("# triangle\n3\n011\n101\n110\n")
    p3_path = tmp_path / "p3.txt"
    p3_path.write_text("n=3\n1 2\n2 3\n")
    return {"k3": k3_path, "p3": p3_path}


@pytest.fixture
def mock_env(monkeypatch: pytest.MonkeyPatch) -> dict[str, str]:
    """Set up mock environment variables for configuration tests.

    Returns the dict of set variables for assertions.
    """
    env_vars = {
        "BIRKHOFF_LOGGING__LEVEL": "DEBUG",
        "BIRKHOFF_SOLVER__MAX_ITERATIONS": "250",
        "BIRKHOFF_SOLVER__SUBDIVISION_RULE": "longest-edge",
        "BIRKHOFF_ORACLE__MAX_N": "8",
        "BIRKHOFF_SAMPLING__SEED": "7",
    }
    for key, value in env_vars.items():
        monkeypatch.setenv(key, value)
    return env_vars


@pytest.fixture
def config_toml_content() -> str:
    """Provide sample TOML configuration content."""
    return """
[logging]
level = "INFO"
structured = true

[solver]
max_iterations = 300
subdivision_rule = "omega"
ascent_steps = 4

[oracle]
max_n = 9

[sampling]
seed = 11
trials = 40
minor_order = 2
"""


@pytest.fixture
def config_yaml_content() -> str:
    """Provide sample YAML configuration content."""
    return """
logging:
  level: ERROR
solver:
  max_iterations: 120
  subdivision_rule: longest-edge
"""


@pytest.fixture(autouse=True)
def isolated_cwd(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
    """Run every test from an empty directory so no stray config.toml or .env is read."""
    monkeypatch.chdir(tmp_path)
    for key in list(os.environ):
        if key.startswith("BIRKHOFF_"):
            monkeypatch.delenv(key)


@pytest.fixture
def config_toml_file(tmp_path: Path, config_toml_content: str) -> Path:
    """Create a temporary TOML configuration file."""
    config_file = tmp_path / "config.toml"
    config_file.write_text(config_toml_content)
    return config_file


@pytest.fixture(autouse=True)
def reset_package_logger() -> Iterator[None]:
    """Drop handlers the CLI attaches so they do not outlive captured streams."""
    yield
    logger = logging.getLogger("birkhoff_gm")
    logger.handlers.clear()
    logger.setLevel(logging.NOTSET)
