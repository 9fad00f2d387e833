"""Jinja2 rendering of human-readable reports."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from pathlib import Path
from typing import Any

from jinja2 import Environment, FileSystemLoader, StrictUndefined, Template, TemplateNotFound

from birkhoff_gm._internal.rational import format_fraction
from birkhoff_gm.cli.reports import Report
from birkhoff_gm.errors import ReportRenderError

TEMPLATES_DIR = Path(__file__).parent / "templates"
FILE_EXTENSION = ".jinja2"


def _rational(value: Fraction | int | None) -> str:
    if value is None:
        return "-"
    q = Fraction(value)
    return str(q.numerator) if q.denominator == 1 else format_fraction(q)


@lru_cache(maxsize=1)
def create_environment() -> Environment:
    """Jinja2 environment over the packaged templates."""
    env = Environment(
        loader=FileSystemLoader(TEMPLATES_DIR),
        autoescape=False,
        trim_blocks=True,
        lstrip_blocks=True,
        keep_trailing_newline=True,
        undefined=StrictUndefined,
    )
    env.filters["rational"] = _rational
    return env


@dataclass
class ReportTemplate:
    """A named report template.

    Attributes:
        name: Template name without extension, e.g. ``"match"``.
    """

    name: str
    _compiled: Template | None = field(default=None, repr=False, compare=False)

    def render(self, **variables: Any) -> str:
        """Render with the given variables.

        Raises:
            ReportRenderError: If the template is missing or rendering fails.
        """
        try:
            if self._compiled is None:
                self._compiled = create_environment().get_template(self.name + FILE_EXTENSION)
            return self._compiled.render(**variables)
        except TemplateNotFound as e:
            raise ReportRenderError(self.name, e) from e
        except Exception as e:
            raise ReportRenderError(self.name, e) from e


def render_report(report: Report) -> str:
    """Render a report with the template named after its kind."""
    return ReportTemplate(report.kind).render(report=report)
