"""
Edge Sched Simulator - Config and Bundle Files
==============================================
JSON scenario configs (or built-in presets by name) and solution bundles
``{version, algorithm, instance, schedule}`` written by ``solve``.
"""

import json
from pathlib import Path
from typing import Any

import structlog
from pydantic import BaseModel, ConfigDict, ValidationError

from edge_sched.exceptions import InvalidConfigError, InvalidInstanceError
from edge_sched.model import ProblemInstance
from edge_sched.scenario import CONFIG_VERSION, PRESETS, ScenarioConfig, get_preset
from edge_sched.schedulers import Schedule

from app.core.exceptions import BundleFormatError, OutputWriteError

logger = structlog.get_logger(__name__)

BUNDLE_VERSION = 1


def _field_errors(error: ValidationError) -> list[dict[str, Any]]:
    return [{"loc": [str(p) for p in err["loc"]], "msg": err["msg"]} for err in error.errors()]


def _format_errors(errors: list[dict[str, Any]]) -> str:
    return "; ".join(f"{'.'.join(e['loc']) or '<root>'}: {e['msg']}" for e in errors)


def parse_config(text: str, source: str = "<string>") -> ScenarioConfig:
    """
    Parse a JSON scenario config.

    Raises:
        InvalidConfigError: JSON syntax error (with line and column), missing
            or unsupported ``version``, or field validation errors
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise InvalidConfigError(
            f"{source}: line {e.lineno} column {e.colno}: {e.msg}",
            errors=[{"loc": [], "msg": e.msg, "line": e.lineno, "column": e.colno}],
        ) from e

    if not isinstance(data, dict):
        raise InvalidConfigError(f"{source}: config must be a JSON object")
    if "version" not in data:
        raise InvalidConfigError(
            f"{source}: missing required field 'version'",
            errors=[{"loc": ["version"], "msg": "field required"}],
        )

    try:
        return ScenarioConfig.model_validate(data)
    except ValidationError as e:
        errors = _field_errors(e)
        raise InvalidConfigError(f"{source}: {_format_errors(errors)}", errors=errors) from e


def load_config(source: str | Path) -> ScenarioConfig:
    """
    Scenario config from a preset name (``paper_default``, ``testbed``,
    ``small``) or a JSON file path.
    """
    if str(source) in PRESETS:
        return get_preset(str(source))

    path = Path(source)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise InvalidConfigError(
            f"Cannot read config {path}: {e.strerror or e}",
            errors=[{"loc": ["config"], "msg": "unreadable file"}],
        ) from e
    config = parse_config(text, str(path))
    logger.debug("Scenario config loaded", path=str(path), scenario=config.name)
    return config


def dump_config(config: ScenarioConfig) -> str:
    """Canonical JSON text for ``config``; ``parse_config`` reads it back."""
    data = config.model_dump(mode="json")
    data["version"] = CONFIG_VERSION
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def write_config(config: ScenarioConfig, path: str | Path) -> None:
    try:
        Path(path).write_text(dump_config(config), encoding="utf-8")
    except OSError as e:
        raise OutputWriteError(str(path), e.strerror or str(e)) from e


# =============================================================================
# Solution bundles
# =============================================================================

class SolutionBundle(BaseModel):
    """A schedule together with the instance it was computed for."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    version: int = BUNDLE_VERSION
    algorithm: str
    instance: ProblemInstance
    schedule: Schedule


def dump_bundle(bundle: SolutionBundle) -> str:
    return json.dumps(bundle.model_dump(mode="json"), indent=2, sort_keys=True) + "\n"


def write_bundle(bundle: SolutionBundle, path: str | Path) -> None:
    try:
        Path(path).write_text(dump_bundle(bundle), encoding="utf-8")
    except OSError as e:
        raise OutputWriteError(str(path), e.strerror or str(e)) from e


def load_bundle(path: str | Path) -> SolutionBundle:
    """
    Read a bundle written by ``write_bundle``.

    The instance is re-validated; the schedule is taken as written so that
    ``validate`` can judge it.

    Raises:
        BundleFormatError: unreadable file, bad JSON, wrong structure or an
            inconsistent instance
    """
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as e:
        raise BundleFormatError(str(path), e.strerror or str(e)) from e
    except json.JSONDecodeError as e:
        raise BundleFormatError(str(path), f"line {e.lineno} column {e.colno}: {e.msg}") from e

    if not isinstance(data, dict) or data.get("version") != BUNDLE_VERSION:
        raise BundleFormatError(str(path), f"expected version {BUNDLE_VERSION}")
    try:
        return SolutionBundle.model_validate(data)
    except ValidationError as e:
        raise BundleFormatError(str(path), _format_errors(_field_errors(e))) from e
    except InvalidInstanceError as e:
        raise BundleFormatError(str(path), e.message) from e
