"""Load and validate engine settings; find the shipped worksheets."""

import json
import logging
from pathlib import Path

import jsonschema
import yaml

logger = logging.getLogger("transfers.config")

PROJECT_ROOT = Path(__file__).resolve().parent.parent
SCHEMAS_DIR = PROJECT_ROOT / "schemas"
SETTINGS_DIR = PROJECT_ROOT / "settings"
WORKSHEETS_DIR = PROJECT_ROOT / "worksheets"
DEFAULT_SETTINGS = SETTINGS_DIR / "defaults.yaml"


def load_schema(name: str) -> dict:
    with open(SCHEMAS_DIR / f"{name}.schema.json") as f:
        return json.load(f)


def validate_settings(settings: dict) -> None:
    """Validate merged settings against the JSON schema."""
    jsonschema.validate(instance=settings, schema=load_schema("settings"))


def _merge_settings(base: dict, overrides: dict) -> dict:
    """Top-level keys from overrides replace base keys (shallow merge); None means unset."""
    merged = dict(base)
    for key, value in overrides.items():
        if value is None:
            continue
        merged[key] = value
    return merged


def load_settings(path: Path | None = None, overrides: dict | None = None) -> dict:
    """Load settings/defaults.yaml (or `path`) with command-line overrides on top.

    Raises FileNotFoundError for a missing file and
    jsonschema.ValidationError for invalid values.
    """
    settings_path = Path(path) if path else DEFAULT_SETTINGS
    if not settings_path.exists():
        raise FileNotFoundError(f"Settings file not found: {settings_path}")
    with open(settings_path) as f:
        settings = yaml.safe_load(f) or {}
    if overrides:
        settings = _merge_settings(settings, overrides)
        logger.info("Settings overridden: %s",
                    ", ".join(sorted(k for k, v in overrides.items() if v is not None)) or "none")
    validate_settings(settings)
    return settings


def discover_worksheets() -> list[Path]:
    """Shipped worksheets, sorted by name."""
    if not WORKSHEETS_DIR.exists():
        return []
    return sorted(WORKSHEETS_DIR.glob("*.cor"))


def golden_path(worksheet: Path) -> Path:
    return worksheet.with_suffix(".golden.json")
