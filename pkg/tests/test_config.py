"""Tests for src/config.py — settings loading, merging, and worksheet discovery."""

import jsonschema
import pytest
import yaml

from config import (
    DEFAULT_SETTINGS,
    _merge_settings,
    discover_worksheets,
    golden_path,
    load_settings,
    validate_settings,
)
from suites import FAMILIES, radicial_data


class TestMergeSettings:
    def test_override_replaces_base_key(self):
        result = _merge_settings({"seed": 0, "max_degree": 6}, {"seed": 7})
        assert result == {"seed": 7, "max_degree": 6}

    def test_none_means_unset(self):
        result = _merge_settings({"seed": 0}, {"seed": None})
        assert result["seed"] == 0

    def test_nested_values_replaced_whole(self):
        base = {"suites": {"small": {"reduction": 8}, "full": {"reduction": 20}}}
        result = _merge_settings(base, {"suites": {"small": {"reduction": 1}}})
        assert "full" not in result["suites"]


class TestValidateSettings:
    def test_defaults_pass(self):
        with open(DEFAULT_SETTINGS) as f:
            validate_settings(yaml.safe_load(f))

    def test_unknown_policy_fails(self, settings):
        with pytest.raises(jsonschema.ValidationError):
            validate_settings({**settings, "check_irreducibility": "sometimes"})

    def test_negative_seed_fails(self, settings):
        with pytest.raises(jsonschema.ValidationError):
            validate_settings({**settings, "seed": -1})

    def test_unknown_key_fails(self, settings):
        with pytest.raises(jsonschema.ValidationError):
            validate_settings({**settings, "verbose": True})

    def test_missing_suite_family_fails(self, settings):
        small = dict(settings["suites"]["small"])
        del small["radicial"]
        with pytest.raises(jsonschema.ValidationError):
            validate_settings({**settings, "suites": {"small": small, "full": settings["suites"]["full"]}})


class TestLoadSettings:
    def test_loads_defaults(self):
        settings = load_settings()
        assert settings["seed"] == 0
        assert settings["max_degree"] == 6
        assert settings["check_irreducibility"] == "auto"

    def test_full_suites_run_every_family_at_scale(self):
        full = load_settings()["suites"]["full"]
        assert all(full[family] >= 10 for family in FAMILIES if family != "radicial"), full
        assert full["radicial"] >= len(radicial_data())

    def test_command_line_overrides(self):
        settings = load_settings(overrides={"seed": 3, "max_degree": None, "check_irreducibility": "off"})
        assert settings["seed"] == 3
        assert settings["max_degree"] == 6
        assert settings["check_irreducibility"] == "off"

    def test_invalid_override_rejected(self):
        with pytest.raises(jsonschema.ValidationError):
            load_settings(overrides={"max_degree": -2})

    def test_custom_file(self, tmp_path):
        path = tmp_path / "settings.yaml"
        with open(DEFAULT_SETTINGS) as f:
            data = yaml.safe_load(f)
        data["separating_form_attempts"] = 5
        path.write_text(yaml.safe_dump(data))
        assert load_settings(path)["separating_form_attempts"] == 5

    def test_missing_file_raises(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            load_settings(tmp_path / "absent.yaml")


class TestWorksheets:
    def test_shipped_worksheets_found(self):
        names = [p.stem for p in discover_worksheets()]
        assert names == ["gaussian", "radicial", "sqrt2"]

    def test_every_worksheet_has_golden_output(self):
        for sheet in discover_worksheets():
            assert golden_path(sheet).exists()

    def test_golden_path(self, tmp_path):
        assert golden_path(tmp_path / "sqrt2.cor").name == "sqrt2.golden.json"
