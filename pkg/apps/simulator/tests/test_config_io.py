"""Tests for scenario config files and solution bundles."""

import json

import pytest

from edge_sched.exceptions import InvalidConfigError
from edge_sched.scenario import generate_instance, paper_default, small_profile
from edge_sched.schedulers import gus

from app.core.exceptions import BundleFormatError
from app.report import (
    SolutionBundle,
    dump_config,
    load_bundle,
    load_config,
    parse_config,
    write_bundle,
    write_config,
)


class TestScenarioConfigFiles:
    def test_dump_parses_back(self):
        assert parse_config(dump_config(paper_default())) == paper_default()

    def test_written_file_loads(self, tmp_path):
        path = tmp_path / "small.json"
        write_config(small_profile(), path)

        assert load_config(path) == small_profile()

    def test_preset_by_name(self):
        assert load_config("small") == small_profile()

    def test_version_required(self):
        data = json.loads(dump_config(small_profile()))
        del data["version"]

        with pytest.raises(InvalidConfigError, match="missing required field 'version'"):
            parse_config(json.dumps(data))

    def test_unsupported_version(self):
        data = json.loads(dump_config(small_profile()))
        data["version"] = 2

        with pytest.raises(InvalidConfigError) as exc_info:
            parse_config(json.dumps(data))

        assert exc_info.value.details["errors"][0]["loc"] == ["version"]

    def test_syntax_error_position(self):
        with pytest.raises(InvalidConfigError) as exc_info:
            parse_config('{"version": 1,,}', source="cfg.json")

        error = exc_info.value.details["errors"][0]
        assert (error["line"], error["column"]) == (1, 15)
        assert exc_info.value.message.startswith("cfg.json: line 1 column 15")

    def test_nested_field_error(self):
        data = json.loads(dump_config(small_profile()))
        data["requested_delay"] = {"kind": "uniform", "lo": 10.0}

        with pytest.raises(InvalidConfigError) as exc_info:
            parse_config(json.dumps(data))

        assert exc_info.value.details["errors"][0]["loc"][0] == "requested_delay"

    def test_not_an_object(self):
        with pytest.raises(InvalidConfigError, match="JSON object"):
            parse_config("[1, 2]")


class TestSolutionBundles:
    def test_roundtrip(self, tmp_path):
        instance = generate_instance(small_profile(), seed=1)
        bundle = SolutionBundle(algorithm="gus", instance=instance, schedule=gus(instance))
        path = tmp_path / "bundle.json"

        write_bundle(bundle, path)

        assert load_bundle(path) == bundle

    def test_wrong_version(self, tmp_path):
        path = tmp_path / "bundle.json"
        path.write_text(json.dumps({"version": 9}))

        with pytest.raises(BundleFormatError, match="expected version 1"):
            load_bundle(path)

    def test_missing_file(self, tmp_path):
        with pytest.raises(BundleFormatError) as exc_info:
            load_bundle(tmp_path / "absent.json")

        assert exc_info.value.exit_code == 2

    def test_wrong_structure(self, tmp_path):
        path = tmp_path / "bundle.json"
        path.write_text(json.dumps({"version": 1, "algorithm": "gus"}))

        with pytest.raises(BundleFormatError, match="instance"):
            load_bundle(path)
