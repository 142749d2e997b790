"""Tests for configuration loading and overrides."""

import pytest

from src.utils.config import Config, get_config, load_config, reset_config


def test_defaults_loaded():
    config = get_config()
    assert config.get("homology.spotcheck_seed") == 20130611
    assert config.get("reporting.max_witness_items") == 64
    assert config.get("homology.missing", "fallback") == "fallback"


def test_set_creates_nested_keys():
    config = get_config()
    config.set("symmetry.max_group_order", 5)
    config.set("extra.inner.value", 1)
    assert config.get("symmetry.max_group_order") == 5
    assert config.get("extra.inner.value") == 1


def test_reset_rereads_default_file():
    get_config().set("cli.jobs", 8)
    reset_config()
    assert get_config().get("cli.jobs") == 1


def test_load_custom_file(tmp_path):
    path = tmp_path / "settings.yaml"
    path.write_text("homology:\n  spotcheck_samples: 3\n", encoding="utf-8")
    load_config(str(path))
    assert get_config().get("homology.spotcheck_samples") == 3
    assert get_config().get("cli.jobs") is None


def test_missing_file():
    with pytest.raises(FileNotFoundError):
        Config("/nonexistent/settings.yaml")


def test_section_getters():
    config = get_config()
    assert config.get_homology_config()["max_middle_faces"] == 5000000
    assert config.get_symmetry_config()["max_group_order"] == 10000000
    assert config.get_reporting_config()["indent"] == 2
    assert config.get_oracle_config()["max_shelling_facets"] == 12
    assert config.get_cli_config()["jobs"] == 1


def test_sections_see_overrides_and_gaps(tmp_path):
    get_config().set("homology.spotcheck_samples", 7)
    assert get_config().get_homology_config()["spotcheck_samples"] == 7
    path = tmp_path / "settings.yaml"
    path.write_text("homology:\n  spotcheck_samples: 3\n", encoding="utf-8")
    load_config(str(path))
    assert get_config().get_cli_config() == {}
