"""
Tests for layered configuration loading.
"""

import pytest

from kummerx.config.loader import CACHE_ENV_VAR, DEFAULT_CONFIG_FILE, load_config
from kummerx.core.exceptions import ConfigurationError


class TestLoadConfig:
    """Defaults, YAML, environment and overrides."""

    def test_defaults_without_file(self, isolated_env):
        config = load_config()
        assert config.prec == 128
        assert config.cache_path == "kummerx_cache.jsonl"

    def test_default_file_in_working_directory(self, isolated_env):
        (isolated_env / DEFAULT_CONFIG_FILE).write_text(
            "oracle_ceiling: 101\n"
            "grids:\n"
            "  nu_values: [0, 2]\n"
        )
        config = load_config()
        assert config.oracle_ceiling == 101
        assert config.grids.nu_values == [0, 2]
        assert config.grids.sigma_fractions == [1.0, 0.5]

    def test_explicit_file(self, isolated_env):
        path = isolated_env / "run.yaml"
        path.write_text("precision:\n  initial_bits: 256\noutput_format: jsonl\n")
        config = load_config(path)
        assert config.prec == 256
        assert config.precision.max_bits == 4096
        assert config.output_format == "jsonl"

    def test_missing_explicit_file(self, isolated_env):
        with pytest.raises(ConfigurationError, match="not found"):
            load_config(isolated_env / "absent.yaml")

    def test_empty_file(self, isolated_env):
        path = isolated_env / "empty.yaml"
        path.write_text("")
        assert load_config(path).oracle_ceiling == 199

    def test_invalid_yaml(self, isolated_env):
        path = isolated_env / "broken.yaml"
        path.write_text("grids: [unclosed\n")
        with pytest.raises(ConfigurationError, match="Invalid YAML"):
            load_config(path)

    def test_top_level_must_be_mapping(self, isolated_env):
        path = isolated_env / "list.yaml"
        path.write_text("- 1\n- 2\n")
        with pytest.raises(ConfigurationError, match="mapping"):
            load_config(path)

    def test_invalid_setting(self, isolated_env):
        path = isolated_env / "bad.yaml"
        path.write_text("c_override: 5.0\n")
        with pytest.raises(ConfigurationError, match="Invalid configuration"):
            load_config(path)

    def test_environment_sets_cache(self, isolated_env, monkeypatch):
        monkeypatch.setenv(CACHE_ENV_VAR, "elsewhere.jsonl")
        assert load_config().cache_path == "elsewhere.jsonl"

    def test_overrides_win(self, isolated_env, monkeypatch):
        monkeypatch.setenv(CACHE_ENV_VAR, "elsewhere.jsonl")
        path = isolated_env / "run.yaml"
        path.write_text("precision:\n  initial_bits: 256\n  max_bits: 2048\n")
        config = load_config(
            path,
            {"cache_path": "cli.jsonl", "precision": {"initial_bits": 512, "max_bits": None}},
        )
        assert config.cache_path == "cli.jsonl"
        assert config.prec == 512
        assert config.precision.max_bits == 2048

    def test_none_overrides_are_ignored(self, isolated_env):
        config = load_config(None, {"c_override": None, "grids": {"nu_values": None}})
        assert config.c_override is None
        assert config.grids.nu_values == [0, 1, 2, 3]
