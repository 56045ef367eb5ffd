"""
Configuration loading: defaults, then kummerx.yaml, then the environment,
then explicit overrides from the command line.
"""

import os
from pathlib import Path
from typing import Any, Dict, Optional, Union

import yaml
from dotenv import load_dotenv
from pydantic import ValidationError

from ..core.exceptions import ConfigurationError
from ..utils.logger import get_logger
from .models import RunConfig

logger = get_logger(__name__)

DEFAULT_CONFIG_FILE = "kummerx.yaml"
CACHE_ENV_VAR = "KUMMERX_CACHE"


def _read_yaml(config_file: Path) -> Dict[str, Any]:
    try:
        with open(config_file, "r", encoding="utf-8") as f:
            data = yaml.safe_load(f)
    except yaml.YAMLError as e:
        raise ConfigurationError(f"Invalid YAML in {config_file}: {e}") from e
    except OSError as e:
        raise ConfigurationError(f"Cannot read config file {config_file}: {e}") from e

    if data is None:
        return {}
    if not isinstance(data, dict):
        raise ConfigurationError(f"Config file {config_file} must hold a mapping at the top level")
    return data


def _merge(base: Dict[str, Any], overrides: Dict[str, Any]) -> Dict[str, Any]:
    """Recursive dict merge; None values in ``overrides`` leave ``base`` alone."""
    merged = dict(base)
    for key, value in overrides.items():
        if value is None:
            continue
        if isinstance(value, dict):
            current = merged.get(key)
            merged[key] = _merge(current if isinstance(current, dict) else {}, value)
        else:
            merged[key] = value
    return merged


def load_config(
    config_path: Optional[Union[str, Path]] = None,
    overrides: Optional[Dict[str, Any]] = None,
) -> RunConfig:
    """
    Build the RunConfig for a run.

    Args:
        config_path: Explicit YAML file; must exist when given. Without it,
            kummerx.yaml in the working directory is used when present.
        overrides: Settings from command-line flags, highest priority.

    Raises:
        ConfigurationError: If the file is unreadable or a setting is invalid
    """
    load_dotenv()

    data: Dict[str, Any] = {}
    if config_path is not None:
        config_file = Path(config_path)
        if not config_file.exists():
            raise ConfigurationError(f"Config file not found: {config_path}")
        data = _read_yaml(config_file)
        logger.info(f"Loaded configuration from {config_file}")
    elif Path(DEFAULT_CONFIG_FILE).exists():
        data = _read_yaml(Path(DEFAULT_CONFIG_FILE))
        logger.info(f"Loaded configuration from {DEFAULT_CONFIG_FILE}")

    cache_override = os.getenv(CACHE_ENV_VAR)
    if cache_override:
        data["cache_path"] = cache_override

    data = _merge(data, overrides or {})

    try:
        return RunConfig(**data)
    except ValidationError as e:
        raise ConfigurationError(f"Invalid configuration: {e}") from e
