"""
Run configuration: models and the layered loader.
"""

from .loader import CACHE_ENV_VAR, DEFAULT_CONFIG_FILE, load_config
from .models import DEFAULT_CACHE_PATH, GridConfig, RunConfig, resolve_x

__all__ = [
    "CACHE_ENV_VAR",
    "DEFAULT_CACHE_PATH",
    "DEFAULT_CONFIG_FILE",
    "GridConfig",
    "RunConfig",
    "load_config",
    "resolve_x",
]
