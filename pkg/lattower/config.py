"""General config"""

import logging
import os
from copy import deepcopy
from pathlib import Path
from yaml import load, dump, SafeLoader, YAMLError

from .errors import ConfigError
from .typings import Bounds, Config

CONFIG_DEFAULTS: Config = {
    "bounds": {
        "max_degree": 20,
        "max_t": 8,
        "max_lattice": 2000,
        "max_order": 5000,
        "max_tower_steps": 10,
    },
    "progress": False,
    "log_level": "WARNING",
}

APP_DIR = Path("~/.lattower").expanduser()
APP_CONFIG = APP_DIR / "config.yaml"


def config_path() -> Path:
    """Config file location, honouring LATTOWER_CONFIG"""
    override = os.environ.get("LATTOWER_CONFIG")
    return Path(override).expanduser() if override else APP_CONFIG


def read_config(path: Path | None = None) -> Config:
    """Read system config merged over the defaults"""
    path = path or config_path()
    config = deepcopy(CONFIG_DEFAULTS)
    if not path.exists():
        return config
    try:
        with open(path, encoding="utf-8") as sysfile:
            raw = load(sysfile, SafeLoader) or {}
    except YAMLError as exc:
        err = ConfigError(f"cannot parse {path}")
        err.add_note(str(exc))
        raise err from exc
    if not isinstance(raw, dict):
        raise ConfigError(f"{path} must hold a mapping")
    bounds = raw.get("bounds", {})
    if not isinstance(bounds, dict):
        raise ConfigError(f"bounds in {path} must be a mapping, got {type(bounds).__name__}")
    for key, value in bounds.items():
        if key not in config["bounds"]:
            raise ConfigError(f"unknown bound {key!r}")
        config["bounds"][key] = value  # type: ignore[literal-required]
    if "progress" in raw:
        if not isinstance(raw["progress"], bool):
            raise ConfigError(f"progress must be true or false, got {raw['progress']!r}")
        config["progress"] = raw["progress"]
    if "log_level" in raw:
        config["log_level"] = check_log_level(raw["log_level"])
    check_bounds(config["bounds"])
    return config


def write_config(config: Config, path: Path | None = None):
    """Write config"""
    path = path or config_path()
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as sysfile:
        dump(config, sysfile)


def check_bounds(bounds: Bounds):
    """Every bound must be a positive integer"""
    for key, value in bounds.items():
        if not isinstance(value, int) or isinstance(value, bool) or value <= 0:
            raise ConfigError(f"bound {key} must be a positive integer, got {value!r}")


def check_log_level(level: object) -> str:
    """Upper-cased name of a standard logging level"""
    name = str(level).upper()
    if not isinstance(level, str) or not isinstance(logging.getLevelName(name), int):
        raise ConfigError(f"log_level must be a logging level name, got {level!r}")
    return name
