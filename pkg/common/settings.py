import json
import logging
import os
from dataclasses import asdict, dataclass, fields
from pathlib import Path

from utils.path_utils import get_app_root

logger = logging.getLogger(__name__)

DEFAULT_CONFIG_PATH = get_app_root() / "data" / "lab_settings.json"
MAX_EDGES_ENV = "SEDN_MAX_EDGES"


@dataclass
class LabSettings:
    """Tunable limits for the solver, brute force and labeling storage"""
    solver_max_edges: int = 26
    brute_force_max_edges: int = 22
    labeling_max_entries: int = 10_000_000
    parallel_width: int = 0
    data_dir: str = "data"

    @classmethod
    def from_dict(cls, data):
        """Create LabSettings from a dictionary, ignoring unknown keys"""
        known = {f.name for f in fields(cls)}
        settings = cls()
        for key, value in data.items():
            if key in known:
                setattr(settings, key, value)
            else:
                logger.debug("[SETTINGS] ignoring unknown key %r", key)
        return settings

    def to_dict(self):
        return asdict(self)

    @classmethod
    def load(cls, config_path=None, environ=None):
        """Defaults, then the JSON config file, then the environment"""
        config_path = Path(config_path) if config_path else DEFAULT_CONFIG_PATH
        environ = os.environ if environ is None else environ

        settings = cls()
        if config_path.exists():
            try:
                with open(config_path, 'r', encoding='utf-8') as f:
                    settings = cls.from_dict(json.load(f))
            except (json.JSONDecodeError, OSError) as e:
                logger.warning("[SETTINGS] could not read %s: %s", config_path, e)

        raw_cap = environ.get(MAX_EDGES_ENV)
        if raw_cap:
            try:
                settings.solver_max_edges = int(raw_cap)
            except ValueError:
                logger.warning("[SETTINGS] %s=%r is not an integer; keeping %d",
                               MAX_EDGES_ENV, raw_cap, settings.solver_max_edges)
        return settings


_active = None


def get_settings():
    """Process-wide settings, loaded on first use"""
    global _active
    if _active is None:
        _active = LabSettings.load()
    return _active


def set_settings(settings):
    global _active
    _active = settings
