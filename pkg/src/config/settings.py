"""
Settings for lascoux_gz: verification bounds, output format and log level.

Stored as JSON in ~/.lascoux_gz/settings.json. Command-line flags win over
stored values, stored values win over DEFAULT_SETTINGS.
"""

import json
from pathlib import Path
from typing import Any, Dict, Optional, Union
import logging

logger = logging.getLogger(__name__)

DEFAULT_DIR_NAME = '.lascoux_gz'


class Settings:
    DEFAULT_SETTINGS = {
        'max_n': 3,
        'max_part': 3,
        'denominator': 2,
        'seed': 20240601,
        'random_polynomials': 100,
        'workers': 1,
        'output_format': 'text',
        'log_level': 'INFO',
    }
    OUTPUT_FORMATS = ('text', 'json')

    def __init__(self, settings_dir: Optional[Union[str, Path]] = None):
        self.settings_dir = Path(settings_dir) if settings_dir else Path.home() / DEFAULT_DIR_NAME
        self.settings_file = self.settings_dir / 'settings.json'
        self.settings_dir.mkdir(parents=True, exist_ok=True)
        self.settings = self.load_settings()

    @property
    def default_log_file(self) -> Path:
        return self.settings_dir / 'lascoux_gz.log'

    def _clean(self, stored: Dict[str, Any]) -> Dict[str, Any]:
        """Keep the stored values whose type matches the default; log and drop the rest."""
        cleaned = {}
        for key, value in stored.items():
            default = self.DEFAULT_SETTINGS.get(key)
            if default is None:
                cleaned[key] = value
            elif isinstance(default, int) and (isinstance(value, bool) or not isinstance(value, int)):
                logger.warning(f"Ignoring setting {key}={value!r}: expected an integer")
            elif key == 'output_format' and value not in self.OUTPUT_FORMATS:
                logger.warning(f"Ignoring setting output_format={value!r}")
            else:
                cleaned[key] = value
        return cleaned

    def load_settings(self) -> Dict[str, Any]:
        settings = self.DEFAULT_SETTINGS.copy()
        if not self.settings_file.exists():
            logger.info("No settings file found, using defaults")
            return settings
        try:
            with open(self.settings_file, 'r') as f:
                stored = json.load(f)
            if not isinstance(stored, dict):
                raise ValueError(f"expected a JSON object, got {type(stored).__name__}")
        except Exception as e:
            logger.error(f"Error loading settings from {self.settings_file}: {e}")
            return settings
        settings.update(self._clean(stored))
        logger.info(f"Settings loaded from {self.settings_file}")
        return settings

    def save_settings(self) -> bool:
        try:
            with open(self.settings_file, 'w') as f:
                json.dump(self.settings, f, indent=2, sort_keys=True)
            logger.debug(f"Settings saved to {self.settings_file}")
            return True
        except Exception as e:
            logger.error(f"Error saving settings: {e}")
            return False

    def get(self, key: str, default: Any = None) -> Any:
        return self.settings.get(key, default)

    def set(self, key: str, value: Any) -> None:
        """Set a value and write the file."""
        self.settings[key] = value
        self.save_settings()

    def resolve(self, key: str, override: Any = None) -> Any:
        """The override when given, else the stored value, else the default."""
        if override is not None:
            return override
        return self.settings.get(key, self.DEFAULT_SETTINGS.get(key))
