"""
Centralized Configuration Manager for the field classification toolkit
"""

import os
import json
import logging
from typing import Dict, Any, Optional, List
from dataclasses import dataclass, asdict

from dotenv import load_dotenv

logger = logging.getLogger(__name__)

SUPPORTED_PRIMES = (3, 5)


@dataclass
class AnalysisConfig:
    """Arithmetic and sweep settings"""
    prime: int = 5
    table_max: int = 1000
    dataset_path: Optional[str] = None
    sweep_limit: int = 1000
    workers: int = 1
    factor_cap: int = 10**9


@dataclass
class OutputConfig:
    """Rendering settings for command output"""
    unicode: bool = False
    json_indent: int = 2


@dataclass
class LoggingConfig:
    """Logging configuration settings"""
    level: str = "INFO"
    format: str = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    log_dir: Optional[str] = None
    enable_file_logging: bool = False


class ConfigManager:
    """Centralized configuration management"""

    def __init__(self, config_file: Optional[str] = None):
        self.config_file = config_file
        self._config_data = {}

        self.analysis: AnalysisConfig = AnalysisConfig()
        self.output: OutputConfig = OutputConfig()
        self.logging: LoggingConfig = LoggingConfig()

        self._load_configuration()

    def _load_configuration(self):
        """Load configuration from .env, environment and optional file"""
        load_dotenv(override=False)

        if self.config_file and os.path.exists(self.config_file):
            try:
                with open(self.config_file, 'r') as f:
                    self._config_data = json.load(f)
                logger.info(f"Loaded configuration from {self.config_file}")
            except Exception as e:
                logger.warning(f"Failed to load config file {self.config_file}: {e}")
        elif self.config_file:
            logger.warning(f"Config file {self.config_file} not found, using environment and defaults")

        self._load_analysis_config()
        self._load_output_config()
        self._load_logging_config()

    def _lookup(self, env_var: str, section: str, key: str, default: Any) -> Any:
        """Environment variable first, then the config file section, then the default"""
        value = os.environ.get(env_var)
        if value is None:
            value = self._config_data.get(section, {}).get(key, default)
        return value

    def _int(self, env_var: str, section: str, key: str, default: int) -> int:
        value = self._lookup(env_var, section, key, default)
        try:
            return int(value)
        except (TypeError, ValueError):
            logger.warning(f"Invalid integer for {env_var} / {section}.{key}: {value!r}, using {default}")
            return default

    def _bool(self, env_var: str, section: str, key: str, default: bool) -> bool:
        return str(self._lookup(env_var, section, key, default)).lower() == "true"

    def _load_analysis_config(self):
        """Load analysis configuration"""
        defaults = AnalysisConfig()
        self.analysis = AnalysisConfig(
            prime=self._int("QUINTIC_PRIME", "analysis", "prime", defaults.prime),
            table_max=self._int("QUINTIC_TABLE_MAX", "analysis", "table_max", defaults.table_max),
            dataset_path=os.environ.get("QUINTIC_DATASET") or self._config_data.get("analysis", {}).get("dataset_path"),
            sweep_limit=self._int("QUINTIC_SWEEP_LIMIT", "analysis", "sweep_limit", defaults.sweep_limit),
            workers=self._int("QUINTIC_WORKERS", "analysis", "workers", defaults.workers),
            factor_cap=self._int("QUINTIC_FACTOR_CAP", "analysis", "factor_cap", defaults.factor_cap)
        )
        logger.debug("Analysis configuration loaded")

    def _load_output_config(self):
        """Load output configuration"""
        defaults = OutputConfig()
        self.output = OutputConfig(
            unicode=self._bool("QUINTIC_UNICODE", "output", "unicode", defaults.unicode),
            json_indent=self._int("QUINTIC_JSON_INDENT", "output", "json_indent", defaults.json_indent)
        )
        logger.debug("Output configuration loaded")

    def _load_logging_config(self):
        """Load Logging configuration"""
        defaults = LoggingConfig()
        self.logging = LoggingConfig(
            level=str(self._lookup("LOG_LEVEL", "logging", "level", defaults.level)).upper(),
            format=self._lookup("LOG_FORMAT", "logging", "format", defaults.format),
            log_dir=os.environ.get("LOG_DIR") or self._config_data.get("logging", {}).get("log_dir"),
            enable_file_logging=self._bool("ENABLE_FILE_LOGGING", "logging", "enable_file_logging", False)
        )
        logger.debug("Logging configuration loaded")

    def get_status(self) -> Dict[str, Any]:
        """Get configuration status"""
        return {
            "configurations": {
                "analysis": True,
                "output": True,
                "logging": True
            },
            "dataset": self.analysis.dataset_path or "embedded",
            "config_file_used": bool(self.config_file and os.path.exists(self.config_file)),
            "file_logging": bool(self.logging.enable_file_logging and self.logging.log_dir)
        }

    def validate(self) -> Dict[str, List[str]]:
        """Validate configuration and return problems by severity"""
        validation_result = {
            "critical": [],
            "optional": [],
            "recommendations": []
        }

        if self.analysis.prime not in SUPPORTED_PRIMES:
            validation_result["critical"].append(
                f"QUINTIC_PRIME must be one of {SUPPORTED_PRIMES}, got {self.analysis.prime}"
            )
        if self.analysis.table_max < 2:
            validation_result["critical"].append(
                f"QUINTIC_TABLE_MAX must be at least 2, got {self.analysis.table_max}"
            )
        if self.analysis.dataset_path and not os.path.exists(self.analysis.dataset_path):
            validation_result["critical"].append(
                f"QUINTIC_DATASET points to a missing file: {self.analysis.dataset_path}"
            )
        if self.analysis.workers < 1:
            validation_result["critical"].append(
                f"QUINTIC_WORKERS must be at least 1, got {self.analysis.workers}"
            )

        if self.logging.enable_file_logging and not self.logging.log_dir:
            validation_result["optional"].append("LOG_DIR (file logging is enabled without a directory)")

        if self.analysis.prime == 3:
            validation_result["recommendations"].append(
                "p = 3 applies to the normalize and relations commands; classification commands always use p = 5"
            )
        if self.analysis.table_max > 100_000 and self.analysis.workers == 1:
            validation_result["recommendations"].append("Consider QUINTIC_WORKERS > 1 for large sweeps")

        return validation_result

    def print_configuration_status(self):
        """Print detailed configuration status"""
        status = self.get_status()
        validation = self.validate()

        print("=" * 70)
        print("PURE METACYCLIC FIELD TOOLKIT - CONFIGURATION STATUS")
        print("=" * 70)

        print("\nAnalysis:")
        for key, value in asdict(self.analysis).items():
            print(f"  {key}: {value if value is not None else 'embedded' if key == 'dataset_path' else '-'}")

        print("\nOutput:")
        for key, value in asdict(self.output).items():
            print(f"  {key}: {value}")

        print(f"\nLogging: level {self.logging.level}, file logging "
              f"{'on' if status['file_logging'] else 'off'}")

        if validation["critical"]:
            print("\nInvalid Configuration:")
            for var in validation["critical"]:
                print(f"  - {var}")

        if validation["optional"]:
            print("\nIncomplete Optional Configuration:")
            for var in validation["optional"]:
                print(f"  - {var}")

        if validation["recommendations"]:
            print("\nRecommendations:")
            for rec in validation["recommendations"]:
                print(f"  - {rec}")

        if not validation["critical"]:
            print("\nConfiguration valid")

        print("=" * 70)

    def to_dict(self) -> Dict[str, Any]:
        """Convert configuration to dictionary"""
        return {
            "analysis": asdict(self.analysis),
            "output": asdict(self.output),
            "logging": {
                "level": self.logging.level,
                "log_dir": self.logging.log_dir,
                "enable_file_logging": self.logging.enable_file_logging
            }
        }


# Global configuration manager instance
_config_manager = None


def get_config_manager(config_file: Optional[str] = None) -> ConfigManager:
    """Get the global configuration manager instance"""
    global _config_manager

    if _config_manager is None:
        _config_manager = ConfigManager(config_file)

    return _config_manager


def reload_configuration(config_file: Optional[str] = None) -> ConfigManager:
    """Reload the global configuration"""
    global _config_manager
    _config_manager = ConfigManager(config_file)
    return _config_manager
