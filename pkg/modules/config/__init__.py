"""
Configuration module: analysis, output and logging settings
"""

from .config_manager import (
    AnalysisConfig,
    ConfigManager,
    LoggingConfig,
    OutputConfig,
    get_config_manager,
    reload_configuration,
)

__all__ = [
    'AnalysisConfig',
    'ConfigManager',
    'LoggingConfig',
    'OutputConfig',
    'get_config_manager',
    'reload_configuration'
]
