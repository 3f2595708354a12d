"""Modules utilitaires pour tnncell."""

from .system import get_system_info, log_system_info, SystemInfo
from .settings import (
    get_settings_manager,
    get_settings,
    reset_settings,
    SettingsManager,
    AppSettings,
    MAX_CELLS_ENV,
)

__all__ = [
    # System
    "get_system_info",
    "log_system_info",
    "SystemInfo",
    # Settings
    "get_settings_manager",
    "get_settings",
    "reset_settings",
    "SettingsManager",
    "AppSettings",
    "MAX_CELLS_ENV",
]
