"""
Application configuration and settings management.

Handles default budgets, worker count, output format and the list of recently
used input files. Command-line flags always take precedence over these values.
"""

import os
from pathlib import Path
from typing import List, Optional, Union

from PySide6.QtCore import QSettings

from .constants import AppInfo, Budgets, MAX_RECENT_INPUTS, OutputFormats


class Config:
    """
    Manages persisted defaults for command-line runs.

    Provides centralized access to settings with default values and type safety.
    """

    def __init__(self, ini_path: Optional[Union[str, Path]] = None):
        """
        Initialize configuration.

        Args:
            ini_path: Explicit INI file; the per-user native store is used when omitted
        """
        if ini_path is None:
            self.settings = QSettings(AppInfo.ORGANIZATION, AppInfo.SETTINGS_APPLICATION)
        else:
            self.settings = QSettings(str(ini_path), QSettings.Format.IniFormat)
        self._recent_inputs: List[str] = []
        self._load_recent_inputs()

    # Budgets
    def get_flat_budget(self) -> int:
        """
        Get the flat enumeration budget.

        Returns:
            Maximum number of flats a single enumeration may produce
        """
        return self.settings.value("budget/flats", Budgets.FLATS, int)

    def set_flat_budget(self, budget: int) -> None:
        """
        Save the flat enumeration budget.

        Args:
            budget: Positive flat count
        """
        self._require_positive("flat budget", budget)
        self.settings.setValue("budget/flats", budget)

    def get_transversal_budget(self) -> int:
        """
        Get the transversal budget of the verifier.

        Returns:
            Maximum product of part sizes
        """
        return self.settings.value("budget/transversals", Budgets.TRANSVERSALS, int)

    def set_transversal_budget(self, budget: int) -> None:
        self._require_positive("transversal budget", budget)
        self.settings.setValue("budget/transversals", budget)

    # Search
    def get_search_node_budget(self) -> int:
        """Get the node budget of the exhaustive search."""
        return self.settings.value("search/node_budget", Budgets.SEARCH_NODES, int)

    def set_search_node_budget(self, budget: int) -> None:
        self._require_positive("node budget", budget)
        self.settings.setValue("search/node_budget", budget)

    def get_search_time_limit(self) -> float:
        """
        Get the search time limit.

        Returns:
            Seconds before a search reports exhaustion
        """
        return self.settings.value("search/time_limit", Budgets.SEARCH_SECONDS, float)

    def set_search_time_limit(self, seconds: float) -> None:
        if seconds <= 0:
            raise ValueError(f"time limit must be positive, got {seconds}")
        self.settings.setValue("search/time_limit", seconds)

    # Execution
    def get_workers(self) -> int:
        """Get the default number of worker threads."""
        return self.settings.value("run/workers", Budgets.WORKERS, int)

    def set_workers(self, workers: int) -> None:
        self._require_positive("worker count", workers)
        self.settings.setValue("run/workers", workers)

    # Output
    def get_output_format(self) -> str:
        """
        Get the default output format.

        Returns:
            One of 'json', 'table', 'csv'
        """
        value = self.settings.value("output/format", OutputFormats.DEFAULT, str)
        return value if value in OutputFormats.ALL else OutputFormats.DEFAULT

    def set_output_format(self, fmt: str) -> None:
        """
        Save the default output format.

        Args:
            fmt: One of 'json', 'table', 'csv'
        """
        if fmt not in OutputFormats.ALL:
            raise ValueError(f"unknown output format {fmt!r}")
        self.settings.setValue("output/format", fmt)

    # Recent inputs
    def _load_recent_inputs(self) -> None:
        """Load recent inputs list from settings."""
        size = self.settings.beginReadArray("recent_inputs")
        self._recent_inputs = []
        for i in range(size):
            self.settings.setArrayIndex(i)
            file_path = self.settings.value("path", "", str)
            if file_path and os.path.exists(file_path):
                self._recent_inputs.append(file_path)
        self.settings.endArray()

    def _save_recent_inputs(self) -> None:
        """Save recent inputs list to settings."""
        self.settings.beginWriteArray("recent_inputs")
        for i, file_path in enumerate(self._recent_inputs):
            self.settings.setArrayIndex(i)
            self.settings.setValue("path", file_path)
        self.settings.endArray()

    def get_recent_inputs(self) -> List[str]:
        """
        Get list of recently used input files.

        Returns:
            List of file paths, most recent first
        """
        return self._recent_inputs.copy()

    def add_recent_input(self, file_path: str) -> None:
        """
        Add file to recent inputs list.

        Args:
            file_path: Path to the file
        """
        file_path = str(Path(file_path).resolve())
        if file_path in self._recent_inputs:
            self._recent_inputs.remove(file_path)
        self._recent_inputs.insert(0, file_path)
        self._recent_inputs = self._recent_inputs[:MAX_RECENT_INPUTS]
        self._save_recent_inputs()

    def clear_recent_inputs(self) -> None:
        """Clear recent inputs list."""
        self._recent_inputs = []
        self._save_recent_inputs()

    @staticmethod
    def _require_positive(name: str, value: int) -> None:
        if value < 1:
            raise ValueError(f"{name} must be positive, got {value}")

    # Utility methods
    def reset_to_defaults(self) -> None:
        """Reset all settings to default values."""
        self.settings.clear()
        self._recent_inputs = []

    def sync(self) -> None:
        """Force synchronization of settings to persistent storage."""
        self.settings.sync()


# Global configuration instance
_config_instance: Optional[Config] = None


def get_config(ini_path: Optional[Union[str, Path]] = None) -> Config:
    """
    Get global configuration instance.

    Args:
        ini_path: INI file used when the instance is first created

    Returns:
        Config instance
    """
    global _config_instance
    if _config_instance is None:
        _config_instance = Config(ini_path)
    return _config_instance


def reset_config() -> None:
    """Drop the global instance so the next get_config() builds a fresh one."""
    global _config_instance
    _config_instance = None
