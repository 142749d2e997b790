"""
Utility modules for the toolkit.

This package contains helper functions and configuration management.
"""

from .config import load_config, get_config, reset_config

__all__ = ["load_config", "get_config", "reset_config"]


