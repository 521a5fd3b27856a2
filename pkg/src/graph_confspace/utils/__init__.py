"""
Utility helpers
"""

from .version import get_version, get_version_string

__all__ = ["get_version", "get_version_string"]
