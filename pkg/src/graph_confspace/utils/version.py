#!/usr/bin/env python3
"""
Version information for graph-confspace
"""

__version__ = "0.3.0"
__author__ = "graph-confspace developers"


def get_version() -> str:
    """Get the current version string"""
    return __version__


def get_version_string() -> str:
    """Get a formatted version string"""
    return f"graph-confspace v{__version__}"
