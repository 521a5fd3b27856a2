"""
Configuration, logging and error handling
"""

from .config import Config
from .error_handler import ConfSpaceError, ErrorHandler
from .logger import LoggerMixin, get_logger, setup_logging

__all__ = [
    "Config",
    "ConfSpaceError",
    "ErrorHandler",
    "LoggerMixin",
    "get_logger",
    "setup_logging",
]
