"""Logger and utils"""
from .logger import Logger, LoggerConfig, colorize  # noqa
