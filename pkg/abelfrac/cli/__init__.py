"""Command line interface"""
from .config import ConfigError, RunConfig, build_run_config  # noqa
from .main import main  # noqa
