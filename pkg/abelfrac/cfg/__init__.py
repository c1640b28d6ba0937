"""Configuration tools"""
from .parse import merge_cfgs, parse_cfg  # noqa
