"""
parser code for parsing configuration files
"""
from typing import Dict, List, Optional, Union

from omegaconf import DictConfig, OmegaConf


def parse_cfg(cfg_path: str = None, default_cfg_path: str = None, overrides: Optional[List[str]] = None) -> DictConfig:
    """Parses a config file and returns an OmegaConf object. Priority is command line overrides
    (key=value dot-list entries, taken from sys.argv when `overrides` is None), then the provided
    config, then the default config if it exists"""
    if default_cfg_path is not None:
        base = OmegaConf.load(default_cfg_path)
    else:
        base = OmegaConf.create()

    if cfg_path is not None:
        cfg = OmegaConf.load(cfg_path)
        base.merge_with(cfg)

    cli = OmegaConf.from_cli() if overrides is None else OmegaConf.from_dotlist(overrides)
    for k, v in cli.items():
        if v is None:
            cli[k] = True
    base.merge_with(cli)
    return base


def merge_cfgs(*cfgs: Union[Dict, DictConfig, None]) -> DictConfig:
    """Merges configs left to right, later ones win. None entries and None values are skipped"""
    base = OmegaConf.create()
    for cfg in cfgs:
        if cfg is None:
            continue
        if isinstance(cfg, DictConfig):
            cfg = OmegaConf.to_container(cfg)
        base.merge_with({k: v for k, v in cfg.items() if v is not None})
    return base
