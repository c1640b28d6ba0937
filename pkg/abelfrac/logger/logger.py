import os.path as osp
import shutil
import sys
import warnings
from collections import defaultdict
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, Union

import numpy as np
from omegaconf import DictConfig, OmegaConf

from abelfrac.utils.io import save

color2num = dict(
    gray=30,
    red=31,
    green=32,
    yellow=33,
    blue=34,
    magenta=35,
    cyan=36,
    white=37,
    crimson=38,
)


def colorize(string, color, bold=False, highlight=False):
    """
    Colorize a string for terminals.
    """
    attr = []
    num = color2num[color]
    if highlight:
        num += 10
    attr.append(str(num))
    if bold:
        attr.append("1")
    return "\x1b[%sm%s\x1b[0m" % (";".join(attr), string)


@dataclass
class LoggerConfig:
    workspace: Union[str, None] = None
    exp_name: Union[str, None] = None
    clear_out: bool = False
    color: bool = True
    cfg: Dict = None


class Logger:
    """
    Logging tool for runs of the solver.

    Diagnostics are printed to stderr so stdout only ever carries results. When a workspace is
    given, the run config and result files are stored in <workspace>/<exp_name>/
    """

    def __init__(
        self,
        workspace: str = None,
        exp_name: str = "default_exp",
        clear_out: bool = False,
        color: bool = True,
        cfg: Union[Dict, DictConfig, None] = None,
    ) -> None:
        self.color = color
        self.exp_path = None
        if workspace is not None:
            self.exp_path = osp.join(workspace, exp_name)
            if clear_out and osp.exists(self.exp_path):
                shutil.rmtree(self.exp_path, ignore_errors=True)
            Path(self.exp_path).mkdir(parents=True, exist_ok=True)
            if cfg is not None:
                self.save_config(cfg)

        self.last_log_step = 0
        self.data = defaultdict(dict)
        self.data_log_summary = defaultdict(dict)
        self.stats = {}

    @classmethod
    def create_from_cfg(cls, cfg: LoggerConfig):
        return cls(
            workspace=cfg.workspace,
            exp_name=cfg.exp_name,
            clear_out=cfg.clear_out,
            color=cfg.color,
            cfg=cfg.cfg,
        )

    def save_config(self, config: Union[Dict, DictConfig], verbose=0):
        """
        save the configuration of a run to the experiment directory
        """
        if isinstance(config, DictConfig):
            config = OmegaConf.to_container(config)
        if verbose > 1:
            self.print("Saving config:", color="cyan", bold=True)
            self.print(OmegaConf.to_yaml(config))
        if self.exp_path is None:
            return
        save(osp.join(self.exp_path, "config.yml"), OmegaConf.to_yaml(config))

    def save_result(self, filename: str, text: str):
        """writes a rendered result into the experiment directory, if there is one"""
        if self.exp_path is None:
            return None
        path = osp.join(self.exp_path, filename)
        save(path, text)
        return path

    def print(self, msg, file=None, color="", bold=False):
        """
        print to the terminal, stderr by default
        """
        file = sys.stderr if file is None else file
        if color == "" or not self.color:
            print(msg, file=file)
        else:
            print(colorize(msg, color, bold=bold), file=file)
        file.flush()

    def error(self, msg):
        self.print(f"error: {msg}", color="red", bold=True)

    def store(self, tag="default", log_summary=False, **kwargs):
        """
        Stores scalar values or arrays into logger by tag and key to then be logged

        if log_summary is True, logs std, min, and max
        """
        for k, v in kwargs.items():
            self.data[tag][k] = v
            self.data_log_summary[tag][k] = log_summary

    def pretty_print_table(self, data, file=None):
        file = sys.stderr if file is None else file
        key_lens = [len(key) for key in data.keys()]
        max_key_len = max(15, max(key_lens))
        keystr = "%" + "%d" % max_key_len
        fmt = "| " + keystr + "s | %15s |"
        n_slashes = 22 + max_key_len
        print("-" * n_slashes, file=file)
        for key in sorted(data.keys()):
            val = data[key]
            valstr = "%8.3g" % val if hasattr(val, "__float__") else val
            print(fmt % (key, valstr), file=file)
        print("-" * n_slashes, file=file, flush=True)

    def log(self, step):
        """
        Reduces the stored data to scalar statistics, keyed by tag/key.

        Statistics are then retrievable as a dict via the return value
        """
        if step < self.last_log_step:
            warnings.warn(
                f"logged at step {step} but previously logged at step {self.last_log_step}",
                RuntimeWarning,
            )
        self.last_log_step = step

        for tag in self.data.keys():
            for k, v in self.data[tag].items():
                if isinstance(v, (list, np.ndarray)):
                    if len(v) == 0:
                        continue
                    vals = np.asarray(v, dtype=np.float64)
                    avg = vals.mean()
                    key_vals = {f"{tag}/{k}_avg": avg}
                    if self.data_log_summary[tag][k]:
                        key_vals[f"{tag}/{k}_std"] = vals.std()
                        key_vals[f"{tag}/{k}_min"] = vals.min()
                        key_vals[f"{tag}/{k}_max"] = vals.max()
                else:
                    key_vals = {f"{tag}/{k}": v}
                self.stats.update(key_vals)
        return self.stats

    def reset(self):
        """
        call this each time after log is called
        """
        self.data = defaultdict(dict)
        self.stats = {}
