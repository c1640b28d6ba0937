"""
Configuration of a command line run
"""
import dataclasses
from typing import Any, Dict, List, Optional

import dacite

from abelfrac.quad import DEFAULT_TOL
from abelfrac.utils.tools import parse_fraction, parse_int, parse_list

COMMANDS = ("solve", "table", "converge", "residual")
FORMATS = ("csv", "json", "pretty")


class ConfigError(ValueError):
    pass


@dataclasses.dataclass
class RunConfig:
    """
    Configuration dataclass for a run of abel-frac
    """

    command: str = "solve"
    """
    One of solve, table, converge and residual
    """

    f: Optional[str] = None
    """
    Right-hand side f(x) in the expression language, e.g. "exp(x) - 1". Must satisfy f(0) = 0
    """

    alpha: Optional[float] = None
    """
    Kernel exponent in (0, 1). Fractions such as "4/5" are accepted and rounded once
    """

    points: List[float] = dataclasses.field(default_factory=list)
    """
    Query points x. The problem is posed on [0, max(points)]
    """

    ks: List[int] = dataclasses.field(default_factory=list)
    """
    Numbers of subintervals of [0, x]. solve and residual take exactly one, converge at least two in increasing order
    """

    tol: float = DEFAULT_TOL
    """
    Absolute tolerance of the quadrature behind the exact solution and the residual
    """

    format: str = "pretty"
    """
    Output format, one of csv, json and pretty. csv and json always carry full precision
    """

    digits: int = 10
    """
    Significant digits shown by the pretty format, in [1, 17]
    """

    preset: Optional[str] = None
    """
    Name of a built-in example (example1, example2, example3) supplying f, alpha, points and ks
    """

    g: Optional[str] = None
    """
    Candidate solution checked by residual. When unset the interpolated approximate solution for ks[0] is checked
    """

    samples: int = 201
    """
    Number of equally spaced samples of the approximate solution used to interpolate it for residual
    """

    workspace: Optional[str] = None
    """
    If set, the config and the csv / json results are also written to <workspace>/<exp_name>/
    """

    exp_name: Optional[str] = None
    """
    Name of the experiment directory. Defaults to the command followed by a time stamp
    """

    clear_out: bool = False
    """
    Remove an existing experiment directory before writing into it
    """

    verbose: bool = False
    """
    Show progress bars and extra diagnostics on stderr
    """

    def validate(self) -> "RunConfig":
        if self.command not in COMMANDS:
            raise ConfigError(f"unknown command {self.command!r}, expected one of {', '.join(COMMANDS)}")
        if self.format not in FORMATS:
            raise ConfigError(f"unknown format {self.format!r}, expected one of {', '.join(FORMATS)}")
        if not 1 <= self.digits <= 17:
            raise ConfigError(f"digits must lie in [1, 17], got {self.digits}")
        if not self.tol > 0:
            raise ConfigError(f"tol must be positive, got {self.tol}")
        if self.f is None or self.alpha is None:
            raise ConfigError("both f and alpha are required, either directly or through a preset")
        if len(self.points) == 0:
            raise ConfigError("at least one query point is required")
        if any(not x >= 0 for x in self.points):
            raise ConfigError(f"query points must be non-negative, got {self.points}")
        if max(self.points) <= 0:
            raise ConfigError("at least one query point must be positive")
        if len(self.ks) == 0 and not (self.command == "residual" and self.g is not None):
            raise ConfigError("at least one value of k is required")
        if any(k < 1 for k in self.ks):
            raise ConfigError(f"values of k must be positive, got {self.ks}")
        if self.command in ("solve", "residual") and len(self.ks) > 1:
            raise ConfigError(f"{self.command} takes exactly one value of k, got {self.ks}")
        if self.command == "converge":
            if len(self.ks) < 2 or any(b <= a for a, b in zip(self.ks[:-1], self.ks[1:])):
                raise ConfigError(f"converge needs at least two strictly increasing values of k, got {self.ks}")
            if len(self.points) != 1:
                raise ConfigError(f"converge takes exactly one query point, got {self.points}")
        if self.samples < 2:
            raise ConfigError(f"samples must be at least 2, got {self.samples}")
        return self

    def echo(self) -> Dict[str, Any]:
        """The fields that determine the results, echoed into json output"""
        skip = ("workspace", "exp_name", "clear_out", "verbose")
        return {k: v for k, v in dataclasses.asdict(self).items() if k not in skip}


_CONVERTERS = dict(
    alpha=parse_fraction,
    tol=parse_fraction,
    points=lambda v: parse_list(v, parse_fraction),
    ks=lambda v: parse_list(v, parse_int),
    digits=parse_int,
    samples=parse_int,
)


def normalize(raw: Dict[str, Any]) -> Dict[str, Any]:
    """
    Converts the values of one config source to their field types. Numbers may be given as text
    (fractions included) and lists as comma separated text.
    """
    data = dict(raw)
    try:
        for key, convert in _CONVERTERS.items():
            if data.get(key) is not None:
                data[key] = convert(data[key])
    except ValueError as e:
        raise ConfigError(str(e)) from e
    for key in ("f", "g"):
        if data.get(key) is not None:
            data[key] = str(data[key])
    return data


def build_run_config(raw: Dict[str, Any]) -> RunConfig:
    """Types and validates a merged config dict"""
    try:
        cfg = dacite.from_dict(data_class=RunConfig, data=normalize(raw), config=dacite.Config(strict=True))
    except dacite.DaciteError as e:
        raise ConfigError(str(e)) from e
    return cfg.validate()
