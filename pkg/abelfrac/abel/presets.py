"""
Built-in example problems with published reference tables

- example1: f(x) = e^x - 1, alpha = 1/2, g(x) = e^x erf(sqrt(x)) / sqrt(pi)
- example2: f(x) = x, alpha = 4/5, g(x) = (5/4) sin(pi/5) / pi x^(4/5)
- example3: f(x) = x^(7/6), alpha = 1/3, g(x) = 7 sqrt(3) / (12 pi) B(7/6, 1/3) sqrt(x)

f'(t) of example3 behaves like t^(1/6) at 0, so the approximate solution converges at a
reduced rate there.
"""
import dataclasses
import math
from typing import Callable, Dict, List

import numpy as np

from abelfrac.special import beta, erf
from abelfrac.utils.tools import parse_fraction

from .config import AbelProblem


@dataclasses.dataclass(frozen=True)
class ExamplePreset:
    name: str
    f: str
    """right-hand side in the expression language"""
    alpha: str
    """kernel exponent as a fraction"""
    points: List[float]
    ks: List[int]
    """the k values of the published table"""
    exact: Callable[[float], float]
    """closed form of the exact solution"""
    table: Dict[int, List[float]]
    """published approximate values per k, aligned with points"""
    table_exact: List[float]
    """published exact column"""

    def problem(self) -> AbelProblem:
        return AbelProblem.create(self.f, parse_fraction(self.alpha), upper=max(self.points))


def _example1_exact(x):
    return np.exp(x) * erf(np.sqrt(x)) / math.sqrt(math.pi)


def _example2_exact(x):
    return 1.25 * math.sin(math.pi / 5) / math.pi * np.power(x, 0.8)


def _example3_exact(x):
    return 7.0 * math.sqrt(3.0) / (12.0 * math.pi) * beta(7.0 / 6.0, 1.0 / 3.0) * np.sqrt(x)


EXAMPLES: Dict[str, ExamplePreset] = {
    "example1": ExamplePreset(
        name="example1",
        f="exp(x) - 1",
        alpha="1/2",
        points=[0.1, 0.2, 0.3],
        ks=[1, 10, 100],
        exact=_example1_exact,
        table={
            1: [0.2154319668, 0.3267280013, 0.4300194238],
            10: [0.2152921762, 0.3258941876, 0.4275954299],
            100: [0.2152904646, 0.3258841023, 0.4275658716],
        },
        table_exact=[0.2152905021, 0.3258840762, 0.4275656575],
    ),
    "example2": ExamplePreset(
        name="example2",
        f="x",
        alpha="4/5",
        points=[0.4, 0.5, 0.6],
        ks=[1, 10],
        exact=_example2_exact,
        table={
            1: [0.1123639036, 0.1343243751, 0.1554174667],
            10: [0.1123639036, 0.1343243751, 0.1554174668],
        },
        table_exact=[0.1123639037, 0.1343243752, 0.1554174668],
    ),
    "example3": ExamplePreset(
        name="example3",
        f="x^(7/6)",
        alpha="1/3",
        points=[0.6, 0.7, 0.8],
        ks=[10, 100, 1000],
        exact=_example3_exact,
        table={
            1: [0.5605130027, 0.6054232384, 0.6472246667],
            10: [0.6921182258, 0.7475731262, 0.7991892838],
            100: [0.6981839386, 0.7541248475, 0.8061933689],
            1000: [0.6985886509, 0.7545620072, 0.8066606797],
        },
        table_exact=[0.6986144912, 0.7545898940, 0.8066905286],
    ),
}


def get_preset(name: str) -> ExamplePreset:
    if name not in EXAMPLES:
        raise KeyError(f"{name} is not a known preset. Known presets are {list(EXAMPLES.keys())}")
    return EXAMPLES[name]


def exact_closed_form(name: str) -> Callable[[float], float]:
    return get_preset(name).exact
