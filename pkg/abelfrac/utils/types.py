from typing import Callable, Union

from chex import Array


Real = Union[float, Array]
"""A float64 scalar or a numpy array of them"""

RealFn = Callable[[Real], Real]
