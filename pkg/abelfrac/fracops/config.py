"""
Orders and grids for the discrete fractional operators
"""
import math

import chex
import numpy as np
from flax import struct


class GridAlignmentError(ValueError):
    """Raised when a point does not lie on the grid of the requested step size"""


@struct.dataclass
class FracOrder:
    beta: float
    """the fractional order, beta > 0"""
    n: int = struct.field(pytree_node=False)
    """the integer with n - 1 < beta <= n"""

    @classmethod
    def create(cls, beta: float) -> "FracOrder":
        beta = float(beta)
        if not beta > 0:
            raise ValueError(f"fractional order must be positive, got {beta}")
        return cls(beta=beta, n=int(math.ceil(beta)))

    @property
    def gamma(self) -> float:
        """n - beta, the order of the fractional integral applied to the n-th derivative"""
        return self.n - self.beta


@struct.dataclass
class Grid:
    upper: float
    k: int = struct.field(pytree_node=False)
    h: float
    nodes: chex.Array
    """t_j = j * h for j = 0..k, with t_0 = 0 and t_k = upper exactly"""


def make_grid(upper: float, k: int) -> Grid:
    """Uniform subdivision of [0, upper] into k subintervals"""
    if not upper > 0:
        raise ValueError(f"grid upper bound must be positive, got {upper}")
    if int(k) != k or k < 1:
        raise ValueError(f"number of subintervals must be a positive integer, got {k}")
    k = int(k)
    h = upper / k
    nodes = np.arange(k + 1, dtype=np.float64) * h
    # j * h can land an ulp away from upper
    nodes[-1] = upper
    return Grid(upper=float(upper), k=k, h=h, nodes=nodes)
