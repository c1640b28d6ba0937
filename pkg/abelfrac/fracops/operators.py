"""
Discrete left-sided fractional operators on uniform grids

- `gl_derivative`: the truncated Grunwald-Letnikov difference, first order accurate
- `frac_integral_trap`: the modified trapezoidal rule for the Riemann-Liouville integral J^alpha
- `caputo_trap`: the same rule applied to f^(n), approximating the Caputo derivative D^beta

The trapezoidal operators integrate the piecewise linear interpolant of the sampled function
exactly against the kernel (b - t)^(gamma - 1) / Gamma(gamma), so they are exact on functions
that are linear in t and second order accurate on smooth ones.
"""
import math
from typing import Union

import numpy as np

from abelfrac.expr import Expr, nth_derivative
from abelfrac.quad.kronrod import as_integrand
from abelfrac.special import gamma as gamma_fn
from abelfrac.utils.types import RealFn

from .config import FracOrder, GridAlignmentError, make_grid

GRID_ALIGNMENT_RTOL = 1e-12


def gl_weights(alpha: float, nterms: int) -> np.ndarray:
    """
    Returns w_r = (-1)^r binom(alpha, r) for r = 0..nterms using the recurrence
    w_0 = 1, w_r = w_{r-1} (r - 1 - alpha) / r.
    """
    if nterms < 0:
        raise ValueError(f"nterms must be non-negative, got {nterms}")
    w = np.empty(nterms + 1, dtype=np.float64)
    w[0] = 1.0
    for r in range(1, nterms + 1):
        w[r] = w[r - 1] * (r - 1 - alpha) / r
    return w


def gl_derivative(f: Union[Expr, RealFn], alpha: float, x: float, h: float) -> float:
    """
    h^(-alpha) sum_{r=0}^{n} w_r f(x - r h) with n = x / h. f is taken to vanish for negative
    arguments, so the series stops at t = 0.
    """
    if not h > 0:
        raise ValueError(f"step size must be positive, got {h}")
    if not alpha > 0:
        raise ValueError(f"order must be positive, got {alpha}")
    n = int(round(x / h))
    if n < 1 or abs(n * h - x) > GRID_ALIGNMENT_RTOL * abs(x):
        raise GridAlignmentError(f"x={x!r} is not a positive integer multiple of h={h!r}")
    fn = as_integrand(f)
    points = np.maximum(x - np.arange(n + 1, dtype=np.float64) * h, 0.0)
    return h ** (-alpha) * math.fsum(gl_weights(alpha, n) * fn(points))


def trapezoid_weights(gamma: float, k: int) -> np.ndarray:
    """
    Coefficients of the modified trapezoidal rule for a kernel of order `gamma` on k equal
    subintervals. Index 0 multiplies the value at t = 0 and index k the value at the upper end:

        w_0 = (k - 1)^(gamma + 1) - (k - 1 - gamma) k^gamma
        w_j = (k - j + 1)^(gamma + 1) - 2 (k - j)^(gamma + 1) + (k - j - 1)^(gamma + 1),  0 < j < k
        w_k = 1
    """
    if int(k) != k or k < 1:
        raise ValueError(f"number of subintervals must be a positive integer, got {k}")
    if gamma < 0:
        raise ValueError(f"kernel order must be non-negative, got {gamma}")
    k = int(k)
    p = gamma + 1.0
    w = np.empty(k + 1, dtype=np.float64)
    w[0] = (k - 1.0) ** p - (k - 1.0 - gamma) * float(k) ** gamma
    m = k - np.arange(1, k, dtype=np.float64)
    w[1:k] = (m + 1.0) ** p - 2.0 * m**p + (m - 1.0) ** p
    w[k] = 1.0
    return w


def _trapezoid_sum(values: np.ndarray, gamma: float, k: int) -> float:
    # fsum over a fixed order keeps the result independent of any array chunking
    return math.fsum(trapezoid_weights(gamma, k) * values)


def frac_integral_trap(f: Union[Expr, RealFn], alpha: float, b: float, k: int) -> float:
    """
    Modified trapezoidal approximation T(f, h, alpha) of the Riemann-Liouville integral
    (J^alpha f)(b) with h = b / k.
    """
    if not alpha > 0:
        raise ValueError(f"order must be positive, got {alpha}")
    grid = make_grid(b, k)
    values = as_integrand(f)(grid.nodes)
    return grid.h**alpha / gamma_fn(alpha + 2.0) * _trapezoid_sum(values, alpha, grid.k)


def caputo_trap(f: Expr, order: Union[FracOrder, float], b: float, k: int) -> float:
    """
    Modified trapezoidal approximation C(f, h, beta) of the Caputo derivative (D^beta f)(b),
    i.e. T(f^(n), h, n - beta) with f^(n) taken symbolically.
    """
    if not isinstance(order, FracOrder):
        order = FracOrder.create(order)
    gamma = order.gamma
    grid = make_grid(b, k)
    values = as_integrand(nth_derivative(f, order.n))(grid.nodes)
    return grid.h**gamma / gamma_fn(gamma + 2.0) * _trapezoid_sum(values, gamma, grid.k)
