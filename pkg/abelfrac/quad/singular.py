"""
Quadrature for weakly singular integrals

    int_0^x phi(t) (x - t)^(gamma - 1) dt,    0 < gamma < 1

The substitution u = (x - t)^gamma turns this into

    (1 / gamma) int_0^(x^gamma) phi(x - u^(1 / gamma)) du

whose integrand is as smooth as phi, so it can be handed to the Gauss-Kronrod engine.
"""
from typing import Union

import numpy as np

from abelfrac.expr import Expr
from abelfrac.utils.types import RealFn

from .kronrod import DEFAULT_TOL, MAX_DEPTH, MAX_EVALUATIONS, QuadResult, as_integrand, integrate_smooth


def integrate_singular(
    phi: Union[Expr, RealFn],
    gamma: float,
    x: float,
    tol: float = DEFAULT_TOL,
    max_depth: int = MAX_DEPTH,
    max_evaluations: int = MAX_EVALUATIONS,
) -> QuadResult:
    """
    Computes int_0^x phi(t) (x - t)^(gamma - 1) dt to an absolute tolerance `tol`.

    phi can be an expression or any vectorized callable and is only ever evaluated on [0, x].
    """
    if not 0 < gamma < 1:
        raise ValueError(f"kernel exponent gamma must lie in (0, 1), got {gamma}")
    if not x > 0:
        raise ValueError(f"upper limit must be positive, got {x}")
    if not tol > 0:
        raise ValueError(f"tolerance must be positive, got {tol}")

    fn = as_integrand(phi)
    inv_gamma = 1.0 / gamma

    def substituted(u: np.ndarray) -> np.ndarray:
        # rounding can push x - u^(1/gamma) a hair below 0 next to the upper end
        return fn(np.maximum(x - u**inv_gamma, 0.0))

    res = integrate_smooth(
        substituted,
        0.0,
        x**gamma,
        tol=tol * gamma,
        max_depth=max_depth,
        max_evaluations=max_evaluations,
    )
    return res.replace(value=res.value * inv_gamma, error_estimate=res.error_estimate * inv_gamma)
