"""
Exact and approximate solutions of

    f(x) = int_0^x g(t) / (x - t)^alpha dt

The exact solution is g(x) = sin(alpha pi) / pi int_0^x f'(t) (x - t)^(alpha - 1) dt, evaluated by
singularity removing quadrature. The approximate solution replaces f' by its piecewise linear
interpolant on k equal subintervals of [0, x] and integrates the kernel exactly, which is the
modified trapezoidal Caputo derivative of order 1 - alpha scaled by 1 / Gamma(1 - alpha).
"""
import math
import warnings
from typing import Callable, List, Sequence, Union

import numpy as np
from scipy.interpolate import PchipInterpolator
from tqdm import tqdm

from abelfrac.expr import Expr
from abelfrac.fracops import make_grid
from abelfrac.quad import DEFAULT_TOL, QuadratureWarning, integrate_singular
from abelfrac.quad.kronrod import as_integrand
from abelfrac.special import gamma
from abelfrac.utils.tools import fit_order
from abelfrac.utils.types import RealFn

from .config import AbelProblem, AbelProblemError, ConvergenceError, ConvergenceStudy, SolveResult

FLOOR_FACTOR = 10.0
"""errors at or below FLOOR_FACTOR * tol are indistinguishable from the error of the exact solution"""


class OrderFloorWarning(RuntimeWarning):
    pass


def _check_k(k: int) -> int:
    if int(k) != k or k < 1:
        raise AbelProblemError(f"number of subintervals must be a positive integer, got {k}")
    return int(k)


def _singular(phi, gamma_: float, x: float, tol: float, what: str) -> float:
    with warnings.catch_warnings():
        # reported through ConvergenceError instead
        warnings.simplefilter("ignore", QuadratureWarning)
        res = integrate_singular(phi, gamma_, x, tol=tol)
    if not res.converged:
        raise ConvergenceError(
            f"{what} at x={x!r}: quadrature stopped at error estimate {res.error_estimate:.3e} "
            f"above tolerance {tol:.3e} after {res.evaluations} evaluations",
            partial=res.value,
        )
    return res.value


def solve_exact(p: AbelProblem, x: float, tol: float = DEFAULT_TOL) -> float:
    """The exact solution g(x) to an absolute tolerance `tol`. g(0) = 0."""
    p.check_point(x)
    if x == 0:
        return 0.0
    scale = math.sin(p.alpha * math.pi) / math.pi
    try:
        return scale * _singular(p.df, p.alpha, x, tol / scale, "exact solution")
    except ConvergenceError as e:
        raise ConvergenceError(str(e), partial=scale * e.partial) from None


def solve_approx(p: AbelProblem, x: float, k: int) -> float:
    """
    The approximate solution on k subintervals of [0, x], h = x / k, t_j = j h:

        g~(x) = h^alpha / (Gamma(1 - alpha) Gamma(2 + alpha)) [ ((k - 1)^(1 + alpha) - (k - 1 - alpha) k^alpha) f'(0)
                + sum_{j=1}^{k-1} ((k - j + 1)^(1 + alpha) - 2 (k - j)^(1 + alpha) + (k - j - 1)^(1 + alpha)) f'(t_j)
                + f'(x) ]

    g~(0) = 0.
    """
    p.check_point(x)
    k = _check_k(k)
    if x == 0:
        return 0.0
    a = p.alpha
    grid = make_grid(x, k)
    df = as_integrand(p.df)(grid.nodes)
    m = k - np.arange(1, k, dtype=np.float64)
    terms = np.concatenate(
        [
            [((k - 1.0) ** (1.0 + a) - (k - 1.0 - a) * float(k) ** a) * df[0]],
            ((m + 1.0) ** (1.0 + a) - 2.0 * m ** (1.0 + a) + (m - 1.0) ** (1.0 + a)) * df[1:k],
            [df[k]],
        ]
    )
    return grid.h**a / (gamma(1.0 - a) * gamma(2.0 + a)) * math.fsum(terms)


def solve(
    p: AbelProblem,
    points: Sequence[float],
    k: int,
    tol: float = DEFAULT_TOL,
    with_exact: bool = True,
    verbose: bool = False,
) -> SolveResult:
    """Approximate (and optionally exact) solutions at each query point, in input order"""
    k = _check_k(k)
    points = np.asarray(points, dtype=np.float64)
    values = np.empty_like(points)
    exact = np.empty_like(points) if with_exact else None
    for i, x in enumerate(tqdm(points, desc="points", disable=not verbose)):
        values[i] = solve_approx(p, float(x), k)
        if with_exact:
            exact[i] = solve_exact(p, float(x), tol)
    return SolveResult(
        points=points,
        values=values,
        k=k,
        h=points / k,
        exact=exact,
        abs_errors=np.abs(values - exact) if with_exact else None,
    )


def interpolate_solution(p: AbelProblem, k: int, upper: float = None, samples: int = 201) -> Callable:
    """
    Samples g~ (each value computed with k subintervals) on `samples` equally spaced points of
    [0, upper] and returns the monotone piecewise cubic interpolant, g~(0) = 0.
    """
    upper = p.upper if upper is None else upper
    if samples < 2:
        raise ValueError(f"need at least 2 samples, got {samples}")
    nodes = np.linspace(0.0, upper, samples)
    nodes[-1] = upper
    values = np.array([solve_approx(p, float(t), k) for t in nodes])
    return PchipInterpolator(nodes, values, extrapolate=False)


def residual(p: AbelProblem, g_approx: Union[Expr, RealFn], x: float, tol: float = DEFAULT_TOL) -> float:
    """int_0^x g_approx(t) (x - t)^(-alpha) dt - f(x). Vanishes when g_approx solves the equation at x."""
    p.check_point(x)
    if x == 0:
        return 0.0
    fx = float(p.f(x))
    try:
        return _singular(g_approx, 1.0 - p.alpha, x, tol, "residual") - fx
    except ConvergenceError as e:
        raise ConvergenceError(str(e), partial=e.partial - fx) from None


def convergence_study(
    p: AbelProblem,
    x: float,
    ks: Sequence[int],
    tol: float = DEFAULT_TOL,
    verbose: bool = False,
) -> ConvergenceStudy:
    """
    Errors of the approximate solution at x for each k against the exact solution, and the
    empirical order fitted to them. When any error is at the level of the exact solution's own
    tolerance the fit is meaningless, so the order is left out and the study is flagged `floor`.
    """
    ks: List[int] = [_check_k(k) for k in ks]
    if len(ks) < 2:
        raise AbelProblemError("a convergence study needs at least two values of k")
    if any(b <= a for a, b in zip(ks[:-1], ks[1:])):
        raise AbelProblemError(f"values of k must be strictly increasing, got {ks}")
    exact = solve_exact(p, x, tol)
    values = np.array([solve_approx(p, x, k) for k in tqdm(ks, desc="k", disable=not verbose)])
    ks_arr = np.asarray(ks, dtype=np.float64)
    h = x / ks_arr
    errors = np.abs(values - exact)
    floor = bool(np.any(errors <= FLOOR_FACTOR * tol))
    order = None
    if floor:
        warnings.warn(
            f"errors at x={x!r} reach the oracle floor {FLOOR_FACTOR * tol:.1e}, no order is fitted",
            OrderFloorWarning,
        )
    else:
        order = fit_order(h, errors)
    return ConvergenceStudy(
        x=float(x), ks=ks_arr.astype(np.int64), h=h, values=values, exact=exact, abs_errors=errors, order=order, floor=floor
    )
