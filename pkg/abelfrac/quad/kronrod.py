"""
Adaptive Gauss-Kronrod (7/15) quadrature on finite intervals
"""
import heapq
import math
import warnings
from typing import Union

import numpy as np
from flax import struct

from abelfrac.expr import Expr, compile_expr
from abelfrac.utils.types import RealFn


DEFAULT_TOL = 1e-10
MAX_DEPTH = 60
MAX_EVALUATIONS = 1_000_000

# abscissae of the 15 point Kronrod rule on [-1, 1], largest first. Entries 1, 3, 5 and 7
# are the 7 point Gauss nodes.
_XGK = np.array(
    [
        0.991455371120812639206854697526329,
        0.949107912342758524526189684047851,
        0.864864423359769072789712788640926,
        0.741531185599394439863864773280788,
        0.586087235467691130294144845693013,
        0.405845151377397166906606412076961,
        0.207784955007898467600689403773245,
        0.000000000000000000000000000000000,
    ]
)
_WGK = np.array(
    [
        0.022935322010529224963732008058970,
        0.063092092629978553290700663189204,
        0.104790010322250183839876322541518,
        0.140653259715525918745189590510238,
        0.169004726639267902826583426598550,
        0.190350578064785409913256402421014,
        0.204432940075298892414161999234649,
        0.209482141084727828012999174891714,
    ]
)
_WG = np.array(
    [
        0.129484966168869693270611432679082,
        0.279705391489276667901467771423780,
        0.381830050505118944950369775488975,
        0.417959183673469387755102040816327,
    ]
)

NODES = np.concatenate([-_XGK[:7], [0.0], _XGK[6::-1]])
KRONROD_WEIGHTS = np.concatenate([_WGK[:7], [_WGK[7]], _WGK[6::-1]])
GAUSS_WEIGHTS = np.zeros(15)
for _i, _w in zip((1, 3, 5), _WG[:3]):
    GAUSS_WEIGHTS[_i] = GAUSS_WEIGHTS[14 - _i] = _w
GAUSS_WEIGHTS[7] = _WG[3]

_ROUNDOFF = 50.0 * np.finfo(np.float64).eps


class QuadratureWarning(RuntimeWarning):
    pass


@struct.dataclass
class QuadResult:
    value: float
    error_estimate: float
    """a-posteriori absolute error estimate"""
    evaluations: int
    """number of integrand evaluations"""
    panels: int
    """number of panels in the final subdivision"""
    converged: bool
    """True when error_estimate <= the requested tolerance"""


def as_integrand(phi: Union[Expr, RealFn]) -> RealFn:
    """Wraps an expression or a vectorized callable so it always returns a float64 array"""
    fn = compile_expr(phi) if isinstance(phi, Expr) else phi

    def integrand(t: np.ndarray) -> np.ndarray:
        return np.broadcast_to(np.asarray(fn(t), dtype=np.float64), np.shape(t))

    return integrand


def kronrod_panel(fn: RealFn, a: float, b: float):
    """
    Applies the 7/15 pair on [a, b] and returns the Kronrod value and its error estimate
    |K15 - G7|, floored at the roundoff level of the panel.
    """
    center, half = 0.5 * (a + b), 0.5 * (b - a)
    values = fn(center + half * NODES)
    k15 = half * float(np.dot(KRONROD_WEIGHTS, values))
    g7 = half * float(np.dot(GAUSS_WEIGHTS, values))
    magnitude = abs(half) * float(np.dot(KRONROD_WEIGHTS, np.abs(values)))
    return k15, max(abs(k15 - g7), _ROUNDOFF * magnitude)


def integrate_smooth(
    phi: Union[Expr, RealFn],
    a: float,
    b: float,
    tol: float = DEFAULT_TOL,
    max_depth: int = MAX_DEPTH,
    max_evaluations: int = MAX_EVALUATIONS,
) -> QuadResult:
    """
    Integrates phi over [a, b] by recursive bisection, always splitting the panel with the
    largest error estimate until the summed estimate drops below `tol`.

    Panels stop being split after `max_depth` bisections. When the evaluation budget runs out,
    or as soon as a panel comes back inf or nan, the best value so far is returned with
    `converged=False` and a QuadratureWarning.
    The final sum runs over panels in left to right order so results are reproducible.
    """
    if not b >= a:
        raise ValueError(f"integrate_smooth expects a <= b, got a={a}, b={b}")
    if not tol > 0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    if a == b:
        return QuadResult(value=0.0, error_estimate=0.0, evaluations=0, panels=0, converged=True)

    fn = as_integrand(phi)
    value, err = kronrod_panel(fn, a, b)
    evaluations = len(NODES)
    # heap entries are (-err, a, b, value, err, depth); leaves that reached max_depth are parked in `final`
    heap = [(-err, a, b, value, err, 0)]
    final = []
    total_err = err
    finite = math.isfinite(value) and math.isfinite(err)
    while heap and finite:
        if total_err <= tol:
            # resum to drop the drift of the running total before stopping
            total_err = math.fsum([entry[4] for entry in heap] + [entry[3] for entry in final])
            if total_err <= tol:
                break
        if evaluations + 2 * len(NODES) > max_evaluations:
            break
        _, lo, hi, panel_value, panel_err, depth = heapq.heappop(heap)
        if depth >= max_depth:
            final.append((lo, hi, panel_value, panel_err))
            continue
        mid = 0.5 * (lo + hi)
        left_value, left_err = kronrod_panel(fn, lo, mid)
        right_value, right_err = kronrod_panel(fn, mid, hi)
        evaluations += 2 * len(NODES)
        finite = all(math.isfinite(v) for v in (left_value, left_err, right_value, right_err))
        heapq.heappush(heap, (-left_err, lo, mid, left_value, left_err, depth + 1))
        heapq.heappush(heap, (-right_err, mid, hi, right_value, right_err, depth + 1))
        total_err += left_err + right_err - panel_err

    panels = sorted([(lo, hi, v, e) for _, lo, hi, v, e, _ in heap] + final)
    if finite:
        value = math.fsum(p[2] for p in panels)
        err = math.fsum(p[3] for p in panels)
    else:
        # fsum raises on inf - inf
        value = sum(p[2] for p in panels)
        err = math.inf
    converged = err <= tol
    if not converged:
        warnings.warn(
            f"quadrature on [{a}, {b}] stopped at error estimate {err:.3e} > tol {tol:.3e} "
            f"after {evaluations} evaluations",
            QuadratureWarning,
        )
    return QuadResult(value=value, error_estimate=err, evaluations=evaluations, panels=len(panels), converged=converged)
