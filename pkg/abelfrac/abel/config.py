"""
Problem and result records for Abel equations of the first kind

    f(x) = int_0^x g(t) / (x - t)^alpha dt,    0 < alpha < 1,  0 <= x <= upper
"""
import warnings
from typing import Optional, Union

import chex
from flax import struct

from abelfrac.expr import Expr, ExprDomainError, NonDifferentiableError, differentiate, evaluate, parse

F_ZERO_ATOL = 1e-12


class AbelProblemError(ValueError):
    """Raised for ill-formed problems, e.g. a right-hand side with f(0) != 0"""


class AbelProblemWarning(RuntimeWarning):
    pass


class ConvergenceError(ArithmeticError):
    """Raised when a quadrature misses its tolerance. `partial` holds the best value found"""

    def __init__(self, message: str, partial: float) -> None:
        self.partial = partial
        super().__init__(message)


@struct.dataclass
class AbelProblem:
    f: Expr = struct.field(pytree_node=False)
    """right-hand side f(x)"""
    df: Expr = struct.field(pytree_node=False)
    """symbolic derivative f'(x)"""
    alpha: float
    """kernel exponent, 0 < alpha < 1"""
    upper: float
    """the equation is posed on [0, upper]"""

    @classmethod
    def create(cls, f: Union[str, Expr], alpha: float, upper: float = 1.0) -> "AbelProblem":
        if isinstance(f, str):
            f = parse(f)
        alpha, upper = float(alpha), float(upper)
        if not 0 < alpha < 1:
            raise AbelProblemError(f"kernel exponent alpha must lie strictly inside (0, 1), got {alpha}")
        if not upper > 0:
            raise AbelProblemError(f"upper bound must be positive, got {upper}")
        try:
            f0 = evaluate(f, 0.0)
        except ExprDomainError as e:
            raise AbelProblemError(f"f cannot be evaluated at 0: {e}") from e
        if abs(f0) > F_ZERO_ATOL:
            raise AbelProblemError(
                f"the right-hand side must satisfy f(0) = 0 for the equation to have a solution, "
                f"got f(0) = {f0!r} for f = {f}"
            )
        if f0 != 0:
            warnings.warn(f"accepting f(0) = {f0!r} as zero", AbelProblemWarning)
        try:
            df = differentiate(f)
        except NonDifferentiableError as e:
            raise AbelProblemError(f"cannot differentiate f = {f}: {e}") from e
        return cls(f=f, df=df, alpha=alpha, upper=upper)

    def check_point(self, x: float) -> None:
        if not 0 <= x <= self.upper:
            raise AbelProblemError(f"x = {x!r} lies outside [0, {self.upper!r}]")


@struct.dataclass
class SolveResult:
    points: chex.Array
    """query points, in input order"""
    values: chex.Array
    """approximate solution at each point"""
    k: int = struct.field(pytree_node=False)
    """number of subintervals of [0, x] used for every point"""
    h: chex.Array
    """step size x / k for each point"""
    exact: Optional[chex.Array] = None
    abs_errors: Optional[chex.Array] = None
    """|values - exact|, present iff exact is"""


@struct.dataclass
class ConvergenceStudy:
    x: float
    ks: chex.Array
    h: chex.Array
    values: chex.Array
    exact: float
    abs_errors: chex.Array
    order: Optional[float] = None
    """least squares slope of log(error) against log(h). None when the errors sit at the oracle floor"""
    floor: bool = False
