"""Abel integral equations of the first kind"""
from .config import (  # noqa
    AbelProblem,
    AbelProblemError,
    AbelProblemWarning,
    ConvergenceError,
    ConvergenceStudy,
    SolveResult,
)
from .presets import EXAMPLES, ExamplePreset, exact_closed_form, get_preset  # noqa
from .solver import (  # noqa
    OrderFloorWarning,
    convergence_study,
    interpolate_solution,
    residual,
    solve,
    solve_approx,
    solve_exact,
)
