"""Discrete fractional operators"""
from .closed_form import power_caputo, power_integral  # noqa
from .config import FracOrder, Grid, GridAlignmentError, make_grid  # noqa
from .operators import caputo_trap, frac_integral_trap, gl_derivative, gl_weights, trapezoid_weights  # noqa
