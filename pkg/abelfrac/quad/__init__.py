"""Adaptive quadrature, including weakly singular kernels"""
from .kronrod import DEFAULT_TOL, QuadratureWarning, QuadResult, integrate_smooth  # noqa
from .singular import integrate_singular  # noqa
