"""Special functions"""
from .functions import GammaPoleError, beta, erf, gamma, lgamma  # noqa
