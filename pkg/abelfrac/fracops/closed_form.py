"""
Closed forms of the fractional operators on power functions, used as oracles
"""
from abelfrac.special import gamma

from .config import FracOrder


def power_integral(p: float, beta: float, x: float) -> float:
    """(J^beta t^p)(x) = Gamma(p + 1) / Gamma(p + 1 + beta) x^(p + beta), for p > -1"""
    if not p > -1:
        raise ValueError(f"J^beta t^p needs p > -1, got p={p}")
    return gamma(p + 1.0) / gamma(p + 1.0 + beta) * x ** (p + beta)


def power_caputo(p: float, beta: float, x: float) -> float:
    """
    (D^beta t^p)(x) for the Caputo derivative. Integer powers below n = ceil(beta) are
    annihilated; other powers need p > n - 1.
    """
    n = FracOrder.create(beta).n
    if float(p).is_integer() and 0 <= p < n:
        return 0.0
    if not p > n - 1:
        raise ValueError(f"Caputo derivative of order {beta} is undefined for t^{p}")
    return gamma(p + 1.0) / gamma(p + 1.0 - beta) * x ** (p - beta)

