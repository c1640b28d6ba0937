"""
Expression trees for a right-hand side f(x)

Nodes are immutable. Build them through the lower case constructors (`add`,
`mul`, `power`, ...) which fold constant sub-trees; this folding is the only
simplification ever applied.
"""
import math
from dataclasses import dataclass
from typing import Callable, Dict

import numpy as np

from abelfrac.special import erf
from abelfrac.utils.types import Real, RealFn


class ExprDomainError(ArithmeticError):
    """Raised when an expression is evaluated outside of its domain"""


@dataclass(frozen=True)
class Expr:
    """Base class of all expression nodes"""

    def __call__(self, x: Real) -> Real:
        return evaluate(self, x)

    def __str__(self) -> str:
        return to_source(self)


@dataclass(frozen=True)
class Const(Expr):
    value: float


@dataclass(frozen=True)
class Var(Expr):
    """The independent variable x"""


@dataclass(frozen=True)
class Neg(Expr):
    arg: Expr


@dataclass(frozen=True)
class Binary(Expr):
    op: str
    """one of + - * / ^"""
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Call(Expr):
    name: str
    arg: Expr


X = Var()


def _check_ln(u):
    if np.any(u <= 0):
        raise ExprDomainError("ln of a non-positive argument")
    return np.log(u)


def _check_sqrt(u):
    if np.any(u < 0):
        raise ExprDomainError("sqrt of a negative argument")
    return np.sqrt(u)


FUNCTIONS: Dict[str, Callable[[np.ndarray], np.ndarray]] = dict(
    exp=np.exp,
    ln=_check_ln,
    sin=np.sin,
    cos=np.cos,
    sqrt=_check_sqrt,
    erf=erf,
    abs=np.abs,
)


def _divide(a, b):
    if np.any(b == 0):
        raise ExprDomainError("division by zero")
    return a / b


def _power(a, b):
    a, b = np.broadcast_arrays(np.asarray(a, dtype=np.float64), np.asarray(b, dtype=np.float64))
    if np.any((a == 0) & (b < 0)):
        raise ExprDomainError("0 raised to a negative power")
    if np.any((a < 0) & (b != np.round(b))):
        raise ExprDomainError("negative base raised to a non-integer power")
    return np.power(a, b)


BINARY_OPS: Dict[str, Callable] = {
    "+": np.add,
    "-": np.subtract,
    "*": np.multiply,
    "/": _divide,
    "^": _power,
}


def _eval(e: Expr, x: np.ndarray):
    if isinstance(e, Const):
        return e.value
    if isinstance(e, Var):
        return x
    if isinstance(e, Neg):
        return -_eval(e.arg, x)
    if isinstance(e, Binary):
        return BINARY_OPS[e.op](_eval(e.left, x), _eval(e.right, x))
    if isinstance(e, Call):
        return FUNCTIONS[e.name](np.asarray(_eval(e.arg, x), dtype=np.float64))
    raise TypeError(f"{type(e).__name__} is not an expression node")


def evaluate(e: Expr, x: Real) -> Real:
    """
    Evaluate `e` at `x` in float64. `x` may be a scalar or any numpy array, the
    result has the same shape.

    Raises ExprDomainError for ln / sqrt of invalid arguments, division by zero
    and invalid powers.
    """
    x_arr = np.asarray(x, dtype=np.float64)
    out = np.broadcast_to(np.asarray(_eval(e, x_arr), dtype=np.float64), x_arr.shape)
    if x_arr.ndim == 0:
        return float(out)
    return np.array(out)


def compile_expr(e: Expr) -> RealFn:
    """Returns a plain function x -> evaluate(e, x), e.g. to hand to quadrature routines"""

    def fn(x):
        return evaluate(e, x)

    return fn


def to_source(e: Expr) -> str:
    """
    Fully parenthesized source text. Parsing the text gives back an equal tree and
    constants keep all their bits since floats are printed with repr.
    """
    if isinstance(e, Const):
        text = repr(float(e.value))
        return f"({text})" if text.startswith("-") else text
    if isinstance(e, Var):
        return "x"
    if isinstance(e, Neg):
        return f"(-{to_source(e.arg)})"
    if isinstance(e, Binary):
        return f"({to_source(e.left)} {e.op} {to_source(e.right)})"
    if isinstance(e, Call):
        return f"{e.name}({to_source(e.arg)})"
    raise TypeError(f"{type(e).__name__} is not an expression node")


def _is_const(e: Expr, value: float = None) -> bool:
    if not isinstance(e, Const):
        return False
    return value is None or e.value == value


def _fold(node: Expr) -> Expr:
    try:
        with np.errstate(all="ignore"):
            value = float(_eval(node, np.float64(0.0)))
    except ExprDomainError:
        # keep the node so the error surfaces when the expression is evaluated
        return node
    if not math.isfinite(value):
        return node
    return Const(value)


def const(value: float) -> Const:
    return Const(float(value))


def neg(a: Expr) -> Expr:
    if isinstance(a, Const):
        return Const(-a.value)
    if isinstance(a, Neg):
        return a.arg
    return Neg(a)


def add(a: Expr, b: Expr) -> Expr:
    if _is_const(a, 0.0):
        return b
    if _is_const(b, 0.0):
        return a
    if _is_const(a) and _is_const(b):
        return _fold(Binary("+", a, b))
    return Binary("+", a, b)


def sub(a: Expr, b: Expr) -> Expr:
    if _is_const(b, 0.0):
        return a
    if _is_const(a, 0.0):
        return neg(b)
    if _is_const(a) and _is_const(b):
        return _fold(Binary("-", a, b))
    return Binary("-", a, b)


def mul(a: Expr, b: Expr) -> Expr:
    if _is_const(a, 0.0) or _is_const(b, 0.0):
        return Const(0.0)
    if _is_const(a, 1.0):
        return b
    if _is_const(b, 1.0):
        return a
    if _is_const(a) and _is_const(b):
        return _fold(Binary("*", a, b))
    return Binary("*", a, b)


def div(a: Expr, b: Expr) -> Expr:
    if _is_const(b, 1.0):
        return a
    if _is_const(a) and _is_const(b):
        return _fold(Binary("/", a, b))
    return Binary("/", a, b)


def power(a: Expr, b: Expr) -> Expr:
    if _is_const(b, 1.0):
        return a
    if _is_const(b, 0.0):
        return Const(1.0)
    if _is_const(a) and _is_const(b):
        return _fold(Binary("^", a, b))
    return Binary("^", a, b)


BINARY_BUILDERS: Dict[str, Callable[[Expr, Expr], Expr]] = {
    "+": add,
    "-": sub,
    "*": mul,
    "/": div,
    "^": power,
}


def call(name: str, arg: Expr) -> Expr:
    if name not in FUNCTIONS:
        raise ValueError(f"{name} is not a known function. Known functions are {list(FUNCTIONS.keys())}")
    node = Call(name, arg)
    if isinstance(arg, Const):
        return _fold(node)
    return node
