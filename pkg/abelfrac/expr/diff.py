"""
Symbolic differentiation with respect to x
"""
import math

from .ast import (
    Binary,
    Call,
    Const,
    Expr,
    Neg,
    Var,
    add,
    call,
    const,
    div,
    mul,
    neg,
    power,
    sub,
)


class NonDifferentiableError(ValueError):
    pass


_TWO_OVER_SQRT_PI = 2.0 / math.sqrt(math.pi)


def _diff_call(e: Call) -> Expr:
    u, du = e.arg, differentiate(e.arg)
    if e.name == "exp":
        outer = e
    elif e.name == "ln":
        outer = div(const(1.0), u)
    elif e.name == "sin":
        outer = call("cos", u)
    elif e.name == "cos":
        outer = neg(call("sin", u))
    elif e.name == "sqrt":
        outer = div(const(0.5), call("sqrt", u))
    elif e.name == "erf":
        outer = mul(const(_TWO_OVER_SQRT_PI), call("exp", neg(power(u, const(2.0)))))
    elif e.name == "abs":
        # u / |u|, which raises a domain error where u = 0
        outer = div(u, call("abs", u))
    else:
        raise NonDifferentiableError(f"no derivative rule for {e.name}")
    return mul(outer, du)


def _diff_power(e: Binary) -> Expr:
    u, v = e.left, e.right
    if isinstance(v, Const):
        return mul(mul(v, power(u, const(v.value - 1.0))), differentiate(u))
    if isinstance(u, Const):
        if u.value <= 0:
            raise NonDifferentiableError(f"cannot differentiate {u.value!r}^v(x) with a non-positive base")
        return mul(mul(e, const(math.log(u.value))), differentiate(v))
    # u^v = exp(v ln u), valid for positive u
    inner = add(mul(differentiate(v), call("ln", u)), div(mul(v, differentiate(u)), u))
    return mul(e, inner)


def differentiate(e: Expr) -> Expr:
    """Returns the derivative of `e` with respect to x, built with constant folding"""
    if isinstance(e, Const):
        return const(0.0)
    if isinstance(e, Var):
        return const(1.0)
    if isinstance(e, Neg):
        return neg(differentiate(e.arg))
    if isinstance(e, Binary):
        a, b = e.left, e.right
        if e.op == "+":
            return add(differentiate(a), differentiate(b))
        if e.op == "-":
            return sub(differentiate(a), differentiate(b))
        if e.op == "*":
            return add(mul(differentiate(a), b), mul(a, differentiate(b)))
        if e.op == "/":
            if isinstance(b, Const):
                return div(differentiate(a), b)
            return div(sub(mul(differentiate(a), b), mul(a, differentiate(b))), power(b, const(2.0)))
        if e.op == "^":
            return _diff_power(e)
    if isinstance(e, Call):
        return _diff_call(e)
    raise NonDifferentiableError(f"cannot differentiate {e!r}")


def nth_derivative(e: Expr, n: int) -> Expr:
    if n < 0:
        raise ValueError(f"derivative order must be non-negative, got {n}")
    for _ in range(n):
        e = differentiate(e)
    return e
