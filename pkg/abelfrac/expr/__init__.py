"""Expression language for right-hand sides f(x)"""
from .ast import (  # noqa
    FUNCTIONS,
    Binary,
    Call,
    Const,
    Expr,
    ExprDomainError,
    Neg,
    Var,
    compile_expr,
    evaluate,
    to_source,
)
from .diff import NonDifferentiableError, differentiate, nth_derivative  # noqa
from .parser import ExprSyntaxError, UnknownFunctionError, parse  # noqa
