# -*- coding: utf-8 -*-

import math

from deltacalc.exceptions import UnsupportedNode
from deltacalc.expression.nodes import (
    Constant, Var, Add, Sub, Mul, Div, PowInt, ConstPow, Call
)

FUNCTION_TABLE = {
    'sqrt': math.sqrt,
    'ln': math.log,
    'exp': math.exp,
    'sin': math.sin,
    'cos': math.cos,
    'sinh': math.sinh,
    'cosh': math.cosh,
}

def evaluate(expr, t):
    '''Evaluate ``expr`` at ``t`` with :py:mod:`math`

    ``math`` raises ``ValueError``, ``OverflowError`` and
    ``ZeroDivisionError`` as usual; wrap the call with
    :py:func:`~deltacalc.engine.functions.guarded_call` to get engine errors.

    Raises:
        UnsupportedNode: for a node type this evaluator does not know
    '''
    if isinstance(expr, Constant):
        return expr.value
    if isinstance(expr, Var):
        return t
    if isinstance(expr, Add):
        return evaluate(expr.left, t) + evaluate(expr.right, t)
    if isinstance(expr, Sub):
        return evaluate(expr.left, t) - evaluate(expr.right, t)
    if isinstance(expr, Mul):
        return evaluate(expr.left, t) * evaluate(expr.right, t)
    if isinstance(expr, Div):
        return evaluate(expr.left, t) / evaluate(expr.right, t)
    if isinstance(expr, PowInt):
        return evaluate(expr.base, t) ** expr.exponent
    if isinstance(expr, ConstPow):
        return math.exp(evaluate(expr.exponent, t) * math.log(expr.base.value))
    if isinstance(expr, Call):
        try:
            fn = FUNCTION_TABLE[expr.fn]
        except KeyError:
            raise UnsupportedNode('unknown function {!r}'.format(expr.fn))
        return fn(evaluate(expr.arg, t))
    raise UnsupportedNode('cannot evaluate {!r}'.format(expr))
