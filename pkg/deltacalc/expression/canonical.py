# -*- coding: utf-8 -*-
'''Canonical form of expression trees.

The canonical form folds constants, flattens sums and products into
left-nested chains sorted with the constant first, and collects repeated
factors into integer powers. It does not distribute, combine like terms
or otherwise simplify. ``ln`` of a constant is never folded so that
``exp(ln(k)*t)`` keeps its shape.
'''

import math

from deltacalc.expression.evaluate import FUNCTION_TABLE
from deltacalc.expression.nodes import (
    Constant, Var, Add, Sub, Mul, Div, PowInt, ConstPow, Call, MAX_EXPONENT
)
from deltacalc.expression.render import format_expr, chain

RANKS = {
    Constant: 0, Var: 1, PowInt: 2, ConstPow: 3, Call: 4,
    Add: 5, Sub: 5, Mul: 6, Div: 7,
}

def sort_key(expr):
    return (RANKS[type(expr)], format_expr(expr))

def _finite_constant(compute):
    '''``Constant(compute())`` or ``None`` when the value is not finite
    '''
    try:
        value = float(compute())
    except (ValueError, OverflowError, ZeroDivisionError):
        return None
    return Constant(value) if math.isfinite(value) else None

def _terms(expr):
    if isinstance(expr, Add):
        return _terms(expr.left) + _terms(expr.right)
    return [expr]

def _factors(expr):
    if isinstance(expr, Mul):
        return _factors(expr.left) + _factors(expr.right)
    return [expr]

def canonical_sum(operands):
    '''Canonical sum of already canonical operands'''
    terms = [term for operand in operands for term in _terms(operand)]
    constants = [term for term in terms if isinstance(term, Constant)]
    others = sorted((term for term in terms if not isinstance(term, Constant)), key=sort_key)

    total = _finite_constant(lambda: sum(c.value for c in constants))
    if total is None:
        lead = sorted(constants, key=sort_key)
    elif total.value != 0 or not others:
        lead = [total]
    else:
        lead = []
    return chain(Add, lead + others)

def _power(base, exponent):
    if exponent == 0:
        return []
    return [canonical_power(base, exponent)]

def canonical_product(operands):
    '''Canonical product of already canonical operands'''
    factors = [factor for operand in operands for factor in _factors(operand)]
    constants = [f for f in factors if isinstance(f, Constant)]

    product = 1.0
    for c in constants:
        product *= c.value
    folded = math.isfinite(product)
    if folded and product == 0:
        return Constant(0.0)

    # collect equal bases into one integer power
    groups, members = {}, {}
    for factor in factors:
        if isinstance(factor, Constant):
            continue
        base, exponent = factor, 1
        while isinstance(base, PowInt):
            base, exponent = base.base, base.exponent * exponent
        groups[base] = groups.get(base, 0) + exponent
        members.setdefault(base, []).append(factor)

    others = []
    for base, exponent in groups.items():
        if abs(exponent) <= MAX_EXPONENT:
            others.extend(_power(base, exponent))
        else:
            others.extend(members[base])
    others.sort(key=sort_key)

    if not folded:
        lead = sorted(constants, key=sort_key)
    elif product != 1 or not others:
        lead = [Constant(product)]
    else:
        lead = []
    return chain(Mul, lead + others)

def canonical_power(base, exponent):
    if exponent == 0:
        return Constant(1.0)
    if exponent == 1:
        return base
    if isinstance(base, Constant):
        folded = _finite_constant(lambda: base.value ** exponent)
        if folded is not None:
            return folded
    if isinstance(base, PowInt) and abs(base.exponent * exponent) <= MAX_EXPONENT:
        return canonical_power(base.base, base.exponent * exponent)
    return PowInt(base, exponent)

def canonicalize(expr):
    '''Canonical form of ``expr``; idempotent

    Examples:
        ``t*t`` becomes ``PowInt(Var(), 2)``, ``2*3*t`` becomes
        ``Mul(Constant(6), Var())`` and ``exp(t)*t^2`` becomes
        ``Mul(PowInt(Var(), 2), Call('exp', Var()))``.
    '''
    if isinstance(expr, (Constant, Var)):
        return expr
    if isinstance(expr, Add):
        return canonical_sum([canonicalize(expr.left), canonicalize(expr.right)])
    if isinstance(expr, Sub):
        negative = canonical_product([Constant(-1.0), canonicalize(expr.right)])
        return canonical_sum([canonicalize(expr.left), negative])
    if isinstance(expr, Mul):
        return canonical_product([canonicalize(expr.left), canonicalize(expr.right)])
    if isinstance(expr, Div):
        numerator, denominator = canonicalize(expr.left), canonicalize(expr.right)
        if isinstance(denominator, Constant):
            if denominator.value == 0:
                return Div(numerator, denominator)
            reciprocal = _finite_constant(lambda: 1.0 / denominator.value)
            if reciprocal is None:
                return Div(numerator, denominator)
            return canonical_product([reciprocal, numerator])
        if isinstance(numerator, Constant) and numerator.value == 0:
            return Constant(0.0)
        return Div(numerator, denominator)
    if isinstance(expr, PowInt):
        return canonical_power(canonicalize(expr.base), expr.exponent)
    if isinstance(expr, ConstPow):
        exponent = canonicalize(expr.exponent)
        if isinstance(exponent, Constant):
            folded = _finite_constant(lambda: math.pow(expr.base.value, exponent.value))
            if folded is not None:
                return folded
        return ConstPow(expr.base, exponent)
    if isinstance(expr, Call):
        arg = canonicalize(expr.arg)
        if isinstance(arg, Constant) and expr.fn != 'ln' and expr.fn in FUNCTION_TABLE:
            folded = _finite_constant(lambda: FUNCTION_TABLE[expr.fn](arg.value))
            if folded is not None:
                return folded
        return Call(expr.fn, arg)
    return expr
