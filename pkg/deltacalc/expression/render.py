# -*- coding: utf-8 -*-
'''Render expression trees back to source text with minimal parentheses.'''

from functools import reduce

from deltacalc.expression.nodes import (
    Constant, Var, Add, Sub, Mul, Div, PowInt, ConstPow, Call
)

ADDITIVE, MULTIPLICATIVE, UNARY, POWER, ATOM = 1, 2, 3, 4, 5

def format_constant(value):
    '''Integral values print without a decimal point, the rest as ``repr``
    '''
    if value.is_integer() and abs(value) < 1e16:
        return str(int(value))
    return repr(value)

def mul_factors(expr):
    '''Factors of a left-nested product, leftmost first'''
    factors = []
    while isinstance(expr, Mul):
        factors.append(expr.right)
        expr = expr.left
    factors.append(expr)
    return factors[::-1]

def chain(node_type, operands):
    return reduce(node_type, operands)

def negated_term(expr):
    '''The positive counterpart of a term that renders with a leading minus

    Returns ``None`` when the term is not negative.
    '''
    if isinstance(expr, Constant) and expr.value < 0:
        return Constant(-expr.value)
    if isinstance(expr, Mul):
        factors = mul_factors(expr)
        lead = factors[0]
        if isinstance(lead, Constant) and lead.value < 0:
            if lead.value == -1:
                rest = factors[1:]
            else:
                rest = [Constant(-lead.value)] + factors[1:]
            return chain(Mul, rest)
    return None

def _wrap(expr, level):
    text, own = _render(expr)
    return text if own >= level else '({})'.format(text)

def _render(expr):
    if isinstance(expr, Constant):
        return format_constant(expr.value), UNARY if expr.value < 0 else ATOM
    if isinstance(expr, Var):
        return expr.name, ATOM
    if isinstance(expr, Call):
        return '{}({})'.format(expr.fn, _render(expr.arg)[0]), ATOM
    if isinstance(expr, PowInt):
        return '{}^{}'.format(_wrap(expr.base, ATOM), expr.exponent), POWER
    if isinstance(expr, ConstPow):
        return '{}^{}'.format(_wrap(expr.base, ATOM), _wrap(expr.exponent, UNARY)), POWER
    if isinstance(expr, Add):
        negative = negated_term(expr.right)
        if negative is not None:
            return '{} - {}'.format(
                _wrap(expr.left, ADDITIVE), _wrap(negative, MULTIPLICATIVE)
            ), ADDITIVE
        return '{} + {}'.format(
            _wrap(expr.left, ADDITIVE), _wrap(expr.right, MULTIPLICATIVE)
        ), ADDITIVE
    if isinstance(expr, Sub):
        return '{} - {}'.format(
            _wrap(expr.left, ADDITIVE), _wrap(expr.right, MULTIPLICATIVE)
        ), ADDITIVE
    if isinstance(expr, Mul):
        if isinstance(expr.left, Constant) and expr.left.value == -1:
            return '-{}'.format(_wrap(expr.right, POWER)), UNARY
        return '{}*{}'.format(
            _wrap(expr.left, MULTIPLICATIVE), _wrap(expr.right, POWER)
        ), MULTIPLICATIVE
    if isinstance(expr, Div):
        return '{}/{}'.format(
            _wrap(expr.left, MULTIPLICATIVE), _wrap(expr.right, POWER)
        ), MULTIPLICATIVE
    raise TypeError('cannot render {!r}'.format(expr))

def format_expr(expr):
    '''Source text for ``expr``

    Examples:
        ``Mul(Constant(2), Var())`` renders as ``2*t`` and
        ``PowInt(Add(Var(), Constant(1)), 3)`` as ``(t + 1)^3``.
    '''
    return _render(expr)[0]
