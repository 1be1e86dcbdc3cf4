# -*- coding: utf-8 -*-
'''Structural matching of canonical trees against the catalog shapes.

Rules are tried in table order and the first rule whose bindings pass the
entry's parameter checks wins. Every rule sees the tree in canonical form,
so constants lead products and sums and the factors of a product are
sorted.
'''

from deltacalc.catalog.checks import get_entry
from deltacalc.exceptions import ParamViolation
from deltacalc.expression.nodes import (
    Constant, Var, Add, Mul, PowInt, ConstPow, Call
)

class MatchResult(object):
    '''A catalog hit

    Attributes:
        entry_id: the catalog id
        bindings: validated parameters of the entry, ``n`` as an int
    '''
    def __init__(self, entry_id, bindings):
        self.entry_id = entry_id
        self.bindings = dict(bindings)

    def build(self):
        '''The entry's template instantiated with the bindings'''
        return get_entry(self.entry_id).build(self.bindings)

    def __eq__(self, other):
        return (
            isinstance(other, MatchResult) and
            self.entry_id == other.entry_id and self.bindings == other.bindings
        )

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return '<MatchResult {} {}>'.format(self.entry_id, self.bindings)

def linear_coefficient(expr):
    '''``k`` for ``t`` or ``k*t``, otherwise ``None``'''
    if isinstance(expr, Var):
        return 1.0
    if isinstance(expr, Mul) and isinstance(expr.left, Constant) and isinstance(expr.right, Var):
        return expr.left.value
    return None

def power_of_t(expr):
    '''``n`` for ``t`` or ``t^n``, otherwise ``None``'''
    if isinstance(expr, Var):
        return 1
    if isinstance(expr, PowInt) and isinstance(expr.base, Var):
        return expr.exponent
    return None

def affine(expr):
    '''``(k, c)`` for ``c + k*t``, otherwise ``None``'''
    if isinstance(expr, Add) and isinstance(expr.left, Constant):
        k = linear_coefficient(expr.right)
        if k is not None:
            return k, expr.left.value
        return None
    k = linear_coefficient(expr)
    if k is not None:
        return k, 0.0
    return None

def call_of(expr, fn):
    '''The argument of ``fn(...)`` or ``None``'''
    if isinstance(expr, Call) and expr.fn == fn:
        return expr.arg
    return None

def factor_pair(expr):
    '''Both orders of a two-factor product, or nothing'''
    if not isinstance(expr, Mul) or isinstance(expr.left, Mul):
        return []
    return [(expr.left, expr.right), (expr.right, expr.left)]

def _natural_log_base(expr):
    '''``k`` for ``ln(k)`` with a constant ``k``'''
    arg = call_of(expr, 'ln')
    if isinstance(arg, Constant):
        return arg.value
    return None

def match_constant(expr):
    if isinstance(expr, Constant):
        return dict(k=expr.value)

def match_monomial(expr):
    n = power_of_t(expr)
    if n is not None:
        return dict(n=n)

def match_exponential(expr):
    if isinstance(expr, ConstPow) and isinstance(expr.exponent, Var):
        return dict(k=expr.base.value)
    arg = call_of(expr, 'exp')
    for first, second in factor_pair(arg):
        k = _natural_log_base(second)
        if isinstance(first, Var) and k is not None:
            return dict(k=k)

def match_shifted_monomial(expr):
    if isinstance(expr, PowInt):
        shift = affine(expr.base)
        if shift is not None and shift[0] == 1.0:
            return dict(k=shift[1], n=expr.exponent)

def match_square_root(expr):
    if isinstance(call_of(expr, 'sqrt'), Var):
        return {}

def match_root_of_polynomial(expr):
    arg = call_of(expr, 'sqrt')
    if arg is None:
        return None
    if isinstance(arg, Add) and isinstance(arg.left, Constant):
        n = power_of_t(arg.right)
        if n is not None:
            return dict(k=arg.left.value, n=n)
        return None
    n = power_of_t(arg)
    if n is not None and n >= 2:
        return dict(k=0.0, n=n)

def match_monomial_times_root(expr):
    for first, second in factor_pair(expr):
        n, radicand = power_of_t(first), call_of(second, 'sqrt')
        line = affine(radicand) if radicand is not None else None
        if n is not None and line is not None:
            return dict(k=line[1], c=line[0], n=n)

def match_log_of_monomial(expr):
    arg = call_of(expr, 'ln')
    if arg is not None:
        n = power_of_t(arg)
        if n is not None:
            return dict(n=n)

def match_log_of_linear(expr):
    arg = call_of(expr, 'ln')
    if arg is not None:
        line = affine(arg)
        if line is not None:
            return dict(k=line[0], c=line[1])

def _exp_rate(expr):
    arg = call_of(expr, 'exp')
    return linear_coefficient(arg) if arg is not None else None

def _trig_rate(expr, fn):
    arg = call_of(expr, fn)
    return linear_coefficient(arg) if arg is not None else None

def match_natural_exponential(expr):
    k = _exp_rate(expr)
    if k is not None:
        return dict(k=k)

def match_monomial_times_exponential(expr):
    for first, second in factor_pair(expr):
        n, k = power_of_t(first), _exp_rate(second)
        if n is not None and k is not None:
            return dict(k=k, n=n)

def match_sine(expr):
    if isinstance(call_of(expr, 'sin'), Var):
        return {}

def match_cosine(expr):
    if isinstance(call_of(expr, 'cos'), Var):
        return {}

def _time_times(fn):
    def rule(expr):
        for first, second in factor_pair(expr):
            k = _trig_rate(second, fn)
            if isinstance(first, Var) and k is not None:
                return dict(k=k)
    return rule

def _exponential_times(fn):
    def rule(expr):
        for first, second in factor_pair(expr):
            k, c = _exp_rate(first), _trig_rate(second, fn)
            if k is not None and c is not None:
                return dict(k=k, c=c)
    return rule

def match_hyperbolic_product(expr):
    for first, second in factor_pair(expr):
        k, other = _trig_rate(first, 'sinh'), _trig_rate(second, 'cosh')
        if k is not None and k == other:
            return dict(k=k)

def _hyperbolic(fn):
    def rule(expr):
        k = _trig_rate(expr, fn)
        if k is not None:
            return dict(k=k)
    return rule

RULES = (
    ('B01', match_constant),
    ('B02', match_monomial),
    ('B03', match_exponential),
    ('B04', match_shifted_monomial),
    ('R01', match_square_root),
    ('R02', match_root_of_polynomial),
    ('R03', match_monomial_times_root),
    ('L01', match_log_of_monomial),
    ('L02', match_log_of_linear),
    ('E01', match_natural_exponential),
    ('E02', match_monomial_times_exponential),
    ('T01', match_sine),
    ('T02', match_cosine),
    ('TM01', _time_times('sin')),
    ('TM02', _time_times('cos')),
    ('TE01', _exponential_times('sin')),
    ('TE02', _exponential_times('cos')),
    ('H03', match_hyperbolic_product),
    ('H01', _hyperbolic('sinh')),
    ('H02', _hyperbolic('cosh')),
)

def match_catalog(expr):
    '''First catalog entry whose shape ``expr`` has

    Arguments:
        expr: a canonical tree, see
            :py:func:`~deltacalc.expression.canonical.canonicalize`

    Returns:
        :py:class:`MatchResult` or ``None`` when no shape fits or the
        extracted parameters break the entry's constraints
    '''
    for entry_id, rule in RULES:
        bindings = rule(expr)
        if bindings is None:
            continue
        try:
            validated = get_entry(entry_id).check_params(bindings)
        except ParamViolation:
            continue
        return MatchResult(entry_id, validated)
    return None
