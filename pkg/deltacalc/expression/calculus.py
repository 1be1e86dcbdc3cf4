# -*- coding: utf-8 -*-
'''Symbolic classical derivatives and time scale derivatives of expressions.'''

import logging
import math

from deltacalc.catalog.checks import eval_delta, eval_nabla
from deltacalc.engine.derivatives import (
    kappa_point, dual_kappa_point, delta_derivative, nabla_derivative
)
from deltacalc.engine.functions import RealFunction, DerivativeReport, CATALOG
from deltacalc.exceptions import UnsupportedNode
from deltacalc.expression.canonical import canonicalize
from deltacalc.expression.evaluate import evaluate
from deltacalc.expression.matcher import match_catalog
from deltacalc.expression.nodes import (
    Constant, Var, Add, Sub, Mul, Div, PowInt, ConstPow, Call, MAX_EXPONENT
)
from deltacalc.expression.render import format_expr
from deltacalc.utils import MU_RTOL, mu_threshold

logger = logging.getLogger(__name__)

SYMBOLIC_FALLBACK = 'symbolic-fallback'

ZERO, ONE, MINUS_ONE, TWO = Constant(0.0), Constant(1.0), Constant(-1.0), Constant(2.0)

def _chain_rule(fn, arg, inner):
    if fn == 'sqrt':
        return Div(inner, Mul(TWO, Call('sqrt', arg)))
    if fn == 'ln':
        return Div(inner, arg)
    if fn == 'exp':
        return Mul(Call('exp', arg), inner)
    if fn == 'sin':
        return Mul(Call('cos', arg), inner)
    if fn == 'cos':
        return Mul(MINUS_ONE, Mul(Call('sin', arg), inner))
    if fn == 'sinh':
        return Mul(Call('cosh', arg), inner)
    if fn == 'cosh':
        return Mul(Call('sinh', arg), inner)
    raise UnsupportedNode('no derivative rule for {!r}'.format(fn), function=fn)

def _diff(expr):
    if isinstance(expr, Constant):
        return ZERO
    if isinstance(expr, Var):
        return ONE
    if isinstance(expr, Add):
        return Add(_diff(expr.left), _diff(expr.right))
    if isinstance(expr, Sub):
        return Sub(_diff(expr.left), _diff(expr.right))
    if isinstance(expr, Mul):
        return Add(
            Mul(_diff(expr.left), expr.right),
            Mul(expr.left, _diff(expr.right))
        )
    if isinstance(expr, Div):
        return Div(
            Sub(Mul(_diff(expr.left), expr.right), Mul(expr.left, _diff(expr.right))),
            PowInt(expr.right, 2)
        )
    if isinstance(expr, PowInt):
        lowered = expr.exponent - 1
        if lowered < -MAX_EXPONENT:
            power = Div(expr, expr.base)
        else:
            power = PowInt(expr.base, lowered)
        return Mul(Mul(Constant(expr.exponent), power), _diff(expr.base))
    if isinstance(expr, ConstPow):
        return Mul(
            Mul(Constant(math.log(expr.base.value)), expr),
            _diff(expr.exponent)
        )
    if isinstance(expr, Call):
        return _chain_rule(expr.fn, expr.arg, _diff(expr.arg))
    raise UnsupportedNode('cannot differentiate {!r}'.format(expr))

def classical_diff(expr):
    '''Symbolic derivative with respect to ``t``, in canonical form

    Examples:
        ``t^3`` gives ``3*t^2``, ``exp(2*t)`` gives ``2*exp(2*t)`` and
        ``ln(t)`` gives ``1/t``.

    Raises:
        UnsupportedNode: the tree holds a node or function without a rule
    '''
    return canonicalize(_diff(expr))

def to_function(expr):
    '''Wrap an expression as a :py:class:`~deltacalc.engine.functions.RealFunction`
    whose classical derivative is the symbolic one
    '''
    derivative = classical_diff(expr)
    return RealFunction(
        lambda t: evaluate(expr, t),
        classical_derivative=lambda t: evaluate(derivative, t),
        name=format_expr(expr)
    )

class ExpressionDerivative(object):
    '''Time scale derivative of one expression, prepared once for many points

    The expression is canonicalized and matched against the catalog when
    the object is built; :py:meth:`report` then only evaluates.

    Arguments:
        expr: an expression tree, canonical or not

    Keyword Arguments:
        mu_rtol: classical branch threshold
    '''
    def __init__(self, expr, mu_rtol=MU_RTOL):
        self.expr = canonicalize(expr)
        self.match = match_catalog(self.expr)
        self.function = to_function(self.expr)
        self.mu_rtol = mu_rtol

    @property
    def provenance(self):
        return self.match.entry_id if self.match else SYMBOLIC_FALLBACK

    def report(self, ts, t, nabla=False):
        '''Delta (or nabla) derivative at ``t``

        Returns:
            :py:class:`~deltacalc.engine.functions.DerivativeReport`
        '''
        if self.match is None:
            if nabla:
                rv = nabla_derivative(ts, self.function, t, mu_rtol=self.mu_rtol)
            else:
                rv = delta_derivative(ts, self.function, t, mu_rtol=self.mu_rtol)
            rv.provenance = SYMBOLIC_FALLBACK
            return rv

        entry_id, bindings = self.match.entry_id, self.match.bindings
        if nabla:
            point = dual_kappa_point(ts, t)
            graininess = ts.nu(point)
            value = eval_nabla(entry_id, bindings, point, graininess, self.mu_rtol)
        else:
            point = kappa_point(ts, t)
            graininess = ts.mu(point)
            value = eval_delta(entry_id, bindings, point, graininess, self.mu_rtol)
        branch = 'closed-form' if graininess > mu_threshold(point, self.mu_rtol) else 'limit'
        logger.debug('MATCH - {} as {} at {} ({})'.format(
            format_expr(self.expr), entry_id, point, branch
        ))
        return DerivativeReport(
            value, CATALOG, graininess, dict(branch=branch), provenance=entry_id
        )

    def __call__(self, ts, t, nabla=False):
        return self.report(ts, t, nabla).value

def differentiate(expr, ts, t, nabla=False, mu_rtol=MU_RTOL):
    '''Delta (or nabla) derivative of an expression at a point

    A tree with a catalog shape is evaluated by its closed form; anything
    else is differentiated numerically with the difference quotient, the
    symbolic classical derivative covering right-dense points.

    Arguments:
        expr: an expression tree, canonical or not
        ts: the :py:class:`~deltacalc.scales.models.TimeScale`
        t: the point

    Keyword Arguments:
        nabla: take the backward derivative
        mu_rtol: classical branch threshold

    Returns:
        :py:class:`~deltacalc.engine.functions.DerivativeReport` whose
        ``provenance`` is the catalog id or ``symbolic-fallback``
    '''
    return ExpressionDerivative(expr, mu_rtol=mu_rtol).report(ts, t, nabla)
