# -*- coding: utf-8 -*-

import math

from deltacalc.exceptions import DomainViolation, NonFiniteValue, NotDifferentiable
from deltacalc.utils import finite_difference_step

# one-sided estimates further apart than this (relative) mean a kink
ONE_SIDED_RTOL = 1e-3

CATALOG = 'catalog'
QUOTIENT = 'difference-quotient'
CLASSICAL = 'classical-limit'
QUADRATURE = 'quadrature'
METHODS = (CATALOG, QUOTIENT, CLASSICAL, QUADRATURE)

def guarded_call(fn, t, name='f'):
    '''Evaluate ``fn(t)`` and turn math failures into engine errors

    Arguments:
        fn: callable taking one float
        t: the argument

    Keyword Arguments:
        name: how to refer to ``fn`` in error messages

    Returns:
        ``fn(t)`` as a finite float

    Raises:
        DomainViolation: ``fn`` raised ``ValueError`` (``math.log(-1)`` and
            friends)
        NonFiniteValue: ``fn`` overflowed, divided by zero or returned a
            non-finite number
    '''
    try:
        rv = float(fn(t))
    except ValueError as e:
        raise DomainViolation(
            '{} is undefined at t={!r} ({})'.format(name, t, e), point=t
        )
    except (OverflowError, ZeroDivisionError) as e:
        raise NonFiniteValue(
            '{} is not finite at t={!r} ({})'.format(name, t, e), point=t
        )
    if not math.isfinite(rv):
        raise NonFiniteValue('{} is not finite at t={!r}'.format(name, t), point=t)
    return rv

class RealFunction(object):
    '''A real function of one variable with an optional known derivative

    Arguments:
        value: callable ``t -> float``

    Keyword Arguments:
        classical_derivative: callable ``t -> float`` for ``f'``; when it
            is missing a central difference is used instead
        name: label used in error messages and reports
    '''
    def __init__(self, value, classical_derivative=None, name=None):
        self.value = value
        self.classical_derivative = classical_derivative
        self.name = name or getattr(value, '__name__', 'f')

    def __call__(self, t):
        return guarded_call(self.value, t, self.name)

    @property
    def has_derivative(self):
        return self.classical_derivative is not None

    def central_difference(self, t, check_one_sided=False):
        '''Central difference estimate of ``f'(t)``

        Arguments:
            t: the point

        Keyword Arguments:
            check_one_sided: compare the forward and backward one-sided
                estimates and refuse a kink

        Returns:
            A tuple ``(estimate, step)``

        Raises:
            NotDifferentiable: if ``check_one_sided`` is set and the one-sided
                estimates disagree
        '''
        step = finite_difference_step(t)
        forward_value, backward_value = self(t + step), self(t - step)
        central = (forward_value - backward_value) / (2 * step)
        if check_one_sided:
            here = self(t)
            forward = (forward_value - here) / step
            backward = (here - backward_value) / step
            if abs(forward - backward) > ONE_SIDED_RTOL * max(1.0, abs(central)):
                raise NotDifferentiable(
                    '{} has one-sided derivatives {!r} and {!r} at t={!r}'.format(
                        self.name, backward, forward, t
                    ), point=t
                )
        return central, step

    def derivative(self, t, check_one_sided=False):
        '''``f'(t)``, exact when known, estimated otherwise
        '''
        if self.has_derivative:
            return guarded_call(self.classical_derivative, t, "{}'".format(self.name))
        return self.central_difference(t, check_one_sided)[0]

    def __repr__(self):
        return '<RealFunction {}>'.format(self.name)

class DerivativeReport(object):
    '''Result of a derivative evaluation

    Attributes:
        value: the derivative
        method: one of ``catalog``, ``difference-quotient``,
            ``classical-limit`` or ``quadrature``
        mu_used: graininess the evaluation used (``-nu`` for nabla quotients
            is reported as ``nu``)
        diagnostics: dict of method specific extras such as the quadrature
            error estimate or the finite-difference step
        provenance: catalog id or ``symbolic-fallback`` when the report came
            from an expression
    '''
    def __init__(self, value, method, mu_used, diagnostics=None, provenance=None):
        if method not in METHODS:
            raise ValueError('unknown derivative method {!r}'.format(method))
        self.value = value
        self.method = method
        self.mu_used = mu_used
        self.diagnostics = diagnostics or {}
        self.provenance = provenance

    def as_dict(self):
        return dict(
            value=self.value, method=self.method, mu=self.mu_used,
            provenance=self.provenance, **self.diagnostics
        )

    def __repr__(self):
        return '<DerivativeReport {!r} via {}>'.format(self.value, self.method)
