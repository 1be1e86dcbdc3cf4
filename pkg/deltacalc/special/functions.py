# -*- coding: utf-8 -*-
'''Trigonometric and hyperbolic functions on a time scale.

The time scale sine and cosine are the functions the delta derivative of
the classical cosine and sine produce, and likewise for the hyperbolic
pair. They satisfy defect identities whose right-hand sides depend only on
the graininess and equal 1 on the real line.
'''

import logging
import math

from deltacalc.catalog.stable import (
    sin_shift_ratio, cos_shift_ratio, sinh_shift_ratio, cosh_shift_ratio
)
from deltacalc.engine.functions import guarded_call
from deltacalc.utils import (
    MU_RTOL, IDENTITY_TOL, HYPERBOLIC_TOL, mu_threshold
)

logger = logging.getLogger(__name__)

PYTHAGOREAN = 'pythagorean'
HYPERBOLIC = 'hyperbolic'

def _is_limit(t, mu, mu_rtol):
    return abs(mu) <= mu_threshold(t, mu_rtol)

def sine(t, mu, mu_rtol=MU_RTOL):
    '''``(sin t sin mu - cos t (cos mu - 1)) / mu``, ``sin t`` in the limit
    '''
    if _is_limit(t, mu, mu_rtol):
        return math.sin(t)
    return -cos_shift_ratio(t, 1.0, mu)

def cosine(t, mu, mu_rtol=MU_RTOL):
    '''``(cos t sin mu + sin t (cos mu - 1)) / mu``, ``cos t`` in the limit
    '''
    if _is_limit(t, mu, mu_rtol):
        return math.cos(t)
    return sin_shift_ratio(t, 1.0, mu)

def hyperbolic_sine(t, mu, mu_rtol=MU_RTOL):
    '''``((e^(t+mu) - e^t) + (e^-(t+mu) - e^-t)) / (2 mu)``, ``sinh t`` in the limit
    '''
    if _is_limit(t, mu, mu_rtol):
        return math.sinh(t)
    return cosh_shift_ratio(t, 1.0, mu)

def hyperbolic_cosine(t, mu, mu_rtol=MU_RTOL):
    '''``((e^(t+mu) - e^t) - (e^-(t+mu) - e^-t)) / (2 mu)``, ``cosh t`` in the limit
    '''
    if _is_limit(t, mu, mu_rtol):
        return math.cosh(t)
    return sinh_shift_ratio(t, 1.0, mu)

def _on_scale(raw, name):
    def evaluate(ts, t, mu_rtol=MU_RTOL):
        point = ts.locate(t)
        graininess = ts.mu(point)
        return guarded_call(lambda x: raw(x, graininess, mu_rtol), point, name)
    evaluate.__name__ = name
    evaluate.__doc__ = '``{}`` at a point of ``ts`` with its graininess'.format(raw.__name__)
    return evaluate

sin_ts = _on_scale(sine, 'sin_ts')
cos_ts = _on_scale(cosine, 'cos_ts')
sinh_ts = _on_scale(hyperbolic_sine, 'sinh_ts')
cosh_ts = _on_scale(hyperbolic_cosine, 'cosh_ts')

def pythagorean_rhs(mu, mu_rtol=MU_RTOL):
    '''``2 (1 - cos mu) / mu**2`` as ``(sin(mu/2) / (mu/2))**2``

    A function of ``mu`` alone: points with the same graininess get the
    same float.
    '''
    if abs(mu) <= mu_rtol:
        return 1.0
    half = mu / 2
    ratio = math.sin(half) / half
    return ratio * ratio

def hyperbolic_rhs(mu, mu_rtol=MU_RTOL):
    '''``(e^mu + e^-mu - 2) / mu**2`` as ``(2 sinh(mu/2) / mu)**2``'''
    if abs(mu) <= mu_rtol:
        return 1.0
    ratio = 2 * math.sinh(mu / 2) / mu
    return ratio * ratio

def pythagorean_tolerance(t, rhs, tol=IDENTITY_TOL):
    return tol * max(1.0, abs(rhs))

def hyperbolic_tolerance(t, rhs, tol=IDENTITY_TOL, loose_tol=HYPERBOLIC_TOL):
    '''Allowed gap of the hyperbolic identity

    Squaring ``cosh_T`` and ``sinh_T`` loses about ``e^(2|t|)`` ulps, so the
    allowance is ``tol`` up to ``|t| = 1``, ``loose_tol`` up to ``|t| = 5``
    and grows like ``e^(2|t|)`` beyond.
    '''
    magnitude = abs(t)
    scale = max(1.0, abs(rhs))
    if magnitude <= 1:
        return tol * scale
    if magnitude <= 5:
        return loose_tol * scale
    return loose_tol * scale * math.exp(2 * (magnitude - 5))

class DefectReport(object):
    '''Both sides of a defect identity at one point

    Attributes:
        identity: ``pythagorean`` or ``hyperbolic``
        t: the point
        mu: graininess used
        lhs: ``sin_T**2 + cos_T**2`` or ``cosh_T**2 - sinh_T**2``
        rhs: the closed form depending on ``mu`` only
        gap: ``|lhs - rhs|``
        tolerance: the largest gap accepted at ``t``
        outside_kappa: ``t`` is a finite left-scattered maximum, evaluated
            with ``mu = 0``
    '''
    fields = ('identity', 't', 'mu', 'lhs', 'rhs', 'gap', 'tolerance', 'outside_kappa')

    def __init__(self, identity, t, mu, lhs, rhs, tolerance, outside_kappa=False):
        self.identity = identity
        self.t = t
        self.mu = mu
        self.lhs = lhs
        self.rhs = rhs
        self.gap = abs(lhs - rhs)
        self.tolerance = tolerance
        self.outside_kappa = outside_kappa

    @property
    def breach(self):
        return not self.gap <= self.tolerance

    def as_dict(self):
        return dict((field, getattr(self, field)) for field in self.fields)

    def __repr__(self):
        return '<DefectReport {} t={!r} gap={!r}>'.format(self.identity, self.t, self.gap)

def _defect(ts, t, identity, mu_rtol, tol, loose_tol):
    point = ts.locate(t)
    graininess = ts.mu(point)
    outside_kappa = not ts.in_kappa(point)
    if outside_kappa:
        logger.warning('IDENTITY - {} is the left-scattered maximum of {}'.format(point, ts.spec))

    if identity == PYTHAGOREAN:
        first = guarded_call(lambda x: sine(x, graininess, mu_rtol), point, 'sin_T')
        second = guarded_call(lambda x: cosine(x, graininess, mu_rtol), point, 'cos_T')
        lhs = first * first + second * second
        rhs = pythagorean_rhs(graininess, mu_rtol)
        tolerance = pythagorean_tolerance(point, rhs, tol)
    else:
        first = guarded_call(lambda x: hyperbolic_cosine(x, graininess, mu_rtol), point, 'cosh_T')
        second = guarded_call(lambda x: hyperbolic_sine(x, graininess, mu_rtol), point, 'sinh_T')
        lhs = first * first - second * second
        rhs = hyperbolic_rhs(graininess, mu_rtol)
        tolerance = hyperbolic_tolerance(point, rhs, tol, loose_tol)
    return DefectReport(identity, point, graininess, lhs, rhs, tolerance, outside_kappa)

def pythagorean_defect(ts, t, mu_rtol=MU_RTOL, tol=IDENTITY_TOL, loose_tol=HYPERBOLIC_TOL):
    '''``sin_T**2 + cos_T**2`` against ``2 (1 - cos mu) / mu**2``

    Arguments:
        ts: the time scale
        t: a point of ``ts``

    Returns:
        :py:class:`DefectReport`

    Raises:
        PointNotInScale
    '''
    return _defect(ts, t, PYTHAGOREAN, mu_rtol, tol, loose_tol)

def hyperbolic_defect(ts, t, mu_rtol=MU_RTOL, tol=IDENTITY_TOL, loose_tol=HYPERBOLIC_TOL):
    '''``cosh_T**2 - sinh_T**2`` against ``(e^mu + e^-mu - 2) / mu**2``

    Raises:
        PointNotInScale, NonFiniteValue
    '''
    return _defect(ts, t, HYPERBOLIC, mu_rtol, tol, loose_tol)
