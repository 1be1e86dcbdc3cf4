# -*- coding: utf-8 -*-
'''Delta and nabla derivatives and the delta integral on a time scale.'''

import logging
import math

from deltacalc.engine.functions import (
    DerivativeReport, QUOTIENT, CLASSICAL, QUADRATURE
)
from deltacalc.engine.quadrature import adaptive_simpson, gauss_legendre
from deltacalc.exceptions import NotInKappa, NonFiniteValue, EmptyWindow
from deltacalc.utils import (
    MU_RTOL, QUADRATURE_TOL, QUADRATURE_RTOL, QUADRATURE_MAX_INTERVALS,
    mu_threshold, pairwise_sum
)

logger = logging.getLogger(__name__)

def _finite(value, f, t):
    if not math.isfinite(value):
        raise NonFiniteValue(
            'derivative of {} is not finite at t={!r}'.format(f.name, t), point=t
        )
    return value

def kappa_point(ts, t):
    point = ts.locate(t)
    if not ts.in_kappa(point):
        raise NotInKappa(
            'the delta derivative is not defined at the left-scattered maximum {!r}'.format(point),
            point=point, scale=ts.spec
        )
    return point

def dual_kappa_point(ts, t):
    point = ts.locate(t)
    if not ts.in_kappa_dual(point):
        raise NotInKappa(
            'the nabla derivative is not defined at the right-scattered minimum {!r}'.format(point),
            point=point, scale=ts.spec
        )
    return point

def classical_limit(f, point, graininess):
    '''The right-dense branch: ``f'(t)`` itself

    When ``f'`` is unknown the central difference is used and a kink makes
    it raise :py:class:`~deltacalc.exceptions.NotDifferentiable`.
    '''
    diagnostics = {}
    if f.has_derivative:
        value = f.derivative(point)
    else:
        value, step = f.central_difference(point, check_one_sided=True)
        diagnostics['step'] = step
    return DerivativeReport(_finite(value, f, point), CLASSICAL, graininess, diagnostics)

def delta_derivative(ts, f, t, mu_rtol=MU_RTOL):
    '''Delta derivative of ``f`` at ``t``

    Arguments:
        ts: the :py:class:`~deltacalc.scales.models.TimeScale`
        f: a :py:class:`~deltacalc.engine.functions.RealFunction`
        t: a point of ``ts`` in its kappa set

    Keyword Arguments:
        mu_rtol: graininess at or below ``mu_rtol * max(1, |t|)`` takes the
            classical branch

    Returns:
        :py:class:`~deltacalc.engine.functions.DerivativeReport` using the
        forward difference quotient or the classical limit

    Raises:
        PointNotInScale, NotInKappa, NonFiniteValue
    '''
    point = kappa_point(ts, t)
    graininess = ts.mu(point)
    if graininess > mu_threshold(point, mu_rtol):
        forward = ts.sigma(point)
        value = (f(forward) - f(point)) / graininess
        logger.debug('DELTA - quotient at {} with mu {}'.format(point, graininess))
        return DerivativeReport(
            _finite(value, f, point), QUOTIENT, graininess, dict(sigma=forward)
        )
    logger.debug('DELTA - classical limit at {}'.format(point))
    return classical_limit(f, point, graininess)

def delta_derivative_quadrature(
    ts, f, t, tol=QUADRATURE_TOL, rel_tol=QUADRATURE_RTOL,
    max_intervals=QUADRATURE_MAX_INTERVALS
):
    '''Delta derivative through ``integral_0^1 f'(t + tau*mu(t)) dtau``

    Arguments:
        ts: the time scale
        f: a :py:class:`~deltacalc.engine.functions.RealFunction`; its
            central difference stands in when ``f'`` is unknown
        t: a point of ``ts`` in its kappa set

    Keyword Arguments:
        tol: absolute quadrature tolerance
        rel_tol: relative quadrature tolerance
        max_intervals: subdivision budget

    Returns:
        :py:class:`~deltacalc.engine.functions.DerivativeReport` with the
        quadrature error estimate and interval count in its diagnostics

    Raises:
        QuadratureNoConvergence: if the budget runs out
    '''
    point = kappa_point(ts, t)
    graininess = ts.mu(point)

    def integrand(tau):
        return f.derivative(point + tau * graininess)

    result = adaptive_simpson(
        integrand, 0.0, 1.0, tol=tol, rel_tol=rel_tol, max_intervals=max_intervals
    )
    return DerivativeReport(
        _finite(result.value, f, point), QUADRATURE, graininess,
        dict(error=result.error, intervals=result.intervals)
    )

def nabla_derivative_quadrature(
    ts, f, t, tol=QUADRATURE_TOL, rel_tol=QUADRATURE_RTOL,
    max_intervals=QUADRATURE_MAX_INTERVALS
):
    '''Nabla derivative through ``integral_0^1 f'(t - tau*nu(t)) dtau``

    The integral representation with ``mu`` replaced by ``-nu``.
    '''
    point = dual_kappa_point(ts, t)
    graininess = ts.nu(point)

    def integrand(tau):
        return f.derivative(point - tau * graininess)

    result = adaptive_simpson(
        integrand, 0.0, 1.0, tol=tol, rel_tol=rel_tol, max_intervals=max_intervals
    )
    return DerivativeReport(
        _finite(result.value, f, point), QUADRATURE, graininess,
        dict(error=result.error, intervals=result.intervals)
    )

def nabla_derivative(ts, f, t, mu_rtol=MU_RTOL):
    '''Nabla derivative of ``f`` at ``t``: the backward quotient over ``nu(t)``

    Raises:
        PointNotInScale, NotInKappa (at a right-scattered minimum),
        NonFiniteValue
    '''
    point = dual_kappa_point(ts, t)
    graininess = ts.nu(point)
    if graininess > mu_threshold(point, mu_rtol):
        backward = ts.rho(point)
        value = (f(point) - f(backward)) / graininess
        return DerivativeReport(
            _finite(value, f, point), QUOTIENT, graininess, dict(rho=backward)
        )
    return classical_limit(f, point, graininess)

def delta_integral(
    ts, f, a, b, max_step, tol=QUADRATURE_TOL, rel_tol=QUADRATURE_RTOL,
    max_panels=QUADRATURE_MAX_INTERVALS
):
    '''Delta integral of ``f`` from ``a`` to ``b``

    Every right-scattered point ``s`` of ``[a, b)`` contributes
    ``mu(s) * f(s)``; every dense piece is integrated with composite
    Gauss-Legendre. The contributions are added in order of position.

    Arguments:
        ts: the time scale
        f: integrand, a :py:class:`~deltacalc.engine.functions.RealFunction`
            or any callable
        a: lower limit, a point of ``ts``
        b: upper limit, a point of ``ts``, ``a <= b``
        max_step: widest quadrature panel on dense pieces

    Returns:
        The integral as a float

    Raises:
        EmptyWindow: if ``a > b``
        PointNotInScale: if a limit is not in ``ts``
        NonFiniteValue: if the sum overflows
    '''
    a, b = float(a), float(b)
    if not a <= b:
        raise EmptyWindow('integration window [{}, {}] is empty'.format(a, b), window=(a, b))
    a, b = ts.locate(a), ts.locate(b)
    dense, scattered = ts.pieces(a, b)

    terms = []
    for lo, hi in dense:
        result = gauss_legendre(
            f, lo, hi, max_step, tol=tol, rel_tol=rel_tol, max_panels=max_panels
        )
        terms.append((lo, result.value))
    for point in scattered:
        terms.append((point, ts.mu(point) * f(point)))
    terms.sort(key=lambda term: term[0])

    value = pairwise_sum(term[1] for term in terms)
    if not math.isfinite(value):
        raise NonFiniteValue('delta integral over [{}, {}] is not finite'.format(a, b))
    logger.debug('INTEGRAL - [{}, {}]: {} dense pieces, {} jumps'.format(
        a, b, len(dense), len(scattered)
    ))
    return value
