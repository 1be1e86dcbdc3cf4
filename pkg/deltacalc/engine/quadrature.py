# -*- coding: utf-8 -*-
'''Quadrature rules used by the engine.

``adaptive_simpson`` evaluates the integral representation of the delta
derivative over [0, 1]; ``gauss_legendre`` integrates over the dense parts of
a time scale. Both sum their pieces left to right with pairwise summation, so
repeated runs are bit-identical.
'''

import logging
import math
from collections import namedtuple
from functools import lru_cache

import numpy as np

from deltacalc.exceptions import QuadratureNoConvergence
from deltacalc.utils import (
    QUADRATURE_TOL, QUADRATURE_RTOL, QUADRATURE_MAX_INTERVALS, pairwise_sum
)

logger = logging.getLogger(__name__)

QuadratureResult = namedtuple('QuadratureResult', ['value', 'error', 'intervals'])

GAUSS_ORDER = 10
MIN_SIMPSON_DEPTH = 3

def adaptive_simpson(
    func, a, b, tol=QUADRATURE_TOL, rel_tol=QUADRATURE_RTOL,
    max_intervals=QUADRATURE_MAX_INTERVALS
):
    '''Adaptive Simpson quadrature with Richardson correction

    Arguments:
        func: integrand, ``float -> float``
        a: lower limit
        b: upper limit

    Keyword Arguments:
        tol: absolute tolerance for the whole integral
        rel_tol: relative tolerance, measured against the first estimate
        max_intervals: subdivision budget

    Returns:
        :py:class:`QuadratureResult` with the value, the summed error
        estimate and the number of subintervals used

    Raises:
        QuadratureNoConvergence: if the budget runs out
    '''
    if a == b:
        return QuadratureResult(0.0, 0.0, 0)

    width = b - a
    fa, fm, fb = func(a), func((a + b) / 2), func(b)
    whole = width / 6 * (fa + 4 * fm + fb)
    target = max(tol, rel_tol * abs(whole))

    stack = [(a, b, fa, fm, fb, whole, 0)]
    values, errors = [], []
    intervals = 1

    while stack:
        lo, hi, f_lo, f_mid, f_hi, estimate, depth = stack.pop()
        mid = (lo + hi) / 2
        f_left, f_right = func((lo + mid) / 2), func((mid + hi) / 2)
        left = (mid - lo) / 6 * (f_lo + 4 * f_left + f_mid)
        right = (hi - mid) / 6 * (f_mid + 4 * f_right + f_hi)
        delta = left + right - estimate
        local_tol = target * (hi - lo) / width

        if (depth >= MIN_SIMPSON_DEPTH and abs(delta) <= 15 * local_tol) or mid in (lo, hi):
            values.append(left + right + delta / 15)
            errors.append(abs(delta) / 15)
            continue

        intervals += 1
        if intervals > max_intervals:
            raise QuadratureNoConvergence(
                'adaptive Simpson needed more than {} intervals on [{}, {}]'.format(
                    max_intervals, a, b
                ), budget=max_intervals
            )
        # right half first so the left half pops next and values stay ordered
        stack.append((mid, hi, f_mid, f_right, f_hi, right, depth + 1))
        stack.append((lo, mid, f_lo, f_left, f_mid, left, depth + 1))

    logger.debug('SIMPSON - [{}, {}] in {} intervals'.format(a, b, intervals))
    return QuadratureResult(pairwise_sum(values), pairwise_sum(errors), intervals)

@lru_cache(maxsize=8)
def legendre_rule(order):
    return np.polynomial.legendre.leggauss(order)

def composite_gauss_legendre(func, a, b, panels, order=GAUSS_ORDER):
    '''Fixed composite Gauss-Legendre rule with ``panels`` equal panels
    '''
    nodes, weights = legendre_rule(order)
    edges = np.linspace(a, b, panels + 1)
    terms = []
    for lo, hi in zip(edges[:-1], edges[1:]):
        half, center = (hi - lo) / 2, (hi + lo) / 2
        terms.extend(
            half * w * func(float(center + half * x))
            for x, w in zip(nodes, weights)
        )
    return pairwise_sum(terms)

def gauss_legendre(
    func, a, b, max_step, tol=QUADRATURE_TOL, rel_tol=QUADRATURE_RTOL,
    max_panels=QUADRATURE_MAX_INTERVALS, order=GAUSS_ORDER
):
    '''Composite Gauss-Legendre with panel doubling

    The rule is open: ``a`` and ``b`` themselves are never evaluated.

    Arguments:
        func: integrand
        a: lower limit
        b: upper limit, ``a <= b``
        max_step: widest panel allowed

    Keyword Arguments:
        tol: absolute agreement between two successive estimates
        rel_tol: relative agreement between two successive estimates
        max_panels: panel budget
        order: nodes per panel

    Returns:
        :py:class:`QuadratureResult`

    Raises:
        QuadratureNoConvergence: if ``max_step`` or doubling asks for more
            than ``max_panels`` panels
    '''
    if b <= a:
        return QuadratureResult(0.0, 0.0, 0)

    span = (b - a) / max_step
    # the first estimate is only accepted after one doubling
    if not math.isfinite(span) or 2 * math.ceil(span) > max_panels:
        raise QuadratureNoConvergence(
            '[{}, {}] with panels of at most {} needs more than {} panels'.format(
                a, b, max_step, max_panels
            ), budget=max_panels
        )
    panels = max(1, int(math.ceil(span)))
    previous = composite_gauss_legendre(func, a, b, panels, order)
    while True:
        panels *= 2
        if panels > max_panels:
            raise QuadratureNoConvergence(
                'Gauss-Legendre needed more than {} panels on [{}, {}]'.format(
                    max_panels, a, b
                ), budget=max_panels
            )
        current = composite_gauss_legendre(func, a, b, panels, order)
        error = abs(current - previous)
        if error <= max(tol, rel_tol * abs(current)):
            logger.debug('GAUSS - [{}, {}] in {} panels'.format(a, b, panels))
            return QuadratureResult(current, error, panels)
        previous = current
