# -*- coding: utf-8 -*-
'''Shared numerical helpers and the default tolerances of the core.'''

import sys

import numpy as np

# membership tolerance for lattice indices and interval endpoints
MEMBERSHIP_RTOL = 1e-9
# graininess below this (scaled) threshold takes the classical-limit branch
MU_RTOL = 1e-8
QUADRATURE_TOL = 1e-10
QUADRATURE_RTOL = 1e-10
QUADRATURE_MAX_INTERVALS = 2 ** 15
CROSS_CHECK_RTOL = 1e-8
IDENTITY_TOL = 1e-12
HYPERBOLIC_TOL = 1e-9
# relative residual allowed by the fundamental theorem check
FTC_RTOL = 1e-6

MACHINE_EPSILON = sys.float_info.epsilon

def scaled(rtol, t):
    '''Scale a relative tolerance by the magnitude of ``t``

    Arguments:
        rtol: relative tolerance
        t: the point the tolerance is measured at

    Returns:
        ``rtol * max(1, |t|)``
    '''
    return rtol * max(1.0, abs(t))

def membership_tolerance(t, rtol=MEMBERSHIP_RTOL):
    return scaled(rtol, t)

def mu_threshold(t, rtol=MU_RTOL):
    '''Graininess at or below which a point is treated as dense
    '''
    return scaled(rtol, t)

def finite_difference_step(t):
    '''Optimal central-difference step: cbrt(machine epsilon) * max(1, |t|)
    '''
    return np.cbrt(MACHINE_EPSILON) * max(1.0, abs(t))

def pairwise_sum(values):
    '''Sum a sequence in a fixed order with numpy's pairwise summation

    The order of ``values`` is the order of aggregation, so identical inputs
    always give bit-identical results.
    '''
    values = np.asarray(list(values), dtype=float)
    if values.size == 0:
        return 0.0
    return float(np.sum(values))

def is_close(a, b, rtol=1e-12, atol=0.0):
    '''Relative closeness measured against ``max(1, |a|, |b|)``
    '''
    return abs(a - b) <= max(atol, rtol * max(1.0, abs(a), abs(b)))

def max_abs_gap(values):
    finite = [v for v in values if v is not None]
    if len(finite) < 2:
        return 0.0
    return max(finite) - min(finite)
