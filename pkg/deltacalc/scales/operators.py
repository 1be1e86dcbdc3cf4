# -*- coding: utf-8 -*-
'''Module level operator functions over any :py:class:`~deltacalc.scales.models.TimeScale`.

These are thin wrappers so callers can write ``sigma(ts, t)`` in the
notation of time scale calculus.
'''

def contains(ts, t):
    return ts.contains(t)

def sigma(ts, t):
    '''Forward jump operator; ``sup T`` maps to itself
    '''
    return ts.sigma(t)

def rho(ts, t):
    '''Backward jump operator; ``inf T`` maps to itself
    '''
    return ts.rho(t)

def mu(ts, t):
    return ts.mu(t)

def nu(ts, t):
    return ts.nu(t)

def classify(ts, t):
    return ts.classify(t)

def in_kappa(ts, t):
    return ts.in_kappa(t)

def in_kappa_dual(ts, t):
    return ts.in_kappa_dual(t)

def sample(ts, a, b, max_step):
    return ts.sample(a, b, max_step)
