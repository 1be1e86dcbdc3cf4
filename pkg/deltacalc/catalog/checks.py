# -*- coding: utf-8 -*-
'''Evaluate catalog entries and cross-check them against the two oracles.'''

import logging

from deltacalc.catalog.entries import CatalogEntry
from deltacalc.engine.derivatives import delta_derivative, delta_derivative_quadrature
from deltacalc.engine.functions import guarded_call
from deltacalc.exceptions import ParamViolation, DomainViolation, NotInKappa
from deltacalc.utils import (
    MU_RTOL, QUADRATURE_TOL, QUADRATURE_RTOL, QUADRATURE_MAX_INTERVALS,
    mu_threshold, max_abs_gap
)

logger = logging.getLogger(__name__)

def list_catalog():
    '''All twenty entries in table order'''
    return list(CatalogEntry.entries)

def get_entry(entry_id):
    '''Look up an entry by id

    Raises:
        ParamViolation: if no entry has that id
    '''
    for entry in CatalogEntry.entries:
        if entry.id == entry_id:
            return entry
    raise ParamViolation('unknown catalog entry {!r}'.format(entry_id), entry=entry_id)

def _evaluate(entry, p, t, step, mu_rtol):
    if not entry.in_domain(t, p):
        raise DomainViolation(
            '{} is not defined at t={!r}'.format(entry.id, t), entry=entry.id, point=t
        )
    if abs(step) <= mu_threshold(t, mu_rtol):
        return guarded_call(lambda x: entry.derivative(x, p), t, entry.id)
    if not entry.admissible(t, step, p):
        raise DomainViolation(
            '{} is not defined between t={!r} and {!r}'.format(entry.id, t, t + step),
            entry=entry.id, point=t
        )
    return guarded_call(lambda x: entry.delta(x, step, p), t, entry.id)

def eval_delta(entry_id, params, t, mu, mu_rtol=MU_RTOL):
    '''Closed-form delta derivative of a catalog entry

    Arguments:
        entry_id: ``B01`` ... ``H03``
        params: dict of ``k``, ``c``, ``n`` as the entry needs
        t: the point
        mu: graininess at ``t``, ``mu >= 0``

    Keyword Arguments:
        mu_rtol: at or below ``mu_rtol * max(1, |t|)`` the classical
            derivative is returned

    Returns:
        The derivative as a float

    Raises:
        ParamViolation: bad or missing parameters
        DomainViolation: ``t`` or ``t + mu`` outside the entry's domain
        NonFiniteValue: the result overflows
    '''
    entry = get_entry(entry_id)
    p = entry.check_params(params)
    t, mu = float(t), float(mu)
    if mu < 0:
        raise DomainViolation('graininess must be nonnegative, got {!r}'.format(mu), entry=entry.id)
    return _evaluate(entry, p, t, mu, mu_rtol)

def eval_nabla(entry_id, params, t, nu, mu_rtol=MU_RTOL):
    '''Closed-form nabla derivative: the delta formula with ``mu`` replaced by ``-nu``
    '''
    entry = get_entry(entry_id)
    p = entry.check_params(params)
    t, nu = float(t), float(nu)
    if nu < 0:
        raise DomainViolation('graininess must be nonnegative, got {!r}'.format(nu), entry=entry.id)
    return _evaluate(entry, p, t, -nu, mu_rtol)

class CrossCheckReport(object):
    '''The three evaluation paths for one entry at one point

    Attributes:
        id: the entry id
        t: the point
        mu: graininess at ``t``
        closed_form: the catalog value
        difference_quotient: the engine's forward quotient or classical limit
        quadrature: the integral representation
        max_abs_gap: largest pairwise difference of the three
    '''
    fields = ('id', 't', 'mu', 'closed_form', 'difference_quotient', 'quadrature', 'max_abs_gap')

    def __init__(self, id, t, mu, closed_form, difference_quotient, quadrature):
        self.id = id
        self.t = t
        self.mu = mu
        self.closed_form = closed_form
        self.difference_quotient = difference_quotient
        self.quadrature = quadrature
        self.max_abs_gap = max_abs_gap([closed_form, difference_quotient, quadrature])

    def as_dict(self):
        return dict((field, getattr(self, field)) for field in self.fields)

    def __repr__(self):
        return '<CrossCheckReport {} t={!r} gap={!r}>'.format(self.id, self.t, self.max_abs_gap)

def cross_check(
    entry_id, params, ts, t, mu_rtol=MU_RTOL, tol=QUADRATURE_TOL,
    rel_tol=QUADRATURE_RTOL, max_intervals=QUADRATURE_MAX_INTERVALS
):
    '''Evaluate an entry by its closed form and by both oracles

    Arguments:
        entry_id: catalog id
        params: entry parameters
        ts: the time scale
        t: a point of ``ts`` in its kappa set

    Returns:
        :py:class:`CrossCheckReport`

    Raises:
        Whatever the constituent evaluations raise
    '''
    entry = get_entry(entry_id)
    p = entry.check_params(params)
    point = ts.locate(t)
    if not ts.in_kappa(point):
        raise NotInKappa(
            'the delta derivative is not defined at the left-scattered maximum {!r}'.format(point),
            point=point, scale=ts.spec
        )
    mu = ts.mu(point)
    closed_form = eval_delta(entry.id, p, point, mu, mu_rtol)
    f = entry.as_function(p)
    quotient = delta_derivative(ts, f, point, mu_rtol=mu_rtol)
    quadrature = delta_derivative_quadrature(
        ts, f, point, tol=tol, rel_tol=rel_tol, max_intervals=max_intervals
    )
    report = CrossCheckReport(
        entry.id, point, mu, closed_form, quotient.value, quadrature.value
    )
    logger.debug('CROSS CHECK - {}'.format(report))
    return report
