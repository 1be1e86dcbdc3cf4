# -*- coding: utf-8 -*-
'''What each subcommand computes.

Every command returns ``(records, columns)``. Per-point failures become
records with an ``error`` field so one bad point never aborts a run; only
problems with the inputs as a whole propagate as exceptions.
'''

import math
from concurrent.futures import ThreadPoolExecutor

from flask import current_app

from deltacalc.catalog.checks import list_catalog, cross_check
from deltacalc.engine.derivatives import (
    delta_derivative, delta_derivative_quadrature,
    nabla_derivative, nabla_derivative_quadrature, delta_integral
)
from deltacalc.engine.functions import RealFunction
from deltacalc.exceptions import DeltaCalcError, EmptyWindow
from deltacalc.expression.calculus import ExpressionDerivative, to_function
from deltacalc.expression.canonical import canonicalize
from deltacalc.expression.render import format_expr
from deltacalc.reports.records import OutputRecord
from deltacalc.scales.models import format_point
from deltacalc.special.functions import pythagorean_defect, hyperbolic_defect
from deltacalc.utils import max_abs_gap

AUTO, QUOTIENT, QUADRATURE = 'auto', 'quotient', 'quadrature'
DIFF_METHODS = (AUTO, QUOTIENT, QUADRATURE)

SCALE_SUMMARY_COLUMNS = ('scale', 'kind', 'infimum', 'supremum', 'error')
SCALE_POINT_COLUMNS = (
    'scale', 't', 'sigma', 'rho', 'mu', 'nu', 'classification', 'in_kappa', 'error'
)
DIFF_COLUMNS = ('t', 'mu', 'value', 'method', 'provenance', 'error')
ORACLE_COLUMNS = (
    't', 'mu', 'value', 'method', 'provenance',
    'difference_quotient', 'quadrature', 'gap', 'error'
)
TABLE_COLUMNS = (
    'id', 'expression', 't', 'mu', 'closed_form', 'difference_quotient',
    'quadrature', 'max_abs_gap', 'error'
)
IDENTITY_COLUMNS = ('scale', 't', 'mu', 'identity', 'lhs', 'rhs', 'gap', 'error')
INTEGRATE_COLUMNS = ('expression', 'a', 'b', 'value', 'error')
FTC_COLUMNS = ('expression', 'a', 'b', 'value', 'expected', 'residual', 'error')

def fan_out(fn, items, parallel=False):
    '''Apply ``fn`` to every item, in order

    With ``parallel`` the calls run on a thread pool of
    ``PARALLEL_WORKERS`` threads; results still come back in input order.
    ``fn`` must not touch the application context.
    '''
    items = list(items)
    if not parallel or len(items) < 2:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=current_app.config['PARALLEL_WORKERS']) as pool:
        return list(pool.map(fn, items))

def log_failures(records, tag):
    for record in records:
        if record.breach:
            current_app.logger.warning('{} - {} {}'.format(tag, record.error, record.values))
        elif record.error is not None:
            current_app.logger.warning('{} - {}'.format(tag, record.error))
    return records

def cmd_scale(ts, points=()):
    '''Jump operators, graininess and classification at each point

    Without points a single summary record of the scale is returned.
    '''
    if not points:
        summary = dict(
            (key, value) for key, value in ts.describe().items() if key != 'spec'
        )
        # unbounded ends print as inf rather than as an error
        for bound in ('infimum', 'supremum'):
            if math.isinf(summary[bound]):
                summary[bound] = format_point(summary[bound])
        return [OutputRecord('scale', ts.spec, summary)], SCALE_SUMMARY_COLUMNS

    def evaluate(t):
        try:
            point = ts.locate(t)
            return OutputRecord('scale', ts.spec, dict(
                t=point, sigma=ts.sigma(point), rho=ts.rho(point),
                mu=ts.mu(point), nu=ts.nu(point),
                classification=ts.classify(point).tag,
                in_kappa=ts.in_kappa(point), in_kappa_dual=ts.in_kappa_dual(point)
            ))
        except DeltaCalcError as e:
            return OutputRecord.failed('scale', ts.spec, e, t=t)

    records = [evaluate(t) for t in points]
    return log_failures(records, 'SCALE'), SCALE_POINT_COLUMNS

def cmd_diff(
    expr, ts, points, nabla=False, method=AUTO, tol=None, parallel=False,
    command='diff'
):
    '''Delta or nabla derivative of ``expr`` at each point

    Arguments:
        expr: parsed expression tree
        ts: the time scale
        points: reals to evaluate at

    Keyword Arguments:
        nabla: backward derivative
        method: ``auto`` evaluates the catalog (or the fallback) and both
            oracles and reports the largest gap; ``quotient`` and
            ``quadrature`` force one path
        tol: absolute quadrature tolerance, ``QUADRATURE_TOL`` when ``None``
        parallel: evaluate the points on a thread pool
        command: name echoed in the records

    Returns:
        ``(records, columns)``
    '''
    config = current_app.config
    mu_rtol = config['MU_RTOL']
    quadrature_options = dict(
        tol=config['QUADRATURE_TOL'] if tol is None else tol,
        rel_tol=config['QUADRATURE_RTOL'],
        max_intervals=config['QUADRATURE_MAX_INTERVALS']
    )
    cross_check_rtol = config['CROSS_CHECK_RTOL']

    derivative = ExpressionDerivative(expr, mu_rtol=mu_rtol)
    f = derivative.function
    text = format_expr(derivative.expr)
    quotient_path = nabla_derivative if nabla else delta_derivative
    quadrature_path = nabla_derivative_quadrature if nabla else delta_derivative_quadrature

    def evaluate(t):
        try:
            if method == QUOTIENT:
                report = quotient_path(ts, f, t, mu_rtol=mu_rtol)
            elif method == QUADRATURE:
                report = quadrature_path(ts, f, t, **quadrature_options)
            else:
                report = derivative.report(ts, t, nabla)
            values = dict(
                expression=text, t=ts.locate(t), mu=report.mu_used,
                value=report.value, method=report.method,
                provenance=report.provenance, nabla=nabla
            )
            if method != AUTO:
                return OutputRecord(command, ts.spec, values)

            quotient = quotient_path(ts, f, t, mu_rtol=mu_rtol).value
            quadrature = quadrature_path(ts, f, t, **quadrature_options).value
            gap = max_abs_gap([report.value, quotient, quadrature])
            values.update(difference_quotient=quotient, quadrature=quadrature, gap=gap)
            return OutputRecord.checked(
                command, ts.spec, values, gap, cross_check_rtol * max(1.0, abs(report.value))
            )
        except DeltaCalcError as e:
            return OutputRecord.failed(command, ts.spec, e, expression=text, t=t)

    records = fan_out(evaluate, points, parallel)
    current_app.logger.debug('DIFF - {} at {} points of {} ({})'.format(
        text, len(records), ts.spec, method
    ))
    columns = ORACLE_COLUMNS if method == AUTO else DIFF_COLUMNS
    return log_failures(records, 'DIFF'), columns

def cmd_table(ts, t, params, tol=None):
    '''All twenty catalog entries cross-checked at one point

    Entries whose parameters or domain do not fit give ``error`` rows.
    '''
    config = current_app.config
    options = dict(
        mu_rtol=config['MU_RTOL'],
        tol=config['QUADRATURE_TOL'] if tol is None else tol,
        rel_tol=config['QUADRATURE_RTOL'],
        max_intervals=config['QUADRATURE_MAX_INTERVALS']
    )
    records = []
    for entry in list_catalog():
        expression = None
        try:
            expression = format_expr(entry.build(params))
            report = cross_check(entry.id, params, ts, t, **options)
        except DeltaCalcError as e:
            records.append(OutputRecord.failed(
                'table', ts.spec, e, id=entry.id, expression=expression, t=t
            ))
            continue
        values = report.as_dict()
        values['expression'] = expression
        tolerance = config['CROSS_CHECK_RTOL'] * max(1.0, abs(report.closed_form))
        records.append(OutputRecord.checked('table', ts.spec, values, report.max_abs_gap, tolerance))
    current_app.logger.debug('TABLE - {} at t={}'.format(ts.spec, t))
    return log_failures(records, 'TABLE'), TABLE_COLUMNS

def cmd_identity_check(ts, window, max_step, tol=None, parallel=False):
    '''Both defect identities at every sampled point of ``window``

    Raises:
        EmptyWindow: if the window misses the scale
    '''
    config = current_app.config
    options = dict(
        mu_rtol=config['MU_RTOL'],
        tol=config['IDENTITY_TOL'] if tol is None else tol,
        loose_tol=config['HYPERBOLIC_TOL']
    )
    points = ts.sample(window[0], window[1], max_step)

    def evaluate(t):
        rv = []
        for defect in (pythagorean_defect, hyperbolic_defect):
            try:
                report = defect(ts, t, **options)
            except DeltaCalcError as e:
                rv.append(OutputRecord.failed(
                    'identity-check', ts.spec, e, t=t,
                    identity=defect.__name__.split('_')[0]
                ))
                continue
            rv.append(OutputRecord.checked(
                'identity-check', ts.spec, report.as_dict(), report.gap, report.tolerance
            ))
        return rv

    records = [record for pair in fan_out(evaluate, points, parallel) for record in pair]
    current_app.logger.debug('IDENTITY - {} points of {}'.format(len(points), ts.spec))
    return log_failures(records, 'IDENTITY'), IDENTITY_COLUMNS

def cmd_integrate(expr, ts, a, b, max_step, check_ftc=False, tol=None):
    '''Delta integral of ``expr`` over ``[a, b]``

    With ``check_ftc`` the delta derivative of ``expr`` is integrated as
    well and compared with ``expr(b) - expr(a)``.

    Raises:
        EmptyWindow: if ``a > b``
        PointNotInScale: if a limit is not a point of ``ts``
    '''
    config = current_app.config
    options = dict(
        tol=config['QUADRATURE_TOL'] if tol is None else tol,
        rel_tol=config['QUADRATURE_RTOL'],
        max_panels=config['QUADRATURE_MAX_INTERVALS']
    )
    canonical = canonicalize(expr)
    text = format_expr(canonical)
    f = to_function(canonical)
    columns = FTC_COLUMNS if check_ftc else INTEGRATE_COLUMNS
    if a > b:
        raise EmptyWindow('integration window [{}, {}] is empty'.format(a, b), window=(a, b))
    a, b = ts.locate(a), ts.locate(b)

    try:
        values = dict(expression=text, a=a, b=b)
        values['value'] = delta_integral(ts, f, a, b, max_step, **options)
        gap, tolerance = 0.0, 0.0
        if check_ftc:
            derivative = ExpressionDerivative(canonical, mu_rtol=config['MU_RTOL'])
            delta_f = RealFunction(lambda s: derivative(ts, s), name='{} delta'.format(text))
            integral = delta_integral(ts, delta_f, a, b, max_step, **options)
            expected = f(b) - f(a)
            residual = abs(integral - expected)
            values.update(expected=expected, residual=residual)
            gap, tolerance = residual, config['FTC_RTOL'] * max(1.0, abs(expected))
        record = OutputRecord.checked('integrate', ts.spec, values, gap, tolerance)
    except DeltaCalcError as e:
        record = OutputRecord.failed('integrate', ts.spec, e, expression=text, a=a, b=b)

    current_app.logger.debug('INTEGRATE - {} over [{}, {}] of {}'.format(text, a, b, ts.spec))
    return log_failures([record], 'INTEGRATE'), columns
