# -*- coding: utf-8 -*-
'''Click commands attached to the application by :py:func:`register_commands`.'''

import io
import math
import re

import click
from flask import current_app

from deltacalc.exceptions import (
    BadScaleSpec, EmptyWindow, ExpressionSyntaxError, DepthExceeded, PointNotInScale
)
from deltacalc.expression.parser import parse
from deltacalc.reports.commands import (
    cmd_scale, cmd_diff, cmd_table, cmd_identity_check, cmd_integrate,
    DIFF_METHODS, AUTO
)
from deltacalc.reports.records import write_records, JSON, CSV
from deltacalc.scales.parsers import parse_scale, load_scale_file

SEPARATOR = re.compile(r'[,\s]+')

def parse_points(text):
    '''Reals separated by commas or whitespace'''
    rv = []
    for item in SEPARATOR.split(text.strip()):
        if not item:
            continue
        try:
            value = float(item)
        except ValueError:
            raise click.BadParameter('{!r} is not a number'.format(item))
        if not math.isfinite(value):
            raise click.BadParameter('{!r} is not finite'.format(item))
        rv.append(value)
    return rv

def parse_window(text):
    points = parse_points(text)
    if len(points) != 2:
        raise click.BadParameter('a window is two numbers "a,b", got {!r}'.format(text))
    if points[0] > points[1]:
        raise click.UsageError(str(EmptyWindow(
            'window [{}, {}] is empty'.format(points[0], points[1])
        )))
    return points[0], points[1]

def load_scale(scale, scale_file):
    '''The time scale from ``--scale`` or ``--scale-file``'''
    rtol = current_app.config['MEMBERSHIP_RTOL']
    if scale and scale_file:
        raise click.UsageError('give either --scale or --scale-file, not both')
    try:
        if scale_file:
            return load_scale_file(scale_file, rtol=rtol)
        if scale:
            return parse_scale(scale, rtol=rtol)
    except BadScaleSpec as e:
        raise click.UsageError(str(e))
    raise click.UsageError('one of --scale or --scale-file is required')

def load_expression(text):
    try:
        return parse(text)
    except (ExpressionSyntaxError, DepthExceeded) as e:
        raise click.UsageError(str(e))

def output_format(as_json, as_csv):
    if as_json and as_csv:
        raise click.UsageError('--json and --csv are exclusive')
    if as_json:
        return JSON
    if as_csv:
        return CSV
    return current_app.config['OUTPUT_FORMAT']

def emit(ctx, records, columns, as_json, as_csv):
    '''Print the records and exit 1 when any of them failed'''
    stream = io.StringIO()
    write_records(
        records, columns, output_format(as_json, as_csv), stream,
        digits=current_app.config['SIGNIFICANT_DIGITS']
    )
    click.echo(stream.getvalue(), nl=False)
    if not all(record.ok for record in records):
        ctx.exit(1)

def scale_options(f):
    f = click.option(
        '--scale-file', type=click.Path(dir_okay=False),
        help='JSON scale description file'
    )(f)
    f = click.option('--scale', help='compact scale string such as Z, hZ:0.5 or q:2')(f)
    return f

def output_options(f):
    f = click.option('--csv', 'as_csv', is_flag=True, help='CSV output')(f)
    f = click.option('--json', 'as_json', is_flag=True, help='one JSON object per line')(f)
    return f

@click.command('scale')
@scale_options
@click.option('--points', default='', help='points to inspect, "0,1.5,3"')
@output_options
@click.pass_context
def scale_command(ctx, scale, scale_file, points, as_json, as_csv):
    '''Jump operators, graininess and classification of scale points'''
    ts = load_scale(scale, scale_file)
    records, columns = cmd_scale(ts, parse_points(points))
    emit(ctx, records, columns, as_json, as_csv)

def _diff_options(f):
    f = click.option('--parallel', is_flag=True, help='evaluate points on a thread pool')(f)
    f = click.option('--tol', type=float, default=None, help='absolute quadrature tolerance')(f)
    f = click.option('--nabla', is_flag=True, help='backward (nabla) derivative')(f)
    f = click.option('--points', required=True, help='points to evaluate at, "0,1,2"')(f)
    return f

@click.command('diff')
@click.argument('expression')
@scale_options
@_diff_options
@click.option(
    '--method', type=click.Choice(DIFF_METHODS), default=AUTO, show_default=True,
    help='auto uses the catalog and both oracles'
)
@output_options
@click.pass_context
def diff_command(ctx, expression, scale, scale_file, points, nabla, tol, parallel, method, as_json, as_csv):
    '''Delta (or nabla) derivative of EXPRESSION'''
    expr = load_expression(expression)
    ts = load_scale(scale, scale_file)
    records, columns = cmd_diff(
        expr, ts, parse_points(points), nabla=nabla, method=method,
        tol=tol, parallel=parallel
    )
    emit(ctx, records, columns, as_json, as_csv)

@click.command('oracle')
@click.argument('expression')
@scale_options
@_diff_options
@output_options
@click.pass_context
def oracle_command(ctx, expression, scale, scale_file, points, nabla, tol, parallel, as_json, as_csv):
    '''All three evaluation paths for EXPRESSION and their largest gap'''
    expr = load_expression(expression)
    ts = load_scale(scale, scale_file)
    records, columns = cmd_diff(
        expr, ts, parse_points(points), nabla=nabla, method=AUTO,
        tol=tol, parallel=parallel, command='oracle'
    )
    emit(ctx, records, columns, as_json, as_csv)

@click.command('integrate')
@click.argument('expression')
@scale_options
@click.option('--window', required=True, help='integration limits "a,b"')
@click.option('--max-step', type=float, default=None, help='widest quadrature panel')
@click.option('--tol', type=float, default=None, help='absolute quadrature tolerance')
@click.option('--check-ftc', is_flag=True, help='integrate the delta derivative too')
@output_options
@click.pass_context
def integrate_command(ctx, expression, scale, scale_file, window, max_step, tol, check_ftc, as_json, as_csv):
    '''Delta integral of EXPRESSION over the window'''
    expr = load_expression(expression)
    ts = load_scale(scale, scale_file)
    a, b = parse_window(window)
    max_step = current_app.config['DEFAULT_MAX_STEP'] if max_step is None else max_step
    try:
        records, columns = cmd_integrate(expr, ts, a, b, max_step, check_ftc=check_ftc, tol=tol)
    except (EmptyWindow, PointNotInScale) as e:
        raise click.UsageError(str(e))
    emit(ctx, records, columns, as_json, as_csv)

@click.command('table')
@scale_options
@click.option('--points', required=True, help='the point t')
@click.option('--k', type=float, required=True)
@click.option('--c', type=float, required=True)
@click.option('--n', type=int, required=True)
@click.option('--tol', type=float, default=None, help='absolute quadrature tolerance')
@output_options
@click.pass_context
def table_command(ctx, scale, scale_file, points, k, c, n, tol, as_json, as_csv):
    '''The twenty catalog formulas cross-checked at one point'''
    ts = load_scale(scale, scale_file)
    point = parse_points(points)
    if len(point) != 1:
        raise click.BadParameter('table takes exactly one point', param_hint='--points')
    records, columns = cmd_table(ts, point[0], dict(k=k, c=c, n=n), tol=tol)
    emit(ctx, records, columns, as_json, as_csv)

@click.command('identity-check')
@scale_options
@click.option('--window', required=True, help='sample window "a,b"')
@click.option('--max-step', type=float, default=None, help='spacing on dense parts')
@click.option('--tol', type=float, default=None, help='pythagorean identity tolerance')
@click.option('--parallel', is_flag=True, help='evaluate points on a thread pool')
@output_options
@click.pass_context
def identity_check_command(ctx, scale, scale_file, window, max_step, tol, parallel, as_json, as_csv):
    '''Both defect identities of the time scale trigonometric functions'''
    ts = load_scale(scale, scale_file)
    max_step = current_app.config['DEFAULT_MAX_STEP'] if max_step is None else max_step
    try:
        records, columns = cmd_identity_check(
            ts, parse_window(window), max_step, tol=tol, parallel=parallel
        )
    except EmptyWindow as e:
        raise click.UsageError(str(e))
    emit(ctx, records, columns, as_json, as_csv)

COMMANDS = (
    scale_command, diff_command, oracle_command, integrate_command,
    table_command, identity_check_command
)

def register_commands(app):
    for command in COMMANDS:
        app.cli.add_command(command)
    return None
