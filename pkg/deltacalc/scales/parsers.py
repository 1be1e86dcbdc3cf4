# -*- coding: utf-8 -*-
'''Build time scales from compact strings and JSON description files.

Compact forms::

    R                       the real line
    Z                       the integers
    hZ:0.5  hZ:0.5:0.25     h-numbers, optionally offset
    q:2                     q-numbers {q**k : k >= 0}
    set:{0,0.1,0.5,1}       finite set
    union:[0,1]+{2}+[3,4]   union of intervals and points, ends may be inf
    cantor:5                Cantor construction stage
'''

import json
import math
import re

from deltacalc.exceptions import BadScaleSpec
from deltacalc.scales.models import (
    Reals, UniformLattice, QLattice, FiniteSet, IntervalUnion, CantorApprox
)
from deltacalc.utils import MEMBERSHIP_RTOL

INTERVAL = re.compile(r'^\[([^,\]]+),([^,\]]+)\]$')
POINTS = re.compile(r'^\{([^{}]*)\}$')
MEMBER_SEPARATOR = re.compile(r'(?<=[\]}])\s*\+')

def parse_number(value):
    '''Convert a scale description field to a float

    Arguments:
        value: a number or a string, ``inf`` and ``-inf`` allowed

    Returns:
        The value as a float

    Raises:
        BadScaleSpec: for anything that is not a real or is NaN
    '''
    try:
        rv = float(value.strip() if isinstance(value, str) else value)
    except (TypeError, ValueError, AttributeError):
        raise BadScaleSpec('{!r} is not a number'.format(value))
    if math.isnan(rv):
        raise BadScaleSpec('NaN is not allowed in a scale description')
    return rv

def parse_finite(value):
    rv = parse_number(value)
    if math.isinf(rv):
        raise BadScaleSpec('{!r} must be finite'.format(value))
    return rv

def parse_point_list(body):
    items = [i for i in body.split(',') if i.strip()]
    if not items:
        raise BadScaleSpec('empty point list')
    return [parse_finite(i) for i in items]

def parse_depth(value):
    try:
        depth = float(value)
    except (TypeError, ValueError):
        raise BadScaleSpec('cantor depth {!r} is not an integer'.format(value))
    if not depth.is_integer():
        raise BadScaleSpec('cantor depth {!r} is not an integer'.format(value))
    return int(depth)

def parse_union(body):
    intervals = []
    for part in MEMBER_SEPARATOR.split(body):
        part = part.strip().replace(' ', '')
        if not part:
            raise BadScaleSpec('empty union member in {!r}'.format(body))
        interval = INTERVAL.match(part)
        points = POINTS.match(part)
        if interval:
            intervals.append((parse_number(interval.group(1)), parse_number(interval.group(2))))
        elif points:
            intervals.extend((p, p) for p in parse_point_list(points.group(1)))
        else:
            raise BadScaleSpec('union member {!r} is neither [a,b] nor {{...}}'.format(part))
    return intervals

def parse_scale(spec, rtol=MEMBERSHIP_RTOL):
    '''Parse a compact scale string

    Arguments:
        spec: compact scale string, see the module docstring

    Keyword Arguments:
        rtol: membership tolerance handed to the scale

    Returns:
        A :py:class:`~deltacalc.scales.models.TimeScale`

    Raises:
        BadScaleSpec: if the string cannot be parsed or describes an
            invalid scale
    '''
    if not isinstance(spec, str) or not spec.strip():
        raise BadScaleSpec('scale string must be nonempty')
    spec = spec.strip()

    if spec == 'R':
        return Reals(rtol=rtol)
    if spec == 'Z':
        return UniformLattice(1.0, rtol=rtol)

    kind, sep, body = spec.partition(':')
    if not sep:
        raise BadScaleSpec('unknown scale {!r}'.format(spec))

    if kind == 'hZ':
        fields = body.split(':')
        if len(fields) > 2:
            raise BadScaleSpec('lattice takes a step and an optional offset: {!r}'.format(spec))
        step = parse_finite(fields[0])
        offset = parse_finite(fields[1]) if len(fields) == 2 else 0.0
        return UniformLattice(step, offset, rtol=rtol)
    elif kind == 'q':
        return QLattice(parse_finite(body), rtol=rtol)
    elif kind == 'set':
        points = POINTS.match(body.replace(' ', ''))
        if not points:
            raise BadScaleSpec('finite set must be written set:{{...}}, got {!r}'.format(spec))
        return FiniteSet(parse_point_list(points.group(1)), rtol=rtol)
    elif kind == 'union':
        return IntervalUnion(parse_union(body), rtol=rtol)
    elif kind == 'cantor':
        return CantorApprox(parse_depth(body), rtol=rtol)

    raise BadScaleSpec('unknown scale kind {!r}'.format(kind))

def scale_from_dict(data, rtol=MEMBERSHIP_RTOL):
    '''Build a scale from a decoded JSON description

    Arguments:
        data: dict with a ``kind`` key and the kind's fields
            (``h``, ``offset``, ``q``, ``points``, ``intervals``, ``depth``)

    Returns:
        A :py:class:`~deltacalc.scales.models.TimeScale`

    Raises:
        BadScaleSpec: on unknown kinds or missing fields
    '''
    if not isinstance(data, dict):
        raise BadScaleSpec('scale description must be a JSON object')
    kind = data.get('kind')

    try:
        if kind == 'reals':
            return Reals(rtol=rtol)
        elif kind == 'lattice':
            return UniformLattice(
                parse_finite(data['h']), parse_finite(data.get('offset', 0)), rtol=rtol
            )
        elif kind == 'qlattice':
            return QLattice(parse_finite(data['q']), rtol=rtol)
        elif kind == 'finite':
            return FiniteSet([parse_finite(p) for p in data['points']], rtol=rtol)
        elif kind == 'union':
            intervals = []
            for interval in data['intervals']:
                if not isinstance(interval, (list, tuple)) or len(interval) != 2:
                    raise BadScaleSpec('interval {!r} must be a pair'.format(interval))
                intervals.append((parse_number(interval[0]), parse_number(interval[1])))
            return IntervalUnion(intervals, rtol=rtol)
        elif kind == 'cantor':
            return CantorApprox(parse_depth(data['depth']), rtol=rtol)
    except KeyError as e:
        raise BadScaleSpec('scale of kind {!r} is missing field {}'.format(kind, e))
    except TypeError:
        raise BadScaleSpec('scale of kind {!r} has a malformed field'.format(kind))

    raise BadScaleSpec('unknown scale kind {!r}'.format(kind))

def load_scale_file(file_target, rtol=MEMBERSHIP_RTOL):
    '''Read a JSON scale description file

    Arguments:
        file_target: path to the JSON file

    Returns:
        A :py:class:`~deltacalc.scales.models.TimeScale`
    '''
    try:
        with open(file_target) as f:
            data = json.load(f)
    except (IOError, OSError) as e:
        raise BadScaleSpec('could not read scale file {}: {}'.format(file_target, e))
    except ValueError as e:
        raise BadScaleSpec('scale file {} is not valid JSON: {}'.format(file_target, e))
    return scale_from_dict(data, rtol=rtol)
