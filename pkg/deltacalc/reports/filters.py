# -*- coding: utf-8 -*-
'''Formatting helpers for command output.'''

import math

ERROR = 'error'

def format_number(value, digits=17):
    '''Fixed rendering of a float with ``digits`` significant digits

    ``None`` and non-finite values print as ``error``.
    '''
    if value is None or not math.isfinite(value):
        return ERROR
    return '{:.{}g}'.format(value, digits)

def format_bool(value):
    return 'yes' if value else 'no'

def format_cell(value, digits=17):
    '''Render one cell of a CSV row or a table'''
    if value is None:
        return ''
    if isinstance(value, bool):
        return format_bool(value)
    if isinstance(value, float):
        return format_number(value, digits)
    if isinstance(value, int):
        return str(value)
    return '{}'.format(value)

def json_value(value):
    '''JSON-safe value: non-finite floats become ``error``'''
    if isinstance(value, float) and not math.isfinite(value):
        return ERROR
    return value
