# -*- coding: utf-8 -*-
'''Output records and the writers for the three output formats.'''

import csv
import json

from deltacalc.exceptions import ToleranceBreach
from deltacalc.reports.filters import ERROR, format_cell, json_value

TABLE, CSV, JSON = 'table', 'csv', 'json'
FORMATS = (TABLE, CSV, JSON)

class OutputRecord(object):
    '''One line of command output

    Attributes:
        command: the subcommand that produced the record
        scale: compact string of the time scale
        values: ordered dict of the inputs and results
        error: ``"<code>: <message>"`` when the evaluation failed
        breach: a tolerance was exceeded
    '''
    def __init__(self, command, scale, values=None, error=None, breach=False):
        self.command = command
        self.scale = scale
        self.values = dict(values or {})
        self.error = error
        self.breach = breach

    @classmethod
    def failed(cls, command, scale, exc, **values):
        return cls(command, scale, values, error=str(exc))

    @classmethod
    def checked(cls, command, scale, values, gap, tolerance):
        '''A record that fails with ``tolerance-breach`` unless ``gap <= tolerance``'''
        if gap <= tolerance:
            return cls(command, scale, values)
        breach = ToleranceBreach(
            'gap {!r} exceeds the tolerance {!r}'.format(gap, tolerance),
            gap=gap, tolerance=tolerance
        )
        return cls(command, scale, values, error=str(breach), breach=True)

    @property
    def ok(self):
        return self.error is None and not self.breach

    def get(self, column):
        if column == 'command':
            return self.command
        if column == 'scale':
            return self.scale
        if column == 'error':
            return self.error
        value = self.values.get(column)
        if value is None and self.error is not None:
            return ERROR
        return value

    def as_dict(self):
        rv = dict(command=self.command, scale=self.scale)
        rv.update((key, json_value(value)) for key, value in self.values.items())
        if self.breach:
            rv['breach'] = True
        if self.error is not None:
            rv['error'] = self.error
        return rv

    def __repr__(self):
        return '<OutputRecord {} {}>'.format(self.command, self.values)

def _rows(records, columns, digits):
    for record in records:
        yield [format_cell(record.get(column), digits) for column in columns]

def write_json(records, stream):
    '''One JSON object per line, floats in shortest round-trip form'''
    for record in records:
        stream.write(json.dumps(record.as_dict()))
        stream.write('\n')

def write_csv(records, columns, stream, digits=17):
    writer = csv.writer(stream, lineterminator='\n')
    writer.writerow(columns)
    for row in _rows(records, columns, digits):
        writer.writerow(row)

def write_table(records, columns, stream, digits=17):
    '''Aligned columns for reading in a terminal'''
    rows = [list(columns)] + list(_rows(records, columns, digits))
    widths = [max(len(row[i]) for row in rows) for i in range(len(columns))]
    for row in rows:
        line = '  '.join(cell.ljust(width) for cell, width in zip(row, widths))
        stream.write(line.rstrip())
        stream.write('\n')

def write_records(records, columns, output_format, stream, digits=17):
    '''Write ``records`` in one of ``table``, ``csv`` or ``json``

    Arguments:
        records: list of :py:class:`OutputRecord`
        columns: column names for the table and CSV formats
        output_format: one of :py:data:`FORMATS`
        stream: a text stream

    Keyword Arguments:
        digits: significant digits of numbers in the table and CSV formats
    '''
    if output_format == JSON:
        write_json(records, stream)
    elif output_format == CSV:
        write_csv(records, columns, stream, digits)
    elif output_format == TABLE:
        write_table(records, columns, stream, digits)
    else:
        raise ValueError('unknown output format {!r}'.format(output_format))
