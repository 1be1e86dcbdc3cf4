#!/usr/bin/env python
# -*- coding: utf-8 -*-
import click
from flask.cli import FlaskGroup

from deltacalc.app import create_app

@click.group(cls=FlaskGroup, create_app=create_app, add_default_commands=False)
def manager():
    '''Time scale calculus: jump operators, delta derivatives, the table of
    closed forms and their oracle cross-checks.
    '''

if __name__ == '__main__':
    manager()
