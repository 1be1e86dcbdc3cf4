# -*- coding: utf-8 -*-
'''The app module, containing the app factory function.'''

import logging
import os
import sys

import click
from flask import Flask
from flask.logging import default_handler
from werkzeug.utils import import_string

from deltacalc.reports.cli import register_commands

DEFAULT_CONFIG = 'deltacalc.settings.ProdConfig'

def create_app(config=None):
    '''An application factory, as explained here:
        http://flask.pocoo.org/docs/patterns/appfactories/

    The application carries no routes; it holds the configuration, the
    logger and the command line.

    Keyword Arguments:
        config: a config object or import path to one; defaults to the
            ``CONFIG`` environment variable, then to production
    '''
    config_string = config or os.environ.get('CONFIG', DEFAULT_CONFIG)
    if isinstance(config_string, str):
        config = import_string(config_string)
    else:
        config = config_string
        config_string = getattr(config, 'ENV', config.__name__)
    app = Flask('deltacalc')
    app.config.from_object(config)
    register_commands(app)
    register_logging(app, config_string)
    return app

class CommandFilter(logging.Filter):
    '''
    This is a filter which injects the running command into the log.
    '''
    def filter(self, record):
        ctx = click.get_current_context(silent=True)
        record.command = ctx.info_name if ctx is not None else '-'
        return True

def register_logging(app, config_string):
    if 'prod' in config_string.lower():

        # send everything to stderr so stdout only carries records
        app.logger.removeHandler(default_handler)

        app.logger.setLevel(logging.INFO)
        stderr = logging.StreamHandler(sys.stderr)
        stderr.setFormatter(logging.Formatter(
            '''--------------------------------------------------------------------------------
%(asctime)s | %(levelname)s in %(module)s [%(funcName)s] | %(command)s | [%(pathname)s:%(lineno)d] | %(message)s
--------------------------------------------------------------------------------'''
        ))
        stderr.addFilter(CommandFilter())
        app.logger.addHandler(stderr)

    elif 'test' in config_string.lower():
        app.logger.setLevel(logging.CRITICAL)

    else:
        # log to console for dev
        app.logger.setLevel(logging.DEBUG)

    return None
