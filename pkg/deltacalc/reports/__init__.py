# -*- coding: utf-8 -*-
'''Command line front end: what the commands compute, how records print.'''
