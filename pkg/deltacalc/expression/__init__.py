# -*- coding: utf-8 -*-
'''The expression language: parsing, canonical form, rendering, symbolic
classical derivatives and matching against the catalog.'''
