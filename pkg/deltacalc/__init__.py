# -*- coding: utf-8 -*-
'''Delta and nabla calculus on time scales.'''

__version__ = '0.1.0'
