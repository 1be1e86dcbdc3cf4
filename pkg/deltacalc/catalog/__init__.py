# -*- coding: utf-8 -*-

from deltacalc.catalog.entries import CatalogEntry
from deltacalc.catalog.checks import (
    list_catalog, get_entry, eval_delta, eval_nabla, cross_check, CrossCheckReport
)
