"""Exact local parts of type D Weyl group multiple Dirichlet series.

Coefficients are returned in their canonical text form (for example
``-p^36*(p^3 - 2*p^2 + 2*p - 1)*g1^3``) or as the JSON structures produced by
the ``dwmds`` command-line tool.
"""

import json

from . import _core

__version__ = _core.__version__

count_patterns = _core.count_patterns
list_patterns = _core.list_patterns
explain = _core.explain
weyl_dimension = _core.weyl_dimension
positive_roots = _core.positive_roots


def local_part(rank, twist, n=1, weight=None, jobs=0):
    """Full local part as a dict ``{"rank", "n", "twist", "coefficients"}``."""
    return json.loads(_core.local_part_json(rank, list(twist), n, weight, jobs))


def coefficient(rank, twist, n, weight):
    """Coefficient of ``x^weight`` with pattern statistics for its weight class."""
    return _core.coefficient(rank, list(twist), n, list(weight))


def verify(suite, **limits):
    """Run a verification suite; returns the report as a dict."""
    return json.loads(_core.verify_json(suite, **limits))


__all__ = [
    "coefficient",
    "count_patterns",
    "explain",
    "list_patterns",
    "local_part",
    "positive_roots",
    "verify",
    "weyl_dimension",
]
