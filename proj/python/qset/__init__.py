"""Finite quantum sets: quantum functions, bijections, graphs and relations.

Matrices are numpy complex arrays.  Every verification returns a dict mapping
check names to ``(pass, residual)`` with an overall ``"valid"`` entry.
Failures raise :class:`qset.Error`, whose ``kind`` attribute names the cause.
"""

from ._core import *  # noqa: F401,F403
from ._core import Error, Tolerance  # noqa: F401

__version__ = "0.1.0"
