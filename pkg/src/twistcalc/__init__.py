"""Exact Poincaré-series calculus for Frobenius-twisted Ext groups."""

from .errors import TwistcalcError
from .graded import BigradedTable, GradedDims, frobenius_stretch, make_Er, shift, sym_hilbert, tensor, total_dim
from .twist_engine import ExtTable, fit_polynomial, periodic_remainder, untwist, untwist_general

__version__ = "0.1.0"

__all__ = [
    "TwistcalcError",
    "GradedDims",
    "BigradedTable",
    "make_Er",
    "tensor",
    "shift",
    "frobenius_stretch",
    "total_dim",
    "sym_hilbert",
    "ExtTable",
    "untwist",
    "untwist_general",
    "periodic_remainder",
    "fit_polynomial",
    "__version__",
]
