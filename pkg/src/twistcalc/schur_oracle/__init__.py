"""Brute-force ground truth over Schur algebras of small finite fields."""

from .algebra import SchurAlgebra, build_schur_algebra
from .functors import Compose, Div, Ext, Fr, Id, ParseError, Sym, Ten, parse
from .gf import GF, default_field_size, field
from .modules import ModuleRep, evaluate_functor, hom_dim, hom_dim_dense, hom_space
from .oracle import CrosscheckReport, crosscheck, oracle_ext, oracle_table, piece, twisted
from .resolution import Resolution, ext_dims, ext_from_multiplicities, minimal_resolution

__all__ = [
    "GF",
    "field",
    "default_field_size",
    "SchurAlgebra",
    "build_schur_algebra",
    "Id",
    "Fr",
    "Sym",
    "Div",
    "Ext",
    "Ten",
    "Compose",
    "parse",
    "ParseError",
    "ModuleRep",
    "evaluate_functor",
    "hom_dim",
    "hom_dim_dense",
    "hom_space",
    "Resolution",
    "minimal_resolution",
    "ext_dims",
    "ext_from_multiplicities",
    "oracle_ext",
    "oracle_table",
    "piece",
    "twisted",
    "crosscheck",
    "CrosscheckReport",
]
