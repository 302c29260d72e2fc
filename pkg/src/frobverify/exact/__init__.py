"""Exact arithmetic layer: rational polynomials, rational functions, parsing."""

from .parser import ParseError, parse_poly
from .poly import (
    T_TABLE,
    W_TABLE,
    X_TABLE,
    Z_TABLE,
    MultiPoly,
    UnknownVariableError,
    VarTable,
    format_poly,
    poly_diff,
    poly_eval,
    poly_substitute,
)
from .ratfun import RatFunW, ratfun_diff, ratfun_equal, ratfun_eval

__all__ = [
    "MultiPoly",
    "ParseError",
    "RatFunW",
    "T_TABLE",
    "UnknownVariableError",
    "VarTable",
    "W_TABLE",
    "X_TABLE",
    "Z_TABLE",
    "format_poly",
    "parse_poly",
    "poly_diff",
    "poly_eval",
    "poly_substitute",
    "ratfun_diff",
    "ratfun_equal",
    "ratfun_eval",
]
