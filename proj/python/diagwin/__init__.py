"""Diagonal-window ideals of a generic matrix: monomial algebra, colon
ideals, Betti tables and Groebner bases.

Grids are given as ``rows, cols``; monomials and ideals use the ``x[i,j]``
text notation, e.g. ``"<x[1,1]*x[2,2], x[1,2]*x[2,3]>"``; window chains are
written ``"k1,l1:k2,l2"``.
"""

import json as _json

from ._diagwin import (
    DEFAULT_CHARACTERISTIC,
    DomainError,
    Error,
    ParseError,
    ResourceError,
    SelectionError,
    ShapeMismatchError,
    WindowConstraintError,
    WindowOrderError,
    chain_product,
    colon,
    diagonal_ideal,
    diagonals,
    ideal_equals,
    ideal_product,
    regularity,
)
from . import _diagwin

__version__ = "0.1.0"


def linear_quotients(rows, cols, ideal):
    """Quotient chain in descending order: ``{"order", "colons", "linear"}``."""
    return _json.loads(_diagwin._linear_quotients(rows, cols, ideal))


def verify_colon_lemma(rows, cols, chain, force_brute=False, sample=None, seed=1):
    """Closed-form colon ideals against brute force, step by step."""
    return _json.loads(
        _diagwin._verify_colon_lemma(rows, cols, chain, force_brute, sample, seed))


def betti_table(rows, cols, ideal, field_char=0, method="homology"):
    """Graded Betti numbers: ``{"char", "rows": [{"i", "j", "beta"}], "reg"}``."""
    return _json.loads(_diagwin._betti(rows, cols, ideal, field_char, method))


def groebner(rows, cols, chain, field_char=DEFAULT_CHARACTERISTIC):
    """Reduced Groebner basis of the product of maximal-minor ideals.
    ``field_char=0`` works over the rationals."""
    return _json.loads(_diagwin._groebner(rows, cols, chain, field_char))


def conjecture_check(rows, cols, chain, field_char=DEFAULT_CHARACTERISTIC):
    """Compare the initial ideal of the product with the product of diagonal ideals."""
    return _json.loads(_diagwin._conjecture_check(rows, cols, chain, field_char))


def paper_replay():
    """Recompute the worked examples against the embedded golden data."""
    return _json.loads(_diagwin._paper_replay())


__all__ = [name for name in dir() if not name.startswith("_")]
