"""Exact sheaf cohomology and splitting certification on projective
superspaces P^{n|m}.

The heavy lifting happens in the C++ core; this package exposes the main
operations with JSON-string bundle descriptions (see the project README for
the schema).
"""

from ._core import (
    NotStabilizedError,
    bott_line,
    builtin_bundle,
    cohomology,
    dress_split,
    hom_superdim,
    normalize_bundle,
    peel_splitting_type,
    poly_mul,
    rao_table,
    split_certify,
    super_line_cohomology,
)

__all__ = [
    "NotStabilizedError",
    "bott_line",
    "builtin_bundle",
    "cohomology",
    "dress_split",
    "hom_superdim",
    "normalize_bundle",
    "peel_splitting_type",
    "poly_mul",
    "rao_table",
    "split_certify",
    "super_line_cohomology",
]

__version__ = "0.1.0"
