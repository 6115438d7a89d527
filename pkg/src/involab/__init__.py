"""Exact enumeration workbench for 132-avoiding involutions."""

from .bijections import phi, phi_inv, psi, rtl_lemma_map, stack_sort_word
from .catalog import catalog_names, closed_count, gf_catalog, gf_rational
from .contfrac import cf_catalog, rtl_gf
from .errors import DomainError, LimitExceeded, UnknownName
from .oracle import CountQuery, count, distribution, enumerate_objects, parity_split
from .perm import PatternSpec, count_occurrences, parse_perm, statistics
from .series import RationalFunction, Series, catalan_series, chebyshev_U, r_k
from .succession import ballot_count, dp_inversions, dp_rises, level_counts
from .verify import verify
from .words import classify, right_dyck_steps, xi, xi_inv

__version__ = "0.1.0"

__all__ = [
    "CountQuery", "DomainError", "LimitExceeded", "PatternSpec", "RationalFunction",
    "Series", "UnknownName", "ballot_count", "catalan_series", "catalog_names",
    "cf_catalog", "chebyshev_U", "classify", "closed_count", "count",
    "count_occurrences", "distribution", "dp_inversions", "dp_rises",
    "enumerate_objects", "gf_catalog", "gf_rational", "level_counts", "parity_split",
    "parse_perm", "phi", "phi_inv", "psi", "r_k", "right_dyck_steps", "rtl_gf",
    "rtl_lemma_map", "stack_sort_word", "statistics", "verify", "xi", "xi_inv",
]
