"""Exact generating functions for compositions and strings avoiding substrings."""

__version__ = "0.1.0"

from .correlate import (
    ForbiddenSet,
    Word,
    contains,
    correlation_bits,
    correlation_poly_q,
    correlation_poly_xq,
    validate_antichain,
)
from .engine import (
    AvoidanceResult,
    build_matrix,
    composition_gf,
    det,
    string_gf,
    verify_proof_identities,
)
from .family import ExponentSet, family_gf, family_gf_special, family_words
from .oracle import (
    CoefficientTriangle,
    enumerate_avoiders,
    enumerate_quasi_avoiders,
    enumerate_string_avoiders,
)
from .series import BiPoly, BiSeries, UniPoly, UniSeries
