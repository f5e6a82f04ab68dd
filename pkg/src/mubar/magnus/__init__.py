"""Truncated non-commutative series and the Magnus expansion."""

from ._kernel import BACKEND
from .psi import ArcSeriesMap, base_meridian_map, psi_word, rho_fixpoint
from .series import (
    TruncatedSeries,
    min_nonconstant_degree,
    monomials,
    render_series,
    series_inverse_of_one_plus,
    series_mul,
)

__all__ = [
    "BACKEND",
    "ArcSeriesMap",
    "TruncatedSeries",
    "base_meridian_map",
    "min_nonconstant_degree",
    "monomials",
    "psi_word",
    "render_series",
    "rho_fixpoint",
    "series_inverse_of_one_plus",
    "series_mul",
]
