"""Milnor mu and mu-bar invariants of virtual and welded link diagrams."""

from .diagram import (
    BraidWord,
    Diagram,
    Passage,
    close_braid,
    flatten,
    linking_matrix,
    linking_number,
    parse_braid,
    parse_gauss,
    render_gauss,
)
from .errors import ComputationError, InputError, MoveError, MubarError
from .freegroup import GroupWord, parse_word, render_word
from .magnus import BACKEND, TruncatedSeries, psi_word, rho_fixpoint
from .milnor import (
    MuTable,
    classicality_obstruction,
    linking_consistency,
    mu_from_longitudes,
    mu_table,
    parse_longitudes,
    reduce_mod_D,
)
from .moves import Move, apply, fuzz, replay
from .skein import MarkedBraid, check_skein, variants
from .wirtinger import longitude, presentation

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BraidWord",
    "ComputationError",
    "Diagram",
    "GroupWord",
    "InputError",
    "MarkedBraid",
    "Move",
    "MoveError",
    "MuTable",
    "MubarError",
    "Passage",
    "TruncatedSeries",
    "apply",
    "check_skein",
    "classicality_obstruction",
    "close_braid",
    "flatten",
    "fuzz",
    "linking_consistency",
    "linking_matrix",
    "linking_number",
    "longitude",
    "mu_from_longitudes",
    "mu_table",
    "parse_braid",
    "parse_gauss",
    "parse_longitudes",
    "parse_word",
    "presentation",
    "psi_word",
    "reduce_mod_D",
    "render_gauss",
    "render_word",
    "replay",
    "rho_fixpoint",
    "variants",
]
