"""Subshifts of finite type in dimensions one and two, at desk scale."""

from .core import (AlphabetError, DimensionError, Pattern, ShiftSpec, SpecError, Window,
                   disjoint_union, extend_dims, forbid_words, full_shift, g_layer, golden_mean,
                   load_spec, parse_spec, product, save_spec, serialize_spec, translate)
from .lang import (BudgetExhausted, ResolutionDistance, check_convergence, is_locally_admissible,
                   resolution_distance, window_language)

__version__ = "0.1.0"

__all__ = [
    "AlphabetError", "BudgetExhausted", "DimensionError", "Pattern", "ResolutionDistance",
    "ShiftSpec", "SpecError", "Window", "check_convergence", "disjoint_union", "extend_dims",
    "forbid_words", "full_shift", "g_layer", "golden_mean", "is_locally_admissible", "load_spec",
    "parse_spec", "product", "resolution_distance", "save_spec", "serialize_spec", "translate",
    "window_language",
]
