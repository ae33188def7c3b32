"""Verma flags of projective covers in category O for gl(3|1) and gl(2|2)."""

from .bgg import composition_series
from .engine import (
    AmbiguousResult,
    DeductionResult,
    cross_projection,
    deduce_projective,
    deduce_with_hint,
    projective_flag,
)
from .flags import CompositionSeries, VermaFlag, project_block, tensor_flag, typical_projective
from .jantzen import certified_weights, min_flag_length
from .lattice import Shape, Weight, form, rho
from .linkage import atypicality, block_id, bruhat_leq, is_linked, linkage_oracle
from .reps import RepKind, rep_dim, rep_weights

__version__ = "0.1.0"

__all__ = [
    "AmbiguousResult",
    "CompositionSeries",
    "DeductionResult",
    "RepKind",
    "Shape",
    "VermaFlag",
    "Weight",
    "atypicality",
    "block_id",
    "bruhat_leq",
    "certified_weights",
    "composition_series",
    "cross_projection",
    "deduce_projective",
    "deduce_with_hint",
    "form",
    "is_linked",
    "linkage_oracle",
    "min_flag_length",
    "project_block",
    "projective_flag",
    "rep_dim",
    "rep_weights",
    "rho",
    "tensor_flag",
    "typical_projective",
]
