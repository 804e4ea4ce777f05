"""Littlewood-Richardson coefficients of Jack functions."""

from .stanley import (
    ROUTES,
    LRReport,
    conjugate_duality_check,
    j_n1_in_qbasis,
    complement_dominance_check,
    lr_oracle,
    make_report,
    marked_rect_lr,
    marked_rectangle,
    marked_representations,
    rect_lr,
    triples,
)
from .sweep import positivity_sweep

__all__ = [
    "LRReport",
    "ROUTES",
    "conjugate_duality_check",
    "j_n1_in_qbasis",
    "complement_dominance_check",
    "lr_oracle",
    "make_report",
    "marked_rect_lr",
    "marked_rectangle",
    "marked_representations",
    "positivity_sweep",
    "rect_lr",
    "triples",
]
