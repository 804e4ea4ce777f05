"""Jack symmetric functions: oracle, Pieri coefficients and the filtration construction."""

from .filtration import jack_Q_filtration, nested_skew, rect_removal_check
from .oracle import (
    JackCache,
    JackTriple,
    default_cache,
    gram_schmidt,
    jack_J,
    jack_P,
    jack_Q,
    jack_in_qbasis,
    jack_triple,
)
from .pieri import PIERI_ASSIGNMENT, fit_pieri_assignment, pieri_coeff, pieri_oracle

__all__ = [
    "JackCache",
    "JackTriple",
    "PIERI_ASSIGNMENT",
    "default_cache",
    "fit_pieri_assignment",
    "gram_schmidt",
    "jack_J",
    "jack_P",
    "jack_Q",
    "jack_Q_filtration",
    "jack_in_qbasis",
    "jack_triple",
    "nested_skew",
    "pieri_coeff",
    "pieri_oracle",
    "rect_removal_check",
]
