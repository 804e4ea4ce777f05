"""Even powers of the Vandermonde determinant and the vertex-operator images they produce."""

from .action import (
    apply_delta_q,
    qbasis_delta_coefficient,
    measured_scalar,
    paired_coefficient,
    parameter,
    printed_near_rectangle_scalar,
    x_prime_image,
    x_prime_rank,
)
from .kernel import expand_H1, kernel_violations
from .laurent import (
    CLOSED_FORM_NAMES,
    LaurentPoly,
    delta_coefficient,
    dyson_constant,
    expand_delta,
    expand_delta_above,
    prop39_exponent,
    prop39_values,
)

__all__ = [
    "LaurentPoly",
    "CLOSED_FORM_NAMES",
    "apply_delta_q",
    "delta_coefficient",
    "dyson_constant",
    "qbasis_delta_coefficient",
    "expand_H1",
    "expand_delta",
    "expand_delta_above",
    "kernel_violations",
    "measured_scalar",
    "paired_coefficient",
    "parameter",
    "printed_near_rectangle_scalar",
    "prop39_exponent",
    "prop39_values",
    "x_prime_image",
    "x_prime_rank",
]
