"""
Group ring algebra over F_p for the Galois action on ambiguous ideals
"""

from .group_ring import GroupRingElement, idempotents, prime_field, ring_multiply, to_field
from .exponent_vectors import (
    ExponentVector,
    NormLevel,
    in_norm_kernel,
    invariant_line_check,
    is_scalar_multiple,
    kernel_line_census,
    norm_matrix,
    norm_project,
    tau_act,
    tau_matrix,
)
from .ambiguous import AmbiguousDimensions, ambiguous_dimensions, primitive_ambiguous_orders
from .selftest import KERNEL_LINES, selftest

__all__ = [
    'GroupRingElement',
    'idempotents',
    'prime_field',
    'ring_multiply',
    'to_field',
    'ExponentVector',
    'NormLevel',
    'in_norm_kernel',
    'invariant_line_check',
    'is_scalar_multiple',
    'kernel_line_census',
    'norm_matrix',
    'norm_project',
    'tau_act',
    'tau_matrix',
    'AmbiguousDimensions',
    'ambiguous_dimensions',
    'primitive_ambiguous_orders',
    'KERNEL_LINES',
    'selftest'
]
