"""Veech groups, Kontsevich-Zorich monodromies and arithmeticity certificates
of square-tiled surfaces."""

from ._origamikz import (
    Origami,
    OrigamiError,
    canonical_form,
    certify,
    check_certificate,
    cylinders,
    family,
    family_names,
    galois_pinching,
    group_order,
    hlk_invariant,
    is_reduced,
    monodromy,
    shadow_action,
    shadow_index_sl2,
    stratum,
    veech_index,
)

__all__ = [
    "Origami",
    "OrigamiError",
    "canonical_form",
    "certify",
    "check_certificate",
    "cylinders",
    "family",
    "family_names",
    "galois_pinching",
    "group_order",
    "hlk_invariant",
    "is_reduced",
    "monodromy",
    "shadow_action",
    "shadow_index_sl2",
    "stratum",
    "veech_index",
]

__version__ = "1.0.0"
