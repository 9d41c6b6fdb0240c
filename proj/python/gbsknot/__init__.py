"""Knot-group recognition for generalized Baumslag-Solitar groups."""

from ._gbsknot import (
    GbsError,
    Graph,
    ParseError,
    abelianization,
    classify,
    equal,
    is_elliptic,
    is_identity,
    modular_image,
    normal_form,
    presentation,
    quotient_abelianization,
    run,
)

__all__ = [
    "GbsError",
    "Graph",
    "ParseError",
    "abelianization",
    "classify",
    "equal",
    "is_elliptic",
    "is_identity",
    "modular_image",
    "normal_form",
    "presentation",
    "quotient_abelianization",
    "run",
]
