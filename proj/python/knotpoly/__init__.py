"""Exact Alexander and A-polynomial computations for torus and satellite knots."""

from ._knotpoly import (
    KnotpolyError,
    TorusKnot,
    alexander,
    check_winding_residue,
    choose_k,
    coprime_factorizations,
    detect,
    detectability,
    dilate,
    enhanced_apoly,
    exact_divide,
    genus,
    glue_verify,
    leading_form,
    lspace_admissible,
    newton_polygon,
    satellite_alexander,
    symmetrize,
    thinness,
    torus_pattern_obstruction,
)

__all__ = [
    "KnotpolyError",
    "TorusKnot",
    "alexander",
    "check_winding_residue",
    "choose_k",
    "coprime_factorizations",
    "detect",
    "detectability",
    "dilate",
    "enhanced_apoly",
    "exact_divide",
    "genus",
    "glue_verify",
    "leading_form",
    "lspace_admissible",
    "newton_polygon",
    "satellite_alexander",
    "symmetrize",
    "thinness",
    "torus_pattern_obstruction",
]
