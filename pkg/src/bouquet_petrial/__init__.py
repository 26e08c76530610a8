"""Partial-Petrial genus polynomials of bouquets (one-vertex ribbon graphs)."""

from .boundary import boundary_count, euler_characteristic, euler_genus, genus_after_petrial, genus_report
from .closed_forms import canonical_complete_bouquet, canonical_path_bouquet, complete_poly, path_poly
from .interlacement import (
    canonical_graph,
    interlacement_graph,
    is_complete,
    is_path,
    is_prime,
    signed_interlacement_graph,
)
from .polynomial import GenusPolynomial, circle_graph_polynomial, petrial_polynomial
from .rewrite import find_matches, reduce_path_petrial
from .rotation import (
    SignedRotation,
    equivalent,
    inverse_string,
    join,
    loop_kind,
    normalize,
    parse_rotation,
    partial_petrial,
    render,
)

__all__ = [
    "GenusPolynomial",
    "SignedRotation",
    "boundary_count",
    "canonical_complete_bouquet",
    "canonical_graph",
    "canonical_path_bouquet",
    "circle_graph_polynomial",
    "complete_poly",
    "equivalent",
    "euler_characteristic",
    "euler_genus",
    "find_matches",
    "genus_after_petrial",
    "genus_report",
    "interlacement_graph",
    "inverse_string",
    "is_complete",
    "is_path",
    "is_prime",
    "join",
    "loop_kind",
    "normalize",
    "parse_rotation",
    "partial_petrial",
    "path_poly",
    "petrial_polynomial",
    "reduce_path_petrial",
    "render",
    "signed_interlacement_graph",
]
