"""Exact Newton polytopes, mixed volumes, balanced fans and tropical counts.

All scalars crossing the boundary are exact: integers stay Python ints,
rationals travel as fractions.Fraction, and floats are rejected.
"""

from ._core import (
    DomainError,
    Fan,
    ParseError,
    Polytope,
    ResourceError,
    WeightedFan,
    bkk_count,
    bkk_via_fans,
    hilbert_function,
    is_balanced,
    is_complete,
    make_weighted_fan,
    minkowski_sum,
    mixed_volume,
    newton_polytope,
    normal_fan,
    parse_polynomial,
    pascal_residual,
    poincare_check,
    polytope_from_json,
    polytope_to_json,
    render_svg,
    scale,
    stable_intersection,
    tropical_hypersurface,
    volume,
    volume_ehrhart,
    volume_polynomial,
    weighted_equivalent,
    weighted_fan_from_json,
    weighted_fan_to_json,
    weighted_sum,
)

__all__ = [
    "DomainError",
    "Fan",
    "ParseError",
    "Polytope",
    "ResourceError",
    "WeightedFan",
    "bkk_count",
    "bkk_via_fans",
    "hilbert_function",
    "is_balanced",
    "is_complete",
    "make_weighted_fan",
    "minkowski_sum",
    "mixed_volume",
    "newton_polytope",
    "normal_fan",
    "parse_polynomial",
    "pascal_residual",
    "poincare_check",
    "polytope_from_json",
    "polytope_to_json",
    "render_svg",
    "scale",
    "stable_intersection",
    "tropical_hypersurface",
    "volume",
    "volume_ehrhart",
    "volume_polynomial",
    "weighted_equivalent",
    "weighted_fan_from_json",
    "weighted_fan_to_json",
    "weighted_sum",
]
