"""Certified and numerical gap analysis for bilinear control systems."""

from gapforge._core import (
    analyze_file,
    classify,
    closure_dim,
    det_sum_oracle,
    diameter_bound_from_overlap,
    estimate_diameter,
    is_transitive,
    product_basis,
    so_basis,
    spin_basis,
    su_basis,
    sup_overlap,
    tensor_overlap_oracle,
    time_bound_from_diameter,
    wedge_basis,
)

__all__ = [
    "analyze_file",
    "classify",
    "closure_dim",
    "det_sum_oracle",
    "diameter_bound_from_overlap",
    "estimate_diameter",
    "is_transitive",
    "product_basis",
    "so_basis",
    "spin_basis",
    "su_basis",
    "sup_overlap",
    "tensor_overlap_oracle",
    "time_bound_from_diameter",
    "wedge_basis",
]
