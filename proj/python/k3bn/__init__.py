"""Brill-Noether numerics for moduli of sheaves on K3 surfaces."""

from ._core import (
    ArgumentError,
    HypothesisError,
    boundary_roots,
    classify,
    dimension_count_check,
    genus_of_class,
    grassmannian_dim,
    interpret_locus,
    intersection_number,
    lattice_pair,
    maximal_stratum_target,
    moduli_dim,
    predict_status,
    render_geography_svg,
    render_table,
    rho,
    run_cli,
    scroll_normal_form,
    serre_dual_params,
    vdim_bn,
    verify_worked_examples,
)

__all__ = [
    "ArgumentError",
    "HypothesisError",
    "boundary_roots",
    "classify",
    "dimension_count_check",
    "genus_of_class",
    "grassmannian_dim",
    "interpret_locus",
    "intersection_number",
    "lattice_pair",
    "maximal_stratum_target",
    "moduli_dim",
    "predict_status",
    "render_geography_svg",
    "render_table",
    "rho",
    "run_cli",
    "scroll_normal_form",
    "serre_dual_params",
    "vdim_bn",
    "verify_worked_examples",
]
