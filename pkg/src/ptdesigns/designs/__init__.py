"""Designs: parameters, structural predicates, transforms and file I/O."""

from .design import (
    T_CAP,
    Design,
    DesignParameters,
    NicelyAffineReport,
    StructuralReport,
    block_action,
    block_permutation,
    combined_action,
    complement,
    derived,
    dual,
    identities,
    is_quasisymmetric,
    is_symmetric,
    is_trivial,
    nicely_affine,
    parameters,
    preserves,
    residual,
    structural_checks,
)
from .io import format_dsg, load_dsg, parse_dsg, save_dsg

__all__ = [
    "T_CAP", "Design", "DesignParameters", "NicelyAffineReport", "StructuralReport",
    "block_action", "block_permutation", "combined_action", "complement", "derived", "dual",
    "format_dsg", "identities", "is_quasisymmetric", "is_symmetric", "is_trivial", "load_dsg",
    "nicely_affine", "parameters", "parse_dsg", "preserves", "residual", "save_dsg",
    "structural_checks",
]
