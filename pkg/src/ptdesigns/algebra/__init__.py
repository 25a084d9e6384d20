"""Finite fields, linear and projective geometry, symplectic forms, Golay codes."""

from .codes import LinearCode, format_code, golay_code, load_code, parse_code
from .field import DEFINING_POLYNOMIALS, GF, FiniteField, prime_power
from .geometry import (
    Hyperovals,
    ProjectiveSpace,
    affine_hyperplane_cosets,
    affine_parallel_classes,
    hyperovals_pg24,
    projective_group,
    projective_objects,
    semilinear_closure,
    translations,
)
from .linear import (
    FqMatrix,
    MatrixGroup,
    all_vectors,
    enumerate_subspaces,
    gaussian_binomial,
    general_linear,
    restrict_scalars,
    rref,
    semilinear,
    special_linear,
)
from .mgrp import format_mgrp, load_mgrp, parse_mgrp
from .symplectic import (
    QuadraticForm,
    SymplecticGroup,
    fixed_alternating,
    forms_polarising,
    symplectic_group,
    symplectic_order,
)

__all__ = [
    "DEFINING_POLYNOMIALS", "GF", "FiniteField", "FqMatrix", "Hyperovals", "LinearCode",
    "MatrixGroup", "ProjectiveSpace", "QuadraticForm", "SymplecticGroup", "affine_hyperplane_cosets",
    "affine_parallel_classes", "all_vectors", "enumerate_subspaces", "fixed_alternating",
    "format_code", "format_mgrp", "forms_polarising", "gaussian_binomial", "general_linear",
    "golay_code", "hyperovals_pg24", "load_code", "load_mgrp", "parse_code", "parse_mgrp",
    "prime_power", "projective_group", "projective_objects", "restrict_scalars", "rref",
    "semilinear", "semilinear_closure", "special_linear", "symplectic_group", "symplectic_order",
    "translations",
]
