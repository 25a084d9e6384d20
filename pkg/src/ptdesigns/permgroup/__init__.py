"""Permutation groups: arithmetic, stabilizer chains and action properties."""

from .action import (
    ActionReport,
    CosetAction,
    action_report,
    coset_action,
    is_block_system,
    is_k_transitive,
    minimal_block,
    minimal_block_system,
    orbit_count_on_pairs,
    rank,
    suborbits,
    transitivity_degree,
)
from .chain import StabilizerChain
from .group import (
    GeneratedGroup,
    alternating_group,
    build_chain,
    closure_elements,
    cyclic_group,
    derived_subgroup,
    element_mapping,
    normal_closure,
    orbit,
    orbits,
    point_stabilizer,
    pointwise_stabilizer,
    symmetric_group,
)
from .io import format_grp, load_grp, parse_grp, save_grp
from .perm import Permutation

__all__ = [
    "ActionReport", "CosetAction", "GeneratedGroup", "Permutation", "StabilizerChain",
    "action_report", "alternating_group", "build_chain", "closure_elements", "coset_action",
    "cyclic_group", "derived_subgroup", "element_mapping", "format_grp", "is_block_system",
    "is_k_transitive", "load_grp", "minimal_block", "minimal_block_system", "normal_closure",
    "orbit", "orbit_count_on_pairs", "orbits", "parse_grp", "point_stabilizer",
    "pointwise_stabilizer", "rank", "save_grp", "suborbits", "symmetric_group",
    "transitivity_degree",
]
