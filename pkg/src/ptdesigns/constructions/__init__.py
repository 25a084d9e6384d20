"""Design families, acting groups, the table catalog and bundled group data."""

from .catalog import CatalogRow, catalog, catalog_row, translations_passing, trivial_case
from .families import (
    Construction,
    ag_design,
    alt7_on_15,
    complete,
    complete_design,
    hyperoval_design,
    pg_design,
    quadratic_forms_design,
    sp_forms_vectors,
)
from .gammal1 import (
    GammaL1Subgroup,
    gammal1_is_transitive,
    gammal1_matrices,
    gammal1_orbits,
    standard_form_triples,
    subfield_subspace,
    zsigmondy_ppd,
)
from .golay import (
    d176_design,
    hadamard11,
    hadamard12,
    hs176,
    m11_12,
    m22,
    m22_2,
    m24,
    psl2_11,
    witt22_design,
)
from .regn import ConstructionInput, check_conditions, construction_regN, subspace_orbit
from .sporadic import REGISTRY, SporadicGroupData, alt7_matrices, has_data, load_sporadic


def golay_designs() -> dict[str, Construction]:
    """H12 with M11, H11 with PSL(2,11), the M22 design with M22, and D176 (HS when bundled)."""
    return {
        "H12": Construction(hadamard12(), m11_12()),
        "H11": Construction(hadamard11(), psl2_11()),
        "M22_design": Construction(witt22_design(), m22()),
        "D176": Construction(d176_design(), hs176(),
                             notes={"group_status": "verified" if has_data("HS176") else "construction-only"}),
    }


__all__ = [
    "REGISTRY", "CatalogRow", "Construction", "ConstructionInput", "GammaL1Subgroup",
    "SporadicGroupData", "ag_design", "alt7_matrices", "alt7_on_15", "catalog", "catalog_row",
    "check_conditions", "complete", "complete_design", "construction_regN", "d176_design",
    "gammal1_is_transitive", "gammal1_matrices", "gammal1_orbits", "golay_designs", "hadamard11",
    "hadamard12", "has_data", "hs176", "hyperoval_design", "load_sporadic", "m11_12", "m22", "m22_2",
    "m24", "pg_design", "psl2_11", "quadratic_forms_design", "sp_forms_vectors",
    "standard_form_triples", "subfield_subspace", "subspace_orbit", "translations_passing",
    "trivial_case", "witt22_design", "zsigmondy_ppd",
]
