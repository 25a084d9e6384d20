"""Designs from a group G0 of matrices and an orbit of subspaces.

Given G0 <= GL(d,p) transitive on nonzero vectors and a G0-orbit M of
subspaces on which G0 is 2-transitive, the cosets of the members of M are the
blocks of a design with group p^d:G0. Three instances.
"""

from ptdesigns.algebra import GF, enumerate_subspaces, general_linear
from ptdesigns.constructions import (
    ConstructionInput,
    GammaL1Subgroup,
    alt7_matrices,
    construction_regN,
    gammal1_matrices,
    subfield_subspace,
    subspace_orbit,
)
from ptdesigns.designs import nicely_affine, parameters
from ptdesigns.errors import ConstructionError
from ptdesigns.pairwise import verify

F2 = GF(2)
gammal = gammal1_matrices(GammaL1Subgroup(2, 4, 1, 0, 1))
cases = [
    ("GL(3,2), planes", ConstructionInput(2, 3, general_linear(F2, 3), enumerate_subspaces(F2, 3, 2))),
    ("Alt(7) < GL(4,2), hyperplanes", ConstructionInput(2, 4, alt7_matrices(), enumerate_subspaces(F2, 4, 3))),
    ("GammaL(1,16), GF(4)-lines", ConstructionInput(2, 4, gammal, subspace_orbit(gammal, subfield_subspace(16, 2)))),
]
for name, inp in cases:
    c = construction_regN(inp)
    p = parameters(c.design)
    ok = verify(c.design, c.group).verdict
    na = nicely_affine(c.design, c.translations)
    print(f"{name:32s} {p.describe():12s} r={c.notes['r']:2d} mu={p.mu} "
          f"pairwise transitive: {ok}, parallel classes: {len(na.orbit_partition)}")

# GammaL(1,16) is only 1-transitive on the 15 hyperplanes of GF(2)^4.
try:
    construction_regN(ConstructionInput(2, 4, gammal, enumerate_subspaces(F2, 4, 3)))
except ConstructionError as exc:
    print("rejected:", exc)
