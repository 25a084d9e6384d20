"""Design families with their acting groups.

Each builder returns a :class:`Construction`: the design, the acting
permutation group on its points and, for affine designs, the translation
subgroup.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

import numpy as np

from ..algebra import (
    GF,
    MatrixGroup,
    ProjectiveSpace,
    affine_hyperplane_cosets,
    forms_polarising,
    general_linear,
    hyperovals_pg24,
    projective_group,
    special_linear,
    symplectic_group,
    translations,
)
from ..designs import Design
from ..permgroup import (
    GeneratedGroup,
    Permutation,
    alternating_group,
    coset_action,
    orbits,
    symmetric_group,
)


@dataclass
class Construction:
    design: Design
    group: GeneratedGroup | None
    translations: GeneratedGroup | None = None
    notes: dict = field(default_factory=dict)


def complete_design(v: int, k: int) -> Design:
    if not 1 < k <= v:
        raise ValueError(f"complete design needs 1 < k <= v, got v={v}, k={k}")
    return Design(v, combinations(range(v), k), f"C({v},{k})")


def complete(v: int, k: int) -> Construction:
    return Construction(complete_design(v, k), symmetric_group(v).relabel(f"Sym({v})"))


# -- projective and affine geometry --------------------------------------------


PROJECTIVE_GROUPS = ("PSL", "PGL", "PSigmaL", "PGammaL")


def pg_design(d: int, q: int, kind: str = "hyperplanes", group: str = "PSL") -> Construction:
    """Points and hyperplanes (d > 2) or points and lines (d >= 4) of PG(d-1, q)."""
    if kind == "hyperplanes" and d <= 2:
        raise ValueError("hyperplane designs need d > 2")
    if kind == "lines" and d < 4:
        raise ValueError("line designs need d >= 4")
    if kind not in ("hyperplanes", "lines"):
        raise ValueError(f"kind must be hyperplanes or lines, not {kind!r}")
    if group not in PROJECTIVE_GROUPS:
        raise ValueError(f"group must be one of {PROJECTIVE_GROUPS}")
    space = ProjectiveSpace(d, q)
    name = "PG" if kind == "hyperplanes" else "PG_1"
    D = Design(space.npoints, space.objects_as_point_sets(kind), f"{name}({d - 1},{q})")
    return Construction(D, projective_group(d, q, group))


AFFINE_GROUPS = ("ASL", "AGL", "ASigmaL", "AGammaL")


def ag_design(f: int, q: int, group: str = "ASL") -> Construction:
    """AG(f, q): vectors and affine hyperplanes, with an affine group and its translations."""
    if f < 2:
        raise ValueError("affine designs need f >= 2")
    if group not in AFFINE_GROUPS:
        raise ValueError(f"group must be one of {AFFINE_GROUPS}")
    F = GF(q)
    D = Design(q**f, affine_hyperplane_cosets(f, F), f"AG({f},{q})")
    base = special_linear(F, f) if group in ("ASL", "ASigmaL") else general_linear(F, f)
    semi = MatrixGroup(F, f, base.generators, base.label, frobenius=group in ("ASigmaL", "AGammaL"))
    G = semi.affine(f"{group}({f},{q})")
    return Construction(D, G, translations(f, F))


# -- quadratic forms ---------------------------------------------------------------


def _forms_blocks(m: int, sign: str) -> list[tuple[int, ...]]:
    blocks = []
    for Q in forms_polarising(m):
        T = Q.truth_table
        # elliptic: the singular vectors; hyperbolic: the non-singular ones
        target = 0 if Q.kind == "elliptic" else 1
        inc = np.flatnonzero(T == target)
        if sign == "+":
            inc = np.flatnonzero(T != target)
        blocks.append(tuple(int(x) for x in inc))
    return blocks


def quadratic_forms_design(m: int, sign: str = "-", e: int = 1, derived: bool = False) -> Construction:
    """S^-(2m) or S^+(2m): vectors against all forms polarising to the fixed alternating form.

    The group is 2^{2m}:Sp(2m/e, 2^e), or its subgroup 2^{2m}:Sp(2m/e, 2^e)'
    when ``derived`` is set.
    """
    if m < 2:
        raise ValueError("m must be at least 2")
    if sign not in "+-" or len(sign) != 1:
        raise ValueError("sign must be '+' or '-'")
    if m % e:
        raise ValueError(f"e={e} does not divide m={m}")
    blocks = _forms_blocks(m, sign)
    k = 2 ** (2 * m - 1) - 2 ** (m - 1)
    if sign == "+":
        k = 2 ** (2 * m) - k
    if any(len(b) != k for b in blocks):
        raise AssertionError("form incidence does not give the expected block size")
    D = Design(2 ** (2 * m), blocks, f"S{sign}({2 * m})")
    S = symplectic_group(m, e)
    G = S.affine_on_vectors(derived=derived)
    return Construction(D, G, translations(2 * m, 2), {"linear": S.label})


def sp_forms_vectors(m: int = 3, kind: str = "elliptic") -> Construction:
    """Forms of one type against the nonzero vectors, under Sp(2m, 2).

    Points are the forms of the given type (elliptic or hyperbolic); the block
    of a nonzero vector x is the set of forms for which x is singular
    (elliptic) or non-singular (hyperbolic).
    """
    S = symplectic_group(m, 1)
    forms = [Q for Q in forms_polarising(m) if Q.kind == kind]
    target = 0 if kind == "elliptic" else 1
    T = np.array([Q.truth_table for Q in forms])  # (forms, vectors)
    blocks = [np.flatnonzero(T[:, x] == target).tolist() for x in range(1, 2 ** (2 * m))]
    D = Design(len(forms), blocks, f"Sp({2 * m},2) {kind} forms/vectors")
    return Construction(D, S.on_forms(forms).relabel(f"Sp({2 * m},2) on {kind} forms"))


# -- hyperovals -----------------------------------------------------------------


@lru_cache(maxsize=None)
def _hyperovals():
    return hyperovals_pg24()


def hyperoval_design(group: str = "PSigmaL") -> Construction:
    """PG(2,4) points against the PSL(3,4)-orbit of the lexicographically least hyperoval."""
    if group not in ("PSL", "PSigmaL"):
        raise ValueError("group must be PSL or PSigmaL")
    H = _hyperovals()
    D = Design(21, H.orbit_members(H.orbit[0]), "PG(2,4)^hyp")
    return Construction(D, projective_group(3, 4, group))


# -- Alt(7) on 15 points -------------------------------------------------------------

FANO_LINES = tuple(tuple(sorted((i, (i + 1) % 7, (i + 3) % 7))) for i in range(7))


def _fano_collineations(lines) -> GeneratedGroup:
    """Stabilizer in Sym(7) of a set of Fano lines, generated greedily from its elements."""
    from itertools import permutations

    lineset = set(lines)
    gens: list[Permutation] = []
    for img in permutations(range(7)):
        if all(tuple(sorted(img[x] for x in L)) in lineset for L in lines):
            g = Permutation(img)
            if gens and g in GeneratedGroup(7, gens):
                continue
            gens.append(g)
            if GeneratedGroup(7, gens).order() == 168:
                break
    return GeneratedGroup(7, gens, "PSL(3,2)")


@lru_cache(maxsize=None)
def alt7_on_15() -> Construction:
    """Alt(7) on the 15 cosets of a Fano-plane stabilizer H.

    Conjugating H by the odd permutation (0 1) gives a subgroup K of Alt(7)
    in the other conjugacy class; K has an orbit of length 7 on the cosets,
    and the Alt(7)-images of that orbit are the blocks.
    """
    A7 = alternating_group(7).relabel("Alt(7)")
    H = _fano_collineations(FANO_LINES)
    act = coset_action(A7, H)
    G = act.group.relabel("Alt(7) on 15 points")
    swap = Permutation.from_cycles(7, [(0, 1)])
    K = [act.image(h.conjugate(swap)) for h in H.generators]
    seven = next(o for o in orbits(15, K) if len(o) == 7)
    seen = {tuple(sorted(seven))}
    frontier = list(seen)
    while frontier:
        blk = frontier.pop()
        for g in G.generators:
            img = tuple(sorted(g.images[x] for x in blk))
            if img not in seen:
                seen.add(img)
                frontier.append(img)
    return Construction(Design(15, seen, "PG(3,2) via Alt(7)"), G)
