"""Affine 2-designs from a linear group G0 and an orbit of subspaces.

Points are the vectors of V = GF(p)^d and blocks are all cosets of the
subspaces M_1..M_r. The acting group is N.G0 with N the translations.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..algebra import GF, MatrixGroup, all_vectors, rref, translations
from ..algebra.linear import rank, span_vectors, vecs_times_matrix, vectors_index
from ..designs import Design
from ..errors import ConstructionError
from ..permgroup import GeneratedGroup, Permutation, is_k_transitive, orbits, point_stabilizer
from .families import Construction


@dataclass(frozen=True)
class ConstructionInput:
    p: int
    d: int
    G0: MatrixGroup
    M: tuple[tuple[tuple[int, ...], ...], ...]

    def __post_init__(self):
        if self.G0.field.q != self.p or self.G0.dim != self.d:
            raise ConstructionError(f"G0 must be a group of {self.d} x {self.d} matrices over GF({self.p})")
        object.__setattr__(self, "M", tuple(rref(GF(self.p), s) for s in self.M))


def subspace_orbit(G0: MatrixGroup, subspace) -> list[tuple]:
    """The G0-orbit of a subspace, in discovery order starting from it."""
    F = G0.field
    start = rref(F, subspace)
    seen = {start: None}
    queue = [start]
    while queue:
        s = queue.pop(0)
        for A in G0.generators:
            img = rref(F, vecs_times_matrix(F, np.asarray(s), A.entries))
            if img not in seen:
                seen[img] = None
                queue.append(img)
    return list(seen)


def check_conditions(inp: ConstructionInput) -> dict[str, bool]:
    """Conditions (a)-(d); raises ConstructionError naming the first that fails."""
    G0, F = inp.G0, inp.G0.field
    M = list(inp.M)
    if not G0.on_nonzero_vectors().is_transitive():
        raise ConstructionError("condition (a) fails: G0 is not transitive on V minus 0")
    if len(M) < 3:
        raise ConstructionError(f"condition (b) fails: need r >= 3 subspaces, got {len(M)}")
    if set(subspace_orbit(G0, M[0])) != set(M):
        raise ConstructionError("condition (b) fails: M is not a G0-orbit of subspaces")
    on_M = G0.on_subspaces(M)
    if not is_k_transitive(on_M, 2):
        raise ConstructionError("condition (b) fails: G0 is not 2-transitive on M")
    if rank(F, list(M[0]) + list(M[1])) != inp.d:
        raise ConstructionError("condition (c) fails: V is not M_1 + M_2")
    # (d): act on vectors and on M together, fix M_1, look at cosets of M_1
    n = F.q**inp.d
    vec_perms = [G0.vector_permutation(A) for A in G0.generators]
    both = GeneratedGroup(n + len(M), [Permutation(list(v.images) + [n + i for i in s.images], check=False)
                                       for v, s in zip(vec_perms, on_M.generators)])
    stab = point_stabilizer(both, n)
    coset = _coset_labels(F, inp.d, M[0])
    nonzero = [x for x in range(n) if coset[x] != coset[0]]
    labels = {coset[x] for o in orbits(both.degree, stab.generators, nonzero[:1]) for x in o if x < n}
    if len(labels) != len(set(coset)) - 1:
        raise ConstructionError("condition (d) fails: the stabilizer of M_1 is not transitive on V/M_1 minus 0")
    return {"a": True, "b": True, "c": True, "d": True}


def _coset_labels(F, d: int, subspace) -> np.ndarray:
    """Label of the coset of ``subspace`` containing each vector."""
    V = all_vectors(F, d)
    W = span_vectors(F, subspace)
    label = np.full(len(V), -1, dtype=np.int64)
    nxt = 0
    for x in range(len(V)):
        if label[x] < 0:
            label[vectors_index(F, F.add[W, V[x][None, :]])] = nxt
            nxt += 1
    return label


def construction_regN(inp: ConstructionInput, label: str = "") -> Construction:
    check_conditions(inp)
    F = inp.G0.field
    blocks = []
    for s in inp.M:
        lab = _coset_labels(F, inp.d, s)
        blocks.extend(tuple(int(x) for x in np.flatnonzero(lab == c)) for c in range(lab.max() + 1))
    D = Design(F.q**inp.d, blocks, label or f"regN({inp.G0.label}, r={len(inp.M)})")
    G = inp.G0.affine(f"{F.q}^{inp.d}:{inp.G0.label}")
    return Construction(D, G, translations(inp.d, F), {"r": len(inp.M)})
