"""Projective and affine geometry over GF(q), and the hyperovals of PG(2,4)."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from ..permgroup import GeneratedGroup, Permutation, orbits
from .field import GF, FiniteField
from .linear import (
    MatrixGroup,
    all_vectors,
    enumerate_subspaces,
    rref,
    span_vectors,
    special_linear,
    vecs_times_matrix,
    vectors_index,
)

KINDS = ("points", "lines", "hyperplanes")


def _field(q) -> FiniteField:
    return q if isinstance(q, FiniteField) else GF(q)


def projective_objects(d: int, q, kind: str = "points") -> list[tuple]:
    """Subspaces of GF(q)^d of the given kind, as sorted RREF bases."""
    if d < 2:
        raise ValueError("projective geometry needs d >= 2")
    F = _field(q)
    if kind == "points":
        k = 1
    elif kind == "lines":
        if d < 3:
            raise ValueError("lines need d >= 3")
        k = 2
    elif kind == "hyperplanes":
        k = d - 1
    else:
        raise ValueError(f"unknown kind {kind!r}; expected one of {KINDS}")
    return enumerate_subspaces(F, d, k)


def point_vectors(d: int, q) -> np.ndarray:
    """Normalized representatives of the projective points, one per row."""
    return np.asarray([p[0] for p in projective_objects(d, q, "points")], dtype=np.int64)


class ProjectiveSpace:
    """PG(d-1, q): point indexing and incidence with subspaces."""

    def __init__(self, d: int, q):
        self.d = d
        self.field = _field(q)
        self.points = point_vectors(d, self.field)
        F = self.field
        # map every nonzero vector to the index of its projective point
        n = F.q**d
        lookup = np.full(n, -1, dtype=np.int64)
        for i, p in enumerate(self.points):
            for a in range(1, F.q):
                lookup[vectors_index(F, F.mul[a, p][None, :])[0]] = i
        self._lookup = lookup

    @property
    def npoints(self) -> int:
        return len(self.points)

    def index_of(self, vectors: np.ndarray) -> np.ndarray:
        return self._lookup[vectors_index(self.field, vectors)]

    def points_on(self, subspace) -> tuple[int, ...]:
        vecs = span_vectors(self.field, subspace)
        idx = self.index_of(vecs[vecs.any(axis=1)])
        return tuple(sorted(set(int(i) for i in idx)))

    def objects_as_point_sets(self, kind: str) -> list[tuple[int, ...]]:
        return [self.points_on(s) for s in projective_objects(self.d, self.field, kind)]

    def permutation(self, A) -> Permutation:
        img = vecs_times_matrix(self.field, self.points, A.entries)
        return Permutation(self.index_of(img), check=False)

    def frobenius(self) -> Permutation:
        return Permutation(self.index_of(self.field.frob[self.points]), check=False)

    def action(self, group: MatrixGroup, label: str | None = None) -> GeneratedGroup:
        gens = [self.permutation(A) for A in group.generators]
        if group.frobenius:
            gens.append(self.frobenius())
        return GeneratedGroup(self.npoints, gens, label or group.label)


def projective_group(d: int, q, kind: str = "PSL") -> GeneratedGroup:
    """PSL, PGL, PSigmaL or PGammaL(d, q) on the points of PG(d-1, q)."""
    from .linear import general_linear

    F = _field(q)
    space = ProjectiveSpace(d, F)
    base = special_linear(F, d) if kind in ("PSL", "PSigmaL") else general_linear(F, d)
    frob = kind in ("PSigmaL", "PGammaL")
    mg = MatrixGroup(F, d, base.generators, f"{kind}({d},{F.q})", frobenius=frob)
    return space.action(mg)


def semilinear_closure(group: MatrixGroup, on: str = "projective") -> GeneratedGroup:
    """Permutation action of <group, x -> x^p> on projective points or vectors.

    ``on`` is 'projective', 'vectors' or 'nonzero'. Over a prime field the
    Frobenius map is trivial and the group is unchanged.
    """
    mg = MatrixGroup(group.field, group.dim, group.generators, group.label, frobenius=True)
    if on == "projective":
        return ProjectiveSpace(group.dim, group.field).action(mg)
    if on == "vectors":
        return mg.on_vectors()
    if on == "nonzero":
        return mg.on_nonzero_vectors()
    raise ValueError(f"unknown point set {on!r}")


def affine_parallel_classes(f: int, q) -> list[list[tuple[int, ...]]]:
    """Cosets of the hyperplanes of GF(q)^f, grouped by hyperplane.

    A hyperplane is the kernel of a normalized functional ``a``; its class is
    the q level sets ``{x : a.x = c}``. Points are vector indices.
    """
    if f < 2:
        raise ValueError("affine geometry needs f >= 2")
    F = _field(q)
    V = all_vectors(F, f)
    out = []
    for (a,) in projective_objects(f, F, "points"):
        vals = vecs_times_matrix(F, V, np.asarray(a, dtype=np.int64).reshape(f, 1))[:, 0]
        cls = [tuple(int(i) for i in np.flatnonzero(vals == c)) for c in range(F.q)]
        out.append(sorted(cls))
    return out


def affine_hyperplane_cosets(f: int, q) -> list[tuple[int, ...]]:
    return [b for cls in affine_parallel_classes(f, q) for b in cls]


def translations(f: int, q) -> GeneratedGroup:
    """The translation group of GF(q)^f on its q^f vectors."""
    F = _field(q)
    V = all_vectors(F, f)
    gens = []
    for i in range(f):
        for s in range(F.e):
            t = np.zeros(f, dtype=np.int64)
            t[i] = F.p**s
            gens.append(Permutation(vectors_index(F, F.add[V, t[None, :]]), check=False))
    return GeneratedGroup(F.q**f, gens, f"{F.q}^{f}")


@dataclass(frozen=True)
class Hyperovals:
    """All hyperovals of PG(2,4) with their PSL(3,4)-orbit labels.

    ``orbit[i]`` is the orbit index of ``ovals[i]``; orbits are numbered by
    their lexicographically least member.
    """

    ovals: tuple[tuple[int, ...], ...]
    orbit: tuple[int, ...]
    lines: tuple[tuple[int, ...], ...]

    def orbit_members(self, label: int) -> list[tuple[int, ...]]:
        return [o for o, lab in zip(self.ovals, self.orbit) if lab == label]

    def orbit_sizes(self) -> list[int]:
        return [self.orbit.count(i) for i in range(max(self.orbit) + 1)]


def hyperovals_pg24(group: GeneratedGroup | None = None) -> Hyperovals:
    """6-sets of PG(2,4) with no three collinear, found by pruned search."""
    space = ProjectiveSpace(3, 4)
    lines = space.objects_as_point_sets("lines")
    n = space.npoints
    line_through = {}
    for li, L in enumerate(lines):
        for a, b in combinations(L, 2):
            line_through[(a, b)] = li
    ovals = []

    def extend(chosen, covered, start):
        if len(chosen) == 6:
            ovals.append(tuple(chosen))
            return
        for x in range(start, n):
            if x in covered:
                continue
            new_lines = [line_through[(c, x)] for c in chosen]
            add = set()
            for li in new_lines:
                add.update(lines[li])
            extend(chosen + [x], covered | add, x + 1)

    extend([], set(), 0)
    ovals.sort()
    if group is None:
        group = projective_group(3, 4, "PSL")
    index = {o: i for i, o in enumerate(ovals)}
    perms = [Permutation([index[tuple(sorted(g.images[p] for p in o))] for o in ovals])
             for g in group.generators]
    labels = [0] * len(ovals)
    for k, orb in enumerate(orbits(len(ovals), perms)):
        for i in orb:
            labels[i] = k
    return Hyperovals(tuple(ovals), tuple(labels), tuple(lines))
