"""Incidence structures with blocks stored as sorted point tuples."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from ..errors import NotPreservedError
from ..permgroup import GeneratedGroup, Permutation, orbits

T_CAP = 5


class Design:
    """Points ``0..v-1`` and a list of blocks, kept in lexicographic order.

    Repeated blocks are allowed so that degenerate structures can be
    represented; empty blocks are not.
    """

    def __init__(self, v: int, blocks: Iterable[Iterable[int]], label: str = ""):
        bl = []
        for b in blocks:
            t = tuple(sorted(int(x) for x in b))
            if not t:
                raise ValueError("empty block")
            if len(set(t)) != len(t):
                raise ValueError(f"block {t} repeats a point")
            if t[0] < 0 or t[-1] >= v:
                raise ValueError(f"block {t} is not inside 0..{v - 1}")
            bl.append(t)
        bl.sort()
        self.v = v
        self.blocks: tuple[tuple[int, ...], ...] = tuple(bl)
        self.label = label

    def __repr__(self) -> str:
        return f"<Design {self.label!r} v={self.v} b={self.b}>"

    def __eq__(self, other) -> bool:
        return isinstance(other, Design) and (self.v, self.blocks) == (other.v, other.blocks)

    def __hash__(self) -> int:
        return hash((self.v, self.blocks))

    @property
    def b(self) -> int:
        return len(self.blocks)

    @cached_property
    def incidence(self) -> np.ndarray:
        """Boolean matrix of shape (b, v)."""
        M = np.zeros((self.b, self.v), dtype=bool)
        for i, blk in enumerate(self.blocks):
            M[i, list(blk)] = True
        M.setflags(write=False)
        return M

    @cached_property
    def block_index(self) -> dict[tuple[int, ...], list[int]]:
        out: dict[tuple[int, ...], list[int]] = {}
        for i, blk in enumerate(self.blocks):
            out.setdefault(blk, []).append(i)
        return out

    @cached_property
    def intersection_matrix(self) -> np.ndarray:
        M = self.incidence.astype(np.int64)
        return M @ M.T

    def relabel(self, label: str) -> "Design":
        d = Design.__new__(Design)
        d.v, d.blocks, d.label = self.v, self.blocks, label
        return d


@dataclass(frozen=True)
class DesignParameters:
    v: int
    b: int
    k: int | None
    r: int | None
    lam: int | None
    t_max: int
    intersection_profile: dict[int, int] = field(default_factory=dict)
    mu: int | None = None

    @property
    def is_2_design(self) -> bool:
        return self.lam is not None

    def describe(self) -> str:
        if not self.is_2_design:
            return "not a t-design (t>=2)"
        return f"2-({self.v},{self.k},{self.lam})"


def _t_count(M: np.ndarray, t: int) -> int | None:
    """Common number of blocks through every t-subset, or None if not constant."""
    b, v = M.shape
    if t > v:
        return None
    Mi = M.astype(np.int64)
    if t == 0:
        return b
    if t == 1:
        c = Mi.sum(axis=0)
        return int(c[0]) if (c == c[0]).all() else None
    lam = None
    for S in combinations(range(v), t - 2):
        rows = Mi[np.all(M[:, list(S)], axis=1)] if S else Mi
        lo = (S[-1] + 1) if S else 0
        if v - lo < 2:
            continue
        sub = rows[:, lo:]
        G = sub.T @ sub
        iu = np.triu_indices(G.shape[0], 1)
        vals = G[iu]
        if vals.size == 0:
            continue
        if lam is None:
            lam = int(vals[0])
        if (vals != lam).any():
            return None
    return lam


def parameters(design: Design, cap: int = T_CAP) -> DesignParameters:
    if design.b == 0:
        raise ValueError("design has no blocks")
    M = design.incidence
    sizes = M.sum(axis=1)
    k = int(sizes[0]) if (sizes == sizes[0]).all() else None
    reps = M.sum(axis=0)
    r = int(reps[0]) if (reps == reps[0]).all() else None
    t_max = 0
    lam = None
    if k is not None:
        for t in range(1, min(cap, k, design.v) + 1):
            c = _t_count(M, t)
            if c is None:
                break
            t_max = t
            if t == 2:
                lam = c
        if design.v < 2:
            lam = None
    I = design.intersection_matrix
    iu = np.triu_indices(design.b, 1)
    profile = dict(sorted(Counter(int(x) for x in I[iu]).items()))
    mu = None
    if len(profile) == 2:
        nonzero = [s for s in profile if s]
        if len(nonzero) == 1:
            mu = nonzero[0]
    return DesignParameters(design.v, design.b, k, r, lam, t_max, profile, mu)


def identities(p: DesignParameters) -> dict[str, bool]:
    """Counting identities of a 2-design.

    ``pair_count``, (v-1)lambda = k(k-1), is the symmetric case (r = k) of
    ``replication`` and is only reported for symmetric designs.
    """
    if not p.is_2_design:
        return {}
    out = {
        "flag_count": p.b * p.k == p.v * p.r,
        "replication": p.r * (p.k - 1) == p.lam * (p.v - 1),
    }
    if p.b == p.v:
        out["pair_count"] = (p.v - 1) * p.lam == p.k * (p.k - 1)
    if 2 < p.k < p.v:
        out["fisher"] = p.b >= p.v
    return out


def is_symmetric(design: Design, params: DesignParameters | None = None) -> bool:
    p = params or parameters(design)
    return p.is_2_design and p.b == p.v


def is_quasisymmetric(design: Design, params: DesignParameters | None = None) -> tuple[bool, tuple[int, ...]]:
    p = params or parameters(design)
    sizes = tuple(p.intersection_profile)
    return p.is_2_design and len(sizes) == 2, sizes


def is_trivial(params: DesignParameters) -> bool:
    """Trivial 2-design: not 2 < k < v."""
    return params.k is None or not (2 < params.k < params.v)


# -- transforms -------------------------------------------------------------


def complement(design: Design) -> Design:
    full = set(range(design.v))
    blocks = [sorted(full - set(b)) for b in design.blocks]
    if any(not b for b in blocks):
        raise ValueError("complement would contain an empty block")
    return Design(design.v, blocks, f"{design.label}^c" if design.label else "")


def dual(design: Design) -> Design:
    """Points become block indices and blocks become point neighbourhoods."""
    M = design.incidence
    blocks = [np.flatnonzero(M[:, p]).tolist() for p in range(design.v)]
    if any(not b for b in blocks):
        raise ValueError("a point lies on no block; the dual would have an empty block")
    return Design(design.b, blocks, f"{design.label}^*" if design.label else "")


def _drop(p: int, blk) -> tuple[int, ...]:
    return tuple(x - (x > p) for x in blk if x != p)


def derived(design: Design, p: int) -> Design:
    if not 0 <= p < design.v:
        raise ValueError(f"point {p} out of range")
    blocks = [_drop(p, b) for b in design.blocks if p in b]
    if not blocks:
        raise ValueError(f"no block contains point {p}")
    return Design(design.v - 1, blocks, f"der_{p}({design.label})")


def residual(design: Design, p: int) -> Design:
    if not 0 <= p < design.v:
        raise ValueError(f"point {p} out of range")
    blocks = [_drop(p, b) for b in design.blocks if p not in b]
    return Design(design.v - 1, blocks, f"res_{p}({design.label})")


# -- structure -------------------------------------------------------------


@dataclass(frozen=True)
class StructuralReport:
    connected: bool
    repeated_blocks: bool
    repeated_points: bool
    trivial: bool


def structural_checks(design: Design) -> StructuralReport:
    M = design.incidence
    b, v = M.shape
    rows, cols = np.nonzero(M)
    graph = coo_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols + b)), shape=(b + v, b + v))
    ncomp, _ = connected_components(graph, directed=False)
    repeated_blocks = len(set(design.blocks)) < b
    cols_as_bytes = {M[:, p].tobytes() for p in range(v)}
    repeated_points = len(cols_as_bytes) < v
    sizes = set(len(x) for x in design.blocks)
    trivial = not (len(sizes) == 1 and 2 < next(iter(sizes)) < v)
    return StructuralReport(ncomp == 1, repeated_blocks, repeated_points, trivial)


# -- group actions on blocks ---------------------------------------------------


def block_permutation(design: Design, g: Permutation) -> Permutation:
    """Permutation of block indices induced by ``g``; repeated blocks map in order."""
    if g.degree != design.v:
        raise NotPreservedError(f"permutation of degree {g.degree} on a design with {design.v} points")
    used: Counter = Counter()
    out = []
    for blk in design.blocks:
        img = tuple(sorted(g.images[x] for x in blk))
        idx = design.block_index.get(img)
        if idx is None:
            raise NotPreservedError(f"block {blk} maps to {img}, which is not a block")
        out.append(idx[used[img]])
        used[img] += 1
    return Permutation(out, check=False)


def block_action(design: Design, group: GeneratedGroup) -> GeneratedGroup:
    return GeneratedGroup(design.b, [block_permutation(design, g) for g in group.generators],
                          f"{group.label} on blocks")


def combined_action(design: Design, group: GeneratedGroup) -> GeneratedGroup:
    """Action on points and blocks together; block j is point ``v + j``."""
    v = design.v
    gens = []
    for g in group.generators:
        bp = block_permutation(design, g)
        gens.append(Permutation(list(g.images) + [v + j for j in bp.images], check=False))
    return GeneratedGroup(v + design.b, gens, f"{group.label} on points+blocks")


def preserves(design: Design, group: GeneratedGroup) -> bool:
    try:
        for g in group.generators:
            block_permutation(design, g)
    except NotPreservedError:
        return False
    return True


@dataclass(frozen=True)
class NicelyAffineReport:
    holds: bool
    orbit_partition: tuple[tuple[int, ...], ...]
    mu: int | None
    reason: str = ""


def nicely_affine(design: Design, N: GeneratedGroup) -> NicelyAffineReport:
    """Whether the N-orbits on blocks are parallel classes meeting pairwise in mu points."""
    perms = [block_permutation(design, g) for g in N.generators]
    parts = tuple(tuple(o) for o in orbits(design.b, perms))
    if not N.is_transitive():
        return NicelyAffineReport(False, parts, None, "N is not transitive on points")
    I = design.intersection_matrix
    label = np.empty(design.b, dtype=np.int64)
    for i, o in enumerate(parts):
        label[list(o)] = i
    same = label[:, None] == label[None, :]
    off = ~np.eye(design.b, dtype=bool)
    if (I[same & off] != 0).any():
        return NicelyAffineReport(False, parts, None, "blocks in one N-orbit meet")
    cross = I[~same]
    if cross.size == 0:
        return NicelyAffineReport(False, parts, None, "a single N-orbit on blocks")
    mu = int(cross[0])
    if (cross != mu).any():
        return NicelyAffineReport(False, parts, None, "blocks in different N-orbits meet in varying sizes")
    return NicelyAffineReport(True, parts, mu)
