"""Properties of permutation actions: rank, blocks, coset actions, pair orbits."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from ..errors import BoundExceededError, PTDError
from .group import GeneratedGroup, orbit, orbits, point_stabilizer
from .perm import Permutation

DEFAULT_INDEX_BOUND = 10**5


@dataclass(frozen=True)
class ActionReport:
    transitive: bool
    rank: int
    two_transitive: bool
    suborbit_sizes: tuple[int, ...]
    primitive: bool
    minimal_block_system: tuple[tuple[int, ...], ...] | None = None


def suborbits(group: GeneratedGroup, point: int = 0) -> list[list[int]]:
    """Orbits of the stabilizer of ``point`` on all points."""
    stab = point_stabilizer(group, point)
    return orbits(group.degree, stab.generators)


def rank(group: GeneratedGroup) -> int:
    return len(suborbits(group, 0))


def minimal_block(group: GeneratedGroup, a: int, b: int) -> list[list[int]]:
    """Finest block system in which ``a`` and ``b`` share a block.

    Union-find refinement: merge a and b, then keep merging the images of
    every merged pair under each generator until nothing changes.
    """
    n = group.degree
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    imgs = [g.images for g in group.generators]
    queue = [(a, b)]
    while queue:
        x, y = queue.pop()
        rx, ry = find(x), find(y)
        if rx == ry:
            continue
        if ry < rx:
            rx, ry = ry, rx
        parent[ry] = rx
        for g in imgs:
            queue.append((g[x], g[y]))
    parts: dict[int, list[int]] = {}
    for x in range(n):
        parts.setdefault(find(x), []).append(x)
    return sorted(parts.values())


def minimal_block_system(group: GeneratedGroup) -> tuple[tuple[int, ...], ...] | None:
    """First nontrivial block system found from pairs (0, x), x increasing.

    Returns None when the group is primitive. Assumes the group is transitive.
    """
    for x in range(1, group.degree):
        parts = minimal_block(group, 0, x)
        if len(parts) > 1:
            return tuple(tuple(p) for p in parts)
    return None


def is_block_system(group: GeneratedGroup, parts: Sequence[Sequence[int]]) -> bool:
    canon = {frozenset(p) for p in parts}
    return all(g.image_set(p) in canon for g in group.generators for p in canon)


def action_report(group: GeneratedGroup) -> ActionReport:
    """Rank, 2-transitivity and primitivity of a permutation group."""
    n = group.degree
    transitive = group.is_transitive()
    if n == 0:
        return ActionReport(True, 0, False, (), True, None)
    subs = suborbits(group, 0)
    sizes = tuple(sorted((len(o) for o in subs), key=lambda s: (s != 1, s)))
    rk = len(subs)
    if not transitive:
        return ActionReport(False, rk, False, sizes, False, None)
    blocks = minimal_block_system(group) if n > 2 else None
    return ActionReport(
        transitive=True,
        rank=rk,
        two_transitive=(rk == 2),
        suborbit_sizes=sizes,
        primitive=blocks is None,
        minimal_block_system=blocks,
    )


def is_k_transitive(group: GeneratedGroup, k: int) -> bool:
    """k-transitivity via successive point stabilizers."""
    g = group
    for i in range(k):
        rest = [p for p in range(group.degree) if p >= i]
        if len(rest) == 0:
            return True
        if not set(rest) <= orbit(g, i):
            return False
        g = point_stabilizer(g, i)
    return True


def transitivity_degree(group: GeneratedGroup, cap: int = 6) -> int:
    k = 0
    while k < min(cap, group.degree) and is_k_transitive(group, k + 1):
        k += 1
    return k


# -- coset actions -------------------------------------------------------


@dataclass
class CosetAction:
    """Action of a group on the right cosets of a subgroup.

    ``group`` is the resulting permutation group of degree = index;
    ``representatives[i]`` is a representative of coset i (coset 0 is the
    subgroup itself). ``image`` maps any element of the parent group to its
    permutation of the cosets.
    """

    group: GeneratedGroup
    representatives: list[Permutation]
    faithful: bool
    kernel_order: int
    _subgroup: GeneratedGroup = field(repr=False, default=None)
    _suborbits: list = field(repr=False, default=None)
    _buckets: dict = field(repr=False, default=None)

    @property
    def degree(self) -> int:
        return self.group.degree

    def coset_of(self, g: Permutation) -> int:
        key = _coset_key(self._suborbits, g)
        for i in self._buckets.get(key, ()):
            if (g * ~self.representatives[i]) in self._subgroup:
                return i
        raise PTDError("element is not in the parent group")

    def image(self, g: Permutation) -> Permutation:
        return Permutation([self.coset_of(r * g) for r in self.representatives])


def _coset_key(sub_orbits, g: Permutation):
    # invariant of the coset Hg: images under g of the H-orbits
    return tuple(sorted(tuple(sorted(g.images[p] for p in o)) for o in sub_orbits))


def coset_action(group: GeneratedGroup, subgroup: GeneratedGroup, bound: int = DEFAULT_INDEX_BOUND) -> CosetAction:
    """Permutation action of ``group`` on right cosets of ``subgroup``."""
    for h in subgroup.generators:
        if h not in group:
            raise PTDError("subgroup is not contained in group")
    index, rem = divmod(group.order(), subgroup.order())
    if rem:
        raise PTDError("subgroup order does not divide group order")
    if index > bound:
        raise BoundExceededError(f"coset index {index} exceeds bound {bound}")
    sub_orbits = [o for o in orbits(subgroup.degree, subgroup.generators) if len(o) > 1]
    reps = [group.identity()]
    buckets: dict = {_coset_key(sub_orbits, reps[0]): [0]}
    action = CosetAction(None, reps, False, 0, subgroup, sub_orbits, buckets)
    pos = 0
    while pos < len(reps):
        r = reps[pos]
        pos += 1
        for s in group.generators:
            g = r * s
            key = _coset_key(sub_orbits, g)
            if any((g * ~reps[i]) in subgroup for i in buckets.get(key, ())):
                continue
            buckets.setdefault(key, []).append(len(reps))
            reps.append(g)
    if len(reps) != index:
        raise PTDError(f"coset enumeration found {len(reps)} cosets, expected {index}")
    gens = [action.image(s) for s in group.generators]
    label = f"{group.label} on cosets of {subgroup.label}".strip()
    action.group = GeneratedGroup(index, gens, label)
    image_order = action.group.order()
    action.kernel_order = group.order() // image_order
    action.faithful = action.kernel_order == 1
    return action


# -- orbits on pairs -------------------------------------------------------


def orbit_count_on_pairs(
    group: GeneratedGroup,
    left: Sequence[int],
    right: Sequence[int],
    relation: Callable[[int, int], bool] | np.ndarray | None = None,
) -> int:
    """Number of orbits of ``group`` on {(x, y) in left x right : relation(x, y)}.

    ``left`` and ``right`` must be invariant subsets of the ground set.
    ``relation`` may be a predicate, a boolean array of shape
    (len(left), len(right)), or None for all pairs. Orbits are the connected
    components of the graph joining each pair to its generator images.
    """
    left = list(left)
    right = list(right)
    nl, nr = len(left), len(right)
    if nl == 0 or nr == 0:
        return 0
    if relation is None:
        mask = np.ones((nl, nr), dtype=bool)
    elif callable(relation):
        mask = np.array([[bool(relation(x, y)) for y in right] for x in left], dtype=bool)
    else:
        mask = np.asarray(relation, dtype=bool)
        if mask.shape != (nl, nr):
            raise ValueError(f"relation shape {mask.shape} != {(nl, nr)}")
    if not mask.any():
        return 0
    n = group.degree
    lpos = np.full(n, -1, dtype=np.int64)
    rpos = np.full(n, -1, dtype=np.int64)
    lpos[left] = np.arange(nl)
    rpos[right] = np.arange(nr)
    larr = np.asarray(left, dtype=np.int64)
    rarr = np.asarray(right, dtype=np.int64)
    npairs = nl * nr
    src = np.arange(npairs, dtype=np.int64)
    rows, cols = [], []
    for g in group.generators:
        img = np.asarray(g.images, dtype=np.int64)
        li = lpos[img[larr]]
        ri = rpos[img[rarr]]
        if (li < 0).any() or (ri < 0).any():
            raise PTDError("pair sets are not invariant under the group")
        dst = (li[:, None] * nr + ri[None, :]).ravel()
        rows.append(src)
        cols.append(dst)
    if rows:
        r = np.concatenate(rows)
        c = np.concatenate(cols)
    else:
        r = c = np.zeros(0, dtype=np.int64)
    graph = coo_matrix((np.ones(len(r), dtype=np.int8), (r, c)), shape=(npairs, npairs))
    _, labels = connected_components(graph, directed=True, connection="weak")
    return len(np.unique(labels[mask.ravel()]))


def suborbit_multiset(group: GeneratedGroup, point: int = 0) -> Counter:
    return Counter(len(o) for o in suborbits(group, point))
