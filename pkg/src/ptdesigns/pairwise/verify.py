"""Pairwise transitivity of a group on a design.

A group G acting on a design is pairwise transitive when it is transitive on
each non-empty set among: ordered pairs of distinct points, flags, antiflags,
ordered pairs of distinct intersecting blocks and ordered pairs of disjoint
blocks. ``brute_verify`` counts the orbits on all five sets; ``fast_verify``
checks the equivalent conditions

(a) G is 2-transitive on points,
(b) G is 2-transitive on blocks, or has rank 3 on blocks and some pair of
    blocks is disjoint,
(c) a point stabilizer has exactly two orbits on blocks,

which characterise pairwise transitivity for non-trivial 2-designs. For a
symmetric design (a) alone suffices.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from ..designs import (
    Design,
    NicelyAffineReport,
    block_action,
    combined_action,
    is_trivial,
    nicely_affine,
    parameters,
)
from ..errors import BoundExceededError, PTDError
from ..permgroup import (
    GeneratedGroup,
    action_report,
    orbit_count_on_pairs,
    orbits,
    point_stabilizer,
    pointwise_stabilizer,
)
from ..permgroup.perm import Permutation

PAIR_SETS = ("point_pairs", "flags", "antiflags", "intersecting_block_pairs", "disjoint_block_pairs")
BRUTE_PAIR_BOUND = 10**6


@dataclass
class PairwiseReport:
    counts: dict[str, int | None]
    empty: dict[str, bool]
    verdict: bool
    method: str
    conditions: dict[str, bool] = field(default_factory=dict)
    seconds: float = 0.0

    def summary(self) -> str:
        return " ".join(f"{k}={self.counts[k]}" for k in PAIR_SETS)


def _check_preserved(design: Design, group: GeneratedGroup) -> GeneratedGroup:
    if group.degree != design.v:
        raise PTDError(f"group degree {group.degree} differs from the {design.v} design points")
    return combined_action(design, group)


def brute_verify(design: Design, group: GeneratedGroup, bound: int = BRUTE_PAIR_BOUND) -> PairwiseReport:
    """Exact orbit counts on the five ordered-pair sets."""
    start = time.perf_counter()
    v, b = design.v, design.b
    if v * b + b * b > bound:
        raise BoundExceededError(f"{v * b + b * b} pairs exceeds the brute-force bound {bound}")
    both = _check_preserved(design, group)
    pts = list(range(v))
    blks = list(range(v, v + b))
    inc = design.incidence.T  # (v, b)
    meet = design.intersection_matrix
    distinct = ~np.eye(b, dtype=bool)
    masks = {
        "point_pairs": (pts, pts, ~np.eye(v, dtype=bool)),
        "flags": (pts, blks, inc),
        "antiflags": (pts, blks, ~inc),
        "intersecting_block_pairs": (blks, blks, (meet > 0) & distinct),
        "disjoint_block_pairs": (blks, blks, meet == 0),
    }
    counts, empty = {}, {}
    for name, (left, right, mask) in masks.items():
        empty[name] = not bool(mask.any())
        counts[name] = orbit_count_on_pairs(both, left, right, mask)
    verdict = all(counts[n] <= 1 for n in PAIR_SETS)
    return PairwiseReport(counts, empty, verdict, "brute", seconds=time.perf_counter() - start)


def fast_verify(design: Design, group: GeneratedGroup, symmetric_shortcut: bool = True) -> PairwiseReport:
    """Verdict from conditions (a), (b), (c); refuses trivial or non-2-designs."""
    start = time.perf_counter()
    params = parameters(design)
    if not params.is_2_design:
        raise PTDError("fast verification needs a 2-design; use brute_verify")
    if is_trivial(params):
        raise PTDError("fast verification needs a non-trivial 2-design (2 < k < v); use brute_verify")
    both = _check_preserved(design, group)
    v, b = design.v, design.b
    pr = action_report(group)
    cond = {"a": pr.transitive and pr.rank == 2}
    if symmetric_shortcut and b == v:
        verdict = cond["a"]
        cond["symmetric_shortcut"] = True
    else:
        br = action_report(block_action(design, group))
        has_disjoint = bool((design.intersection_matrix == 0).any())
        cond["b"] = br.transitive and (br.rank == 2 or (br.rank == 3 and has_disjoint))
        stab = point_stabilizer(both, 0)
        block_orbits = orbits(both.degree, stab.generators, range(v, v + b))
        cond["c"] = len(block_orbits) == 2
        verdict = cond["a"] and cond["b"] and cond["c"]
    counts = {n: None for n in PAIR_SETS}
    empty = {
        "point_pairs": v < 2,
        "flags": False,
        "antiflags": False,
        "intersecting_block_pairs": b < 2,
        "disjoint_block_pairs": not bool((design.intersection_matrix == 0).any()),
    }
    return PairwiseReport(counts, empty, verdict, "fast", cond, time.perf_counter() - start)


def verify(design: Design, group: GeneratedGroup, mode: str = "both") -> PairwiseReport:
    """Run ``brute``, ``fast`` or ``both``; in ``both`` mode disagreement is an error."""
    if mode == "brute":
        return brute_verify(design, group)
    if mode == "fast":
        return fast_verify(design, group)
    if mode != "both":
        raise ValueError(f"mode must be fast, brute or both, not {mode!r}")
    brute = brute_verify(design, group)
    params = parameters(design)
    if not params.is_2_design or is_trivial(params):
        return brute
    fast = fast_verify(design, group)
    if fast.verdict != brute.verdict:
        raise PTDError(f"fast verdict {fast.verdict} disagrees with brute verdict {brute.verdict}")
    return PairwiseReport(brute.counts, brute.empty, brute.verdict, "both", fast.conditions,
                          brute.seconds + fast.seconds)


# -- block action ---------------------------------------------------------------


@dataclass
class BlockActionReport:
    faithful_on_points: bool
    faithful_on_blocks: bool
    rank_on_blocks: int
    primitive_on_blocks: bool
    design_tag: str
    imprimitive_case: str
    block_system: tuple[tuple[int, ...], ...] | None = None
    kernel_order: int | None = None
    nicely_affine: NicelyAffineReport | None = None
    point_stabilizer_block_orbits: tuple[int, ...] = ()
    block_stabilizer_point_orbits: tuple[int, ...] = ()


def _orbit_sizes(group: GeneratedGroup, fixed: int, points) -> tuple[int, ...]:
    stab = point_stabilizer(group, fixed)
    return tuple(sorted(len(o) for o in orbits(group.degree, stab.generators, points)))


def is_normal(sub: GeneratedGroup, group: GeneratedGroup) -> bool:
    return all(h.conjugate(g) in sub for h in sub.generators for g in group.generators)


def classify_block_action(design: Design, group: GeneratedGroup,
                          normal_subgroup: GeneratedGroup | None = None) -> BlockActionReport:
    """Rank and primitivity of G on blocks and, when imprimitive, which case applies.

    The imprimitive case is ``affine-nicely-affine`` when the kernel M of the
    action on the block system is non-trivial and the design is M-nicely
    affine (or ``normal_subgroup`` is given and passes that test), and
    ``quasiprimitive`` when the kernel is trivial.
    """
    v, b = design.v, design.b
    both = _check_preserved(design, group)
    order = group.order()
    on_blocks = block_action(design, group)
    br = action_report(on_blocks)
    params = parameters(design)
    if b == v and params.is_2_design:
        tag = "symmetric"
    elif len(params.intersection_profile) == 2:
        tag = "quasisymmetric"
    else:
        tag = "neither"
    rep = BlockActionReport(
        faithful_on_points=both.order() == order,
        faithful_on_blocks=on_blocks.order() == both.order(),
        rank_on_blocks=br.rank,
        primitive_on_blocks=br.primitive,
        design_tag=tag,
        imprimitive_case="none",
        point_stabilizer_block_orbits=_orbit_sizes(both, 0, range(v, v + b)),
        block_stabilizer_point_orbits=_orbit_sizes(both, v, range(v)),
    )
    if br.primitive or not br.transitive:
        return rep
    parts = br.minimal_block_system
    rep.block_system = parts
    # extend the action by the parts of the block system, then fix them all
    part_of = {blk: i for i, p in enumerate(parts) for blk in p}
    gens = []
    for g in both.generators:
        imgs = list(g.images)
        part_imgs = [v + b + part_of[imgs[v + p[0]] - v] for p in parts]
        gens.append(Permutation(imgs + part_imgs, check=False))
    ext = GeneratedGroup(v + b + len(parts), gens)
    kernel = pointwise_stabilizer(ext, list(range(v + b, v + b + len(parts))))
    rep.kernel_order = kernel.order()
    candidate = normal_subgroup
    if candidate is None and rep.kernel_order > 1:
        candidate = GeneratedGroup(v, [Permutation(g.images[:v], check=False) for g in kernel.generators],
                                   "kernel on block system")
    if candidate is not None and (normal_subgroup is None or is_normal(normal_subgroup, group)):
        na = nicely_affine(design, candidate)
        rep.nicely_affine = na
        if na.holds:
            rep.imprimitive_case = "affine-nicely-affine"
            return rep
    rep.imprimitive_case = "quasiprimitive" if rep.kernel_order == 1 else "other"
    return rep
