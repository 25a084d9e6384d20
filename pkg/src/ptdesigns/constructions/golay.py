"""Designs from the Golay codes: H(12), H(11), the Witt design on 22 points, D176."""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from ..algebra import golay_code
from ..designs import Design, derived
from ..permgroup import GeneratedGroup, Permutation, element_mapping, pointwise_stabilizer
from .sporadic import has_data, load_sporadic

INF12 = 11
FIXED24 = (22, 23)


@lru_cache(maxsize=None)
def hadamard12() -> Design:
    """H(12): blocks are the +1 positions of the 22 total words other than +-w_inf.

    w_inf is the all-ones word when the code contains it (the bundled one
    does); otherwise the lexicographically least total word, after which
    coordinates are rescaled so that it becomes all-ones.
    """
    code = golay_code("ternary")
    totals = code.words_of_weight(12)
    ones = np.ones(code.length, dtype=np.int64)
    if any((w == 1).all() for w in totals):
        winf = ones
    else:
        winf = min(totals, key=lambda w: tuple(w))
    scale = winf  # entries are 1 or 2 = -1, self-inverse
    words = (totals * scale[None, :]) % 3
    blocks = []
    for w in words:
        if (w == 1).all() or (w == 2).all():
            continue
        blocks.append(np.flatnonzero(w == 1).tolist())
    return Design(code.length, blocks, "H(12)")


def hadamard11() -> Design:
    return derived(hadamard12(), INF12).relabel("H(11)")


def m11_12() -> GeneratedGroup:
    return load_sporadic("M11_12").group


def psl2_11() -> GeneratedGroup:
    """PSL(2,11) on 11 points: the stabilizer of infinity in M11, restricted."""
    stab = pointwise_stabilizer(m11_12(), [INF12])
    return stab.restrict(list(range(INF12)), "PSL(2,11)")


def m24() -> GeneratedGroup:
    return load_sporadic("M24").group


@lru_cache(maxsize=None)
def octads() -> tuple[tuple[int, ...], ...]:
    return tuple(golay_code("binary").supports_of_weight(8))


def witt22_design() -> Design:
    """Hexads: octads through both fixed symbols, with those symbols removed."""
    a, b = FIXED24
    hexads = [[x for x in o if x not in FIXED24] for o in octads() if a in o and b in o]
    return Design(22, hexads, "M22 design")


def m22() -> GeneratedGroup:
    stab = pointwise_stabilizer(m24(), list(FIXED24))
    return stab.restrict(list(range(22)), "M22")


def m22_2() -> GeneratedGroup:
    """M22.2: M22 together with an element of M24 swapping the two fixed symbols."""
    a, b = FIXED24
    swap = element_mapping(m24(), [a, b], [b, a])
    gens = list(m22().generators) + [swap.restrict(list(range(22)))]
    return GeneratedGroup(22, gens, "M22.2")


@lru_cache(maxsize=None)
def _d176_families():
    a, b = FIXED24
    points = [o for o in octads() if a in o and b not in o]
    quadrics = [o for o in octads() if b in o and a not in o]
    return points, quadrics


@lru_cache(maxsize=None)
def d176_design() -> Design:
    """Points: octads through 22 but not 23. Quadrics: through 23 but not 22.

    A point lies on a quadric when the two octads meet in 0 or 4 symbols.
    """
    points, quadrics = _d176_families()
    P = np.zeros((len(points), 24), dtype=np.int64)
    for i, o in enumerate(points):
        P[i, list(o)] = 1
    blocks = []
    for q in quadrics:
        meet = P[:, list(q)].sum(axis=1)
        blocks.append(np.flatnonzero((meet == 0) | (meet == 4)).tolist())
    return Design(len(points), blocks, "D176")


def m22_on_d176() -> GeneratedGroup:
    """M22 (fixing both symbols) acting on the 176 point-octads."""
    points, _ = _d176_families()
    index = {o: i for i, o in enumerate(points)}
    stab = pointwise_stabilizer(m24(), list(FIXED24))
    gens = [Permutation([index[tuple(sorted(g.images[x] for x in o))] for o in points])
            for g in stab.generators]
    return GeneratedGroup(len(points), gens, "M22 on D176")


def hs176() -> GeneratedGroup | None:
    """HS on the 176 points of D176, or None when its data file is absent."""
    if not has_data("HS176"):
        return None
    return load_sporadic("HS176").group
