"""Permutation groups given by generators."""

from __future__ import annotations

from functools import cached_property
from typing import Iterable, Sequence

from .chain import StabilizerChain
from .perm import Permutation


class GeneratedGroup:
    """A permutation group of fixed degree, given by generators.

    Instances are treated as immutable; the stabilizer chain is computed on
    first use and cached.
    """

    def __init__(self, degree: int, generators: Iterable[Permutation | Sequence[int]] = (), label: str = ""):
        gens = []
        for g in generators:
            if not isinstance(g, Permutation):
                g = Permutation(g)
            if g.degree != degree:
                raise ValueError(f"generator of degree {g.degree} in a group of degree {degree}")
            gens.append(g)
        self.degree = degree
        self.generators: tuple[Permutation, ...] = tuple(gens)
        self.label = label

    def __repr__(self) -> str:
        name = self.label or "group"
        return f"<GeneratedGroup {name!r} degree={self.degree} gens={len(self.generators)}>"

    @cached_property
    def chain(self) -> StabilizerChain:
        return StabilizerChain(self.degree, [g.images for g in self.generators])

    def order(self) -> int:
        return self.chain.order()

    def __contains__(self, g) -> bool:
        return self.chain.contains(g)

    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def relabel(self, label: str) -> "GeneratedGroup":
        out = GeneratedGroup(self.degree, self.generators, label)
        if "chain" in self.__dict__:
            out.__dict__["chain"] = self.chain
        return out

    def orbit(self, point: int) -> set[int]:
        return orbit(self, point)

    def orbits(self) -> list[list[int]]:
        return orbits(self.degree, self.generators)

    def is_transitive(self) -> bool:
        return self.degree <= 1 or len(orbit(self, 0)) == self.degree

    def restrict(self, points: Sequence[int], label: str | None = None) -> "GeneratedGroup":
        """Action on an invariant point subset, relabelled 0..len(points)-1."""
        gens = [g.restrict(points) for g in self.generators]
        return GeneratedGroup(len(points), gens, self.label if label is None else label)


def orbit(group: GeneratedGroup, point: int) -> set[int]:
    """Smallest generator-closed set containing ``point``."""
    if not 0 <= point < group.degree:
        raise ValueError(f"point {point} out of range for degree {group.degree}")
    seen = {point}
    stack = [point]
    imgs = [g.images for g in group.generators]
    while stack:
        x = stack.pop()
        for g in imgs:
            y = g[x]
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


def orbits(degree: int, generators: Iterable[Permutation], points: Iterable[int] | None = None) -> list[list[int]]:
    """Orbit decomposition, each orbit sorted, orbits ordered by least element."""
    imgs = [g.images for g in generators]
    todo = range(degree) if points is None else sorted(points)
    seen: set[int] = set()
    out = []
    for p in todo:
        if p in seen:
            continue
        orb = [p]
        seen.add(p)
        pos = 0
        while pos < len(orb):
            x = orb[pos]
            pos += 1
            for g in imgs:
                y = g[x]
                if y not in seen:
                    seen.add(y)
                    orb.append(y)
        out.append(sorted(orb))
    return out


def build_chain(group: GeneratedGroup, base_prefix: Sequence[int] = ()) -> StabilizerChain:
    if not base_prefix:
        return group.chain
    return StabilizerChain(group.degree, [g.images for g in group.generators], base_prefix)


def point_stabilizer(group_or_chain, point: int, group: GeneratedGroup | None = None) -> GeneratedGroup:
    """Stabilizer of ``point``.

    Accepts a group, or a chain whose first base point is ``point``; in the
    latter case no new Schreier-Sims run is needed.
    """
    if isinstance(group_or_chain, StabilizerChain):
        chain = group_or_chain
        if not 0 <= point < chain.degree:
            raise ValueError(f"point {point} out of range")
        if not chain.base or chain.base[0] != point:
            chain = StabilizerChain(chain.degree, chain.gens[0] if chain.gens else [], [point])
        label = f"stab({point})"
    else:
        grp = group_or_chain
        if not 0 <= point < grp.degree:
            raise ValueError(f"point {point} out of range for degree {grp.degree}")
        chain = build_chain(grp, [point]) if grp.chain.base[:1] != [point] else grp.chain
        label = f"{grp.label}_{point}" if grp.label else f"stab({point})"
    out = GeneratedGroup(chain.degree, chain.stabilizer_generators(1), label)
    out.__dict__["chain"] = _substabilizer(chain, 1)
    return out


def pointwise_stabilizer(group: GeneratedGroup, points: Sequence[int]) -> GeneratedGroup:
    chain = build_chain(group, list(points))
    depth = len(list(dict.fromkeys(points)))
    out = GeneratedGroup(group.degree, chain.stabilizer_generators(depth),
                         f"{group.label}_{tuple(points)}")
    out.__dict__["chain"] = _substabilizer(chain, depth)
    return out


def _substabilizer(chain: StabilizerChain, depth: int) -> StabilizerChain:
    """Chain of a stabilizer level, sharing data with the parent chain."""
    sub = StabilizerChain.__new__(StabilizerChain)
    sub.degree = chain.degree
    sub.identity = chain.identity
    sub.base = chain.base[depth:]
    sub.gens = chain.gens[depth:]
    sub.trans = chain.trans[depth:]
    sub.trans_inv = chain.trans_inv[depth:]
    return sub


def element_mapping(group: GeneratedGroup, src: Sequence[int], dst: Sequence[int]) -> Permutation | None:
    """Some element of ``group`` sending ``src[i]`` to ``dst[i]``, or None."""
    chain = build_chain(group, list(src))
    return chain.element_mapping(list(src), list(dst))


def closure_elements(group: GeneratedGroup, limit: int = 10**5) -> set[Permutation]:
    """All elements by breadth-first closure. Independent of the chain code."""
    ident = group.identity()
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in group.generators:
                y = x * g
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
                    if len(seen) > limit:
                        raise ValueError(f"group has more than {limit} elements")
        frontier = nxt
    return seen


def derived_subgroup(group: GeneratedGroup, label: str | None = None) -> GeneratedGroup:
    """Commutator subgroup, as the normal closure of generator commutators."""
    gens = group.generators
    comms = []
    for i, a in enumerate(gens):
        for b in gens[i + 1:]:
            c = ~a * ~b * a * b
            if not c.is_identity():
                comms.append(c)
    return normal_closure(group, comms, label or f"{group.label}'")


def normal_closure(group: GeneratedGroup, elements: Iterable[Permutation], label: str = "") -> GeneratedGroup:
    out: list[Permutation] = []
    chain = StabilizerChain(group.degree, [])
    queue = list(elements)
    while queue:
        x = queue.pop()
        if x.is_identity() or chain.contains(x):
            continue
        out.append(x)
        chain = StabilizerChain(group.degree, [g.images for g in out])
        for g in group.generators:
            queue.append(x.conjugate(g))
    result = GeneratedGroup(group.degree, out, label)
    result.__dict__["chain"] = chain
    return result


def subgroup(group: GeneratedGroup, elements: Iterable[Permutation], label: str = "") -> GeneratedGroup:
    return GeneratedGroup(group.degree, list(elements), label)


def symmetric_group(n: int) -> GeneratedGroup:
    if n <= 1:
        return GeneratedGroup(n, [], f"Sym({n})")
    gens = [Permutation.from_cycles(n, [(0, 1)])]
    if n > 2:
        gens.append(Permutation.from_cycles(n, [tuple(range(n))]))
    return GeneratedGroup(n, gens, f"Sym({n})")


def alternating_group(n: int) -> GeneratedGroup:
    if n <= 2:
        return GeneratedGroup(n, [], f"Alt({n})")
    gens = [Permutation.from_cycles(n, [(0, 1, 2)])]
    if n > 3:
        if n % 2:
            gens.append(Permutation.from_cycles(n, [tuple(range(n))]))
        else:
            gens.append(Permutation.from_cycles(n, [tuple(range(1, n))]))
    return GeneratedGroup(n, gens, f"Alt({n})")


def cyclic_group(n: int) -> GeneratedGroup:
    return GeneratedGroup(n, [Permutation.from_cycles(n, [tuple(range(n))])] if n > 1 else [], f"C({n})")
