"""Deterministic Schreier-Sims: base and strong generating set.

Internally permutations are raw image tuples; the public surface converts to
:class:`~ptdesigns.permgroup.perm.Permutation` where it hands elements back.
New base points are always the smallest point moved by the element that
forced the extension, so a chain is a pure function of the generator list
and the requested base prefix.
"""

from __future__ import annotations

from math import prod
from typing import Iterable, Sequence

from .perm import Permutation, _inv, _mul


def _first_moved(g: tuple) -> int:
    for i, x in enumerate(g):
        if i != x:
            return i
    return -1


class StabilizerChain:
    """Base, per-level strong generators and explicit transversals.

    ``levels[i]`` describes the stabilizer of ``base[:i]``: its generators
    ``gens[i]`` and the transversal ``trans[i]`` mapping each point of the
    orbit of ``base[i]`` to an element carrying ``base[i]`` onto it.
    """

    def __init__(self, degree: int, generators: Iterable[tuple], base_prefix: Sequence[int] = ()):
        self.degree = degree
        self.identity = tuple(range(degree))
        gens = []
        for g in generators:
            g = tuple(g)
            if g != self.identity and g not in gens:
                gens.append(g)
        base = list(dict.fromkeys(base_prefix))
        for b in base:
            if not 0 <= b < degree:
                raise ValueError(f"base point {b} out of range for degree {degree}")
        for g in gens:
            if all(g[b] == b for b in base):
                base.append(_first_moved(g))
        self.base: list[int] = base
        self.gens: list[list[tuple]] = [
            [g for g in gens if all(g[b] == b for b in base[:i])] for i in range(len(base))
        ]
        self.trans: list[dict[int, tuple]] = [{} for _ in base]
        self.trans_inv: list[dict[int, tuple]] = [{} for _ in base]
        for i in range(len(base)):
            self._extend_orbit(i)
        self._schreier_sims()

    # -- construction -------------------------------------------------

    def _extend_orbit(self, i: int) -> None:
        """Grow transversal ``i`` in place; existing entries never change."""
        trans, tinv, gens = self.trans[i], self.trans_inv[i], self.gens[i]
        if not trans:
            trans[self.base[i]] = self.identity
            tinv[self.base[i]] = self.identity
        queue = list(trans)
        pos = 0
        while pos < len(queue):
            x = queue[pos]
            pos += 1
            ux = trans[x]
            for s in gens:
                y = s[x]
                if y not in trans:
                    u = _mul(ux, s)
                    trans[y] = u
                    tinv[y] = _inv(u)
                    queue.append(y)

    def _add_level(self) -> None:
        self.gens.append([])
        self.trans.append({})
        self.trans_inv.append({})

    def _strip(self, g: tuple, start: int) -> tuple[tuple, int]:
        for level in range(start, len(self.base)):
            beta = g[self.base[level]]
            tinv = self.trans_inv[level].get(beta)
            if tinv is None:
                return g, level
            g = _mul(g, tinv)
        return g, len(self.base)

    def _schreier_sims(self) -> None:
        checked: list[set] = [set() for _ in self.base]
        i = len(self.base) - 1
        while i >= 0:
            restart = False
            trans, tinv = self.trans[i], self.trans_inv[i]
            for beta in list(trans):
                u = trans[beta]
                for si, s in enumerate(self.gens[i]):
                    if (beta, si) in checked[i]:
                        continue
                    checked[i].add((beta, si))
                    sg = _mul(_mul(u, s), tinv[s[beta]])
                    if sg == self.identity:
                        continue
                    h, j = self._strip(sg, i + 1)
                    if j == len(self.base) and h == self.identity:
                        continue
                    if j == len(self.base):
                        self.base.append(_first_moved(h))
                        self._add_level()
                        checked.append(set())
                    for level in range(i + 1, j + 1):
                        self.gens[level].append(h)
                        self._extend_orbit(level)
                    i = j
                    restart = True
                    break
                if restart:
                    break
            if not restart:
                i -= 1

    # -- queries -------------------------------------------------------

    def order(self) -> int:
        return prod(len(t) for t in self.trans)

    def transversal_sizes(self) -> list[int]:
        return [len(t) for t in self.trans]

    def contains(self, g) -> bool:
        g = tuple(g.images if isinstance(g, Permutation) else g)
        if len(g) != self.degree:
            return False
        h, j = self._strip(g, 0)
        return j == len(self.base) and h == self.identity

    __contains__ = contains

    def strong_generators(self) -> list[Permutation]:
        if not self.gens:
            return []
        return [Permutation(g, check=False) for g in self.gens[0]]

    def stabilizer_generators(self, depth: int) -> list[Permutation]:
        """Generators of the pointwise stabilizer of ``base[:depth]``."""
        if depth >= len(self.base):
            return []
        return [Permutation(g, check=False) for g in self.gens[depth]]

    def orbit_of_base(self, depth: int) -> list[int]:
        return list(self.trans[depth])

    def transversal_element(self, depth: int, point: int) -> Permutation:
        return Permutation(self.trans[depth][point], check=False)

    def element_mapping(self, src: Sequence[int], dst: Sequence[int]) -> Permutation | None:
        """An element taking ``src[i]`` to ``dst[i]`` for all i, or None.

        ``src`` must be a prefix of the base (build the chain with
        ``base_prefix=src``).
        """
        if list(self.base[: len(src)]) != list(src):
            raise ValueError("src must be a prefix of the chain base")
        g = self.identity
        ginv = self.identity
        for level, target in enumerate(dst):
            want = ginv[target]
            if level >= len(self.base):
                if want != src[level]:
                    return None
                continue
            u = self.trans[level].get(want)
            if u is None:
                return None
            g = _mul(u, g)
            ginv = _inv(g)
        return Permutation(g, check=False)

    def elements(self):
        """Iterate over all group elements (use only for small groups)."""
        def rec(level, acc):
            if level < 0:
                yield Permutation(acc, check=False)
                return
            for u in self.trans[level].values():
                yield from rec(level - 1, _mul(acc, u))
        yield from rec(len(self.base) - 1, self.identity)


def build_chain(group, base_prefix: Sequence[int] = ()) -> StabilizerChain:
    """Stabilizer chain for a :class:`GeneratedGroup` (or a plain generator list)."""
    if hasattr(group, "generators"):
        degree = group.degree
        gens = [g.images for g in group.generators]
    else:
        gens = [tuple(g.images if isinstance(g, Permutation) else g) for g in group]
        if not gens:
            raise ValueError("cannot infer the degree of an empty generator list")
        degree = len(gens[0])
    return StabilizerChain(degree, gens, base_prefix)
