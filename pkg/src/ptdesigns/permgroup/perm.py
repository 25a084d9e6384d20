"""Permutations on {0, ..., n-1} stored as image tuples.

Products compose left to right: ``(a * b)(x) == b(a(x))``, so a word
``g1 * g2 * g3`` applies ``g1`` first.
"""

from __future__ import annotations

from math import lcm
from typing import Iterable, Sequence


def _mul(a: tuple, b: tuple) -> tuple:
    return tuple([b[i] for i in a])


def _inv(a: tuple) -> tuple:
    out = [0] * len(a)
    for i, j in enumerate(a):
        out[j] = i
    return tuple(out)


class Permutation:
    """An immutable permutation of ``range(degree)``."""

    __slots__ = ("images", "_hash")

    def __init__(self, images: Iterable[int], check: bool = True):
        images = tuple(int(i) for i in images)
        if check and sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation of 0..{len(images) - 1}: {images}")
        self.images = images
        self._hash = hash(images)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(range(degree), check=False)

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        images = list(range(degree))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                images[a] = b
        return cls(images)

    @classmethod
    def from_map(cls, points: Sequence, func) -> "Permutation":
        """Permutation induced by ``func`` on an indexed list of hashable points."""
        index = {p: i for i, p in enumerate(points)}
        return cls([index[func(p)] for p in points])

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return Permutation(_mul(self.images, other.images), check=False)

    def __pow__(self, k: int) -> "Permutation":
        if k < 0:
            return (~self) ** (-k)
        result = tuple(range(self.degree))
        base = self.images
        while k:
            if k & 1:
                result = _mul(result, base)
            base = _mul(base, base)
            k >>= 1
        return Permutation(result, check=False)

    def __invert__(self) -> "Permutation":
        return Permutation(_inv(self.images), check=False)

    inverse = __invert__

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def __hash__(self) -> int:
        return self._hash

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def support(self) -> list[int]:
        return [i for i, x in enumerate(self.images) if i != x]

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for i in range(self.degree):
            if i in seen or self.images[i] == i:
                continue
            cyc = [i]
            seen.add(i)
            j = self.images[i]
            while j != i:
                cyc.append(j)
                seen.add(j)
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def order(self) -> int:
        return lcm(1, *(len(c) for c in self.cycles()))

    def is_even(self) -> bool:
        return sum(len(c) - 1 for c in self.cycles()) % 2 == 0

    def conjugate(self, by: "Permutation") -> "Permutation":
        """Return ``by^-1 * self * by``."""
        return ~by * self * by

    def image_set(self, points: Iterable[int]) -> frozenset:
        return frozenset(self.images[p] for p in points)

    def restrict(self, points: Sequence[int]) -> "Permutation":
        """Action on an invariant subset, relabelled by position in ``points``."""
        index = {p: i for i, p in enumerate(points)}
        try:
            return Permutation([index[self.images[p]] for p in points])
        except KeyError:
            raise ValueError("point subset is not invariant under the permutation") from None

    def __repr__(self) -> str:
        cyc = "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles())
        return f"Permutation<{self.degree}>{cyc or '()'}"
