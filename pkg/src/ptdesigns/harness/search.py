"""Exhaustive search for pairwise transitive orbit designs of small groups.

For each orbit of a group on k-subsets the orbit is taken as a block set.
Subsets are tracked in a bitmap indexed by colex rank, so every orbit is
visited once.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Callable, Iterator

import numpy as np

from ..designs import Design, DesignParameters, is_trivial, parameters
from ..errors import BoundExceededError
from ..pairwise import PairwiseReport, brute_verify
from ..permgroup import GeneratedGroup

MAX_DEGREE = 20


@dataclass(frozen=True)
class SearchResult:
    group_label: str
    degree: int
    k: int
    representative: tuple[int, ...]
    params: DesignParameters
    verdict: bool
    report: PairwiseReport | None = None

    def describe(self) -> str:
        return (f"{self.group_label} k={self.k} rep={self.representative} "
                f"{self.params.describe()} b={self.params.b} mu={self.params.mu}")


def colex_rank(subset) -> int:
    return sum(comb(c, i + 1) for i, c in enumerate(sorted(subset)))


def subset_orbits(group: GeneratedGroup, k: int) -> Iterator[list[tuple[int, ...]]]:
    """Orbits of ``group`` on k-subsets, each led by its lexicographically first member."""
    seen = np.zeros(comb(group.degree, k), dtype=bool)
    gens = [g.images for g in group.generators]
    for s in combinations(range(group.degree), k):
        if seen[colex_rank(s)]:
            continue
        seen[colex_rank(s)] = True
        orbit = [s]
        i = 0
        while i < len(orbit):
            cur = orbit[i]
            i += 1
            for g in gens:
                img = tuple(sorted(g[x] for x in cur))
                r = colex_rank(img)
                if not seen[r]:
                    seen[r] = True
                    orbit.append(img)
        yield orbit


def _quick_two_design(v: int, blocks) -> bool:
    M = np.zeros((len(blocks), v), dtype=np.int64)
    for i, b in enumerate(blocks):
        M[i, list(b)] = 1
    P = M.T @ M
    off = P[~np.eye(v, dtype=bool)]
    return bool((off == off[0]).all())


def search_small(group: GeneratedGroup, k_range=None) -> list[SearchResult]:
    """Pairwise transitive non-trivial orbit 2-designs of ``group`` with 3 <= k <= degree/2.

    Orbits with more than sqrt(2|G|) blocks are skipped: a pairwise
    transitive group has rank at most 3 on blocks, so a block stabilizer has
    an orbit of length at least (b-1)/2 and |G| >= b(b-1)/2.
    """
    v = group.degree
    if v > MAX_DEGREE:
        raise BoundExceededError(f"search needs degree <= {MAX_DEGREE}, got {v}")
    ks = range(3, v // 2 + 1) if k_range is None else k_range
    order = group.order()
    hits = []
    for k in ks:
        if not 3 <= k <= v // 2:
            raise ValueError(f"k={k} outside 3..{v // 2}")
        for orbit in subset_orbits(group, k):
            b = len(orbit)
            if 2 * order < b * (b - 1) or not _quick_two_design(v, orbit):
                continue
            D = Design(v, orbit, f"orbit of {orbit[0]}")
            p = parameters(D)
            if not p.is_2_design or is_trivial(p):
                continue
            rep = brute_verify(D, group)
            if rep.verdict:
                hits.append(SearchResult(group.label, v, k, orbit[0], p, True, rep))
    return hits


def bundled_small_groups() -> dict[str, Callable[[], GeneratedGroup]]:
    """2-transitive groups of degree at most 20 available without external files."""
    from ..algebra import projective_group
    from ..constructions import load_sporadic
    from ..constructions.catalog import table2_line3
    from ..constructions.families import ag_design
    from ..permgroup import symmetric_group

    out: dict[str, Callable[[], GeneratedGroup]] = {}
    for n in range(5, 9):
        out[f"Sym({n})"] = (lambda n=n: symmetric_group(n).relabel(f"Sym({n})"))
    out["PSL(2,7)"] = lambda: load_sporadic("PSL27_8").group.relabel("PSL(2,7) on 8 points")
    out["PSL(3,2)"] = lambda: projective_group(3, 2, "PSL")
    out["PSL(4,2)"] = lambda: projective_group(4, 2, "PSL")
    out["AGammaL(1,16)"] = lambda: table2_line3().group
    out["M11(11)"] = lambda: load_sporadic("M11_11").group.relabel("M11 on 11 points")
    out["M11(12)"] = lambda: load_sporadic("M11_12").group.relabel("M11 on 12 points")
    out["ASL(3,2)"] = lambda: ag_design(3, 2).group
    return out


# -- matching against the tables ----------------------------------------------------


def _prime_powers(limit: int):
    from ..algebra import prime_power

    return [q for q in range(2, limit + 1) if prime_power(q)]


def table_match(v: int, k: int, lam: int, mu: int | None = None) -> list[str]:
    """Table lines whose parameter formulas produce (v, k, lambda) and, for quasisymmetric rows, mu."""
    out = []
    if k == v - 1 and lam == v - 2:
        out.append("Table1:line1")
    for q in _prime_powers(v):
        d = 3
        while (q**d - 1) // (q - 1) <= v:
            n = (q**d - 1) // (q - 1)
            if n == v:
                if (k, lam) == ((q**(d - 1) - 1) // (q - 1), (q**(d - 2) - 1) // (q - 1)):
                    out.append("Table1:line2")
                if (k, lam) == (q**(d - 1), q**(d - 2) * (q - 1)):
                    out.append("Table1:line4")
                if d >= 4 and (k, lam) == (q + 1, 1) and mu in (None, 1):
                    out.append("Table2:line6")
            d += 1
        f = 2
        while q**f <= v:
            if q**f == v and (k, lam) == (q**(f - 1), (q**(f - 1) - 1) // (q - 1)) and mu in (None, q**(f - 2)):
                out.append("Table2:line1")
            f += 1
    fixed = {
        (15, 7, 3): "Table1:line3", (15, 8, 4): "Table1:line5", (11, 5, 2): "Table1:line6",
        (11, 6, 3): "Table1:line7", (176, 50, 14): "Table1:line8", (176, 126, 90): "Table1:line9",
        (16, 8, 7): "Table2:line2", (16, 4, 1): "Table2:line3", (8, 4, 3): "Table2:line4",
        (12, 6, 5): "Table2:line5", (21, 6, 4): "Table2:line7", (22, 6, 5): "Table2:line8",
    }
    if (v, k, lam) in fixed:
        out.append(fixed[(v, k, lam)])
    m = 2
    while 2 ** (2 * m) <= v:
        if v == 2 ** (2 * m):
            if (k, lam) == (2**(2 * m - 1) - 2**(m - 1), 2**(2 * m - 2) - 2**(m - 1)):
                out.append("Table1:line10")
            if (k, lam) == (2**(2 * m - 1) + 2**(m - 1), 2**(2 * m - 2) + 2**(m - 1)):
                out.append("Table1:line12")
        m += 1
    return sorted(set(out))
