"""Automorphisms of incidence structures by individualization and refinement.

Build-time helper for ``make_data.py``; the library itself never searches
for automorphisms. Vertices are points ``0..v-1`` followed by blocks.
"""

from __future__ import annotations

import numpy as np


def incidence_graph(v: int, blocks) -> tuple[np.ndarray, np.ndarray]:
    b = len(blocks)
    A = np.zeros((v + b, v + b), dtype=np.int32)
    for j, blk in enumerate(blocks):
        for p in blk:
            A[p, v + j] = A[v + j, p] = 1
    colour = np.array([0] * v + [1] * b)
    return A, colour


def refine(A: np.ndarray, cells: list[list[int]]):
    """Equitable refinement. Returns the refined ordered cells and a trace."""
    cells = [list(c) for c in cells]
    trace = []
    changed = True
    while changed:
        changed = False
        for si in range(len(cells)):
            splitter = cells[si]
            counts = A[:, splitter].sum(axis=1)
            new = []
            for c in cells:
                vals = counts[c]
                if (vals == vals[0]).all():
                    new.append(c)
                    continue
                order = sorted(set(int(x) for x in vals))
                parts = [[x for x in c if counts[x] == val] for val in order]
                trace.append((len(new), tuple(order), tuple(len(p) for p in parts)))
                new.extend(parts)
                changed = True
            if changed:
                cells = new
                break
    return cells, trace


def individualize(cells, x):
    out = []
    for c in cells:
        if x in c:
            out.append([x])
            rest = [y for y in c if y != x]
            if rest:
                out.append(rest)
        else:
            out.append(c)
    return out


def is_automorphism(A: np.ndarray, perm) -> bool:
    p = np.asarray(perm)
    return bool(np.array_equal(A[np.ix_(p, p)], A))


def find_automorphism(A, colour, left_seq, right_seq, limit=10**6):
    """An automorphism mapping ``left_seq[i] -> right_seq[i]``, or None."""
    n = A.shape[0]
    start = [list(np.flatnonzero(colour == c)) for c in sorted(set(colour.tolist()))]
    L, R = start, start
    for x, y in zip(left_seq, right_seq):
        L, tl = refine(A, individualize(L, x))
        R, tr = refine(A, individualize(R, y))
        if tl != tr or [len(c) for c in L] != [len(c) for c in R]:
            return None
    L, tl = refine(A, L)
    R, tr = refine(A, R)
    if tl != tr:
        return None
    budget = [limit]

    def search(L, R):
        budget[0] -= 1
        if budget[0] < 0:
            raise RuntimeError("search budget exhausted")
        if all(len(c) == 1 for c in L):
            perm = [0] * n
            for cl, cr in zip(L, R):
                perm[cl[0]] = cr[0]
            return perm if is_automorphism(A, perm) else None
        i = next(i for i, c in enumerate(L) if len(c) > 1)
        x = L[i][0]
        L2, tl = refine(A, individualize(L, x))
        for y in R[i]:
            R2, tr = refine(A, individualize(R, y))
            if tl != tr or [len(c) for c in L2] != [len(c) for c in R2]:
                continue
            found = search(L2, R2)
            if found is not None:
                return found
        return None

    return search(L, R)
