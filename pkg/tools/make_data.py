"""Regenerate the bundled data files under src/ptdesigns/data/.

Run from the repository root::

    python3 tools/make_data.py            # everything
    python3 tools/make_data.py --skip-hs  # without the Higman-Sims search

Every file is written with a provenance header, and each group file carries
an ``expect-order`` line so that a corrupted file fails to load.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

import numpy as np

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))
sys.path.insert(0, str(ROOT / "tools"))

from autsearch import find_automorphism, incidence_graph  # noqa: E402

from ptdesigns.algebra import GF, FqMatrix, MatrixGroup, format_code, format_mgrp  # noqa: E402
from ptdesigns.algebra.codes import LinearCode, cyclic_generator, extend_by_check  # noqa: E402
from ptdesigns.permgroup import (  # noqa: E402
    GeneratedGroup,
    Permutation,
    format_grp,
    is_k_transitive,
    orbits,
    point_stabilizer,
)

DATA = ROOT / "src" / "ptdesigns" / "data"


def write(name: str, text: str) -> None:
    (DATA / name).write_text(text)
    print(f"wrote {name}")


# -- codes -------------------------------------------------------------------


def golay_codes() -> None:
    F2, F3 = GF(2), GF(3)
    g2 = [1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 1, 1]  # x^11+x^10+x^6+x^5+x^4+x^2+1
    C2 = LinearCode(F2, extend_by_check(F2, cyclic_generator(F2, 23, g2)), "extended binary Golay [24,12,8]")
    write("golay24.code", format_code(C2, comments=[
        "Extended binary Golay code.",
        "Cyclic [23,12,7] code with generator polynomial x^11+x^10+x^6+x^5+x^4+x^2+1",
        "(MacWilliams and Sloane, The Theory of Error-Correcting Codes, ch. 2 and 16),",
        "rows x^i g(x) for i = 0..11, extended by an overall parity coordinate 23.",
        "Coordinate i < 23 is the coefficient of x^i; coordinate 23 is infinity.",
        "Checked at load: 759 words of weight 8, minimum weight 8.",
    ]))
    g3 = [2, 0, 1, 2, 1, 1]  # x^5+x^4+2x^3+x^2+2
    C3 = LinearCode(F3, extend_by_check(F3, cyclic_generator(F3, 11, g3)), "extended ternary Golay [12,6,6]")
    write("golay12.code", format_code(C3, comments=[
        "Extended ternary Golay code.",
        "Cyclic [11,6,5] code with generator polynomial x^5+x^4+2x^3+x^2+2",
        "(MacWilliams and Sloane, ch. 16), rows x^i g(x) for i = 0..5, extended",
        "so that every codeword sums to 0 mod 3; coordinate 11 is infinity.",
        "Checked at load: 24 words of weight 12, minimum weight 6.",
    ]))


# -- permutation groups ---------------------------------------------------------


def pl_perm(p: int, f) -> Permutation:
    """Permutation of the projective line {0..p-1, inf=p} given by ``f``."""
    return Permutation([f(x) for x in range(p + 1)])


def mobius(p, a, b, c, d):
    inf = p

    def f(x):
        if x == inf:
            return inf if c == 0 else (a * pow(c, -1, p)) % p
        num, den = (a * x + b) % p, (c * x + d) % p
        return inf if den == 0 else (num * pow(den, -1, p)) % p
    return f


def m24() -> GeneratedGroup:
    p = 23
    qr = {(x * x) % p for x in range(1, p)}

    def delta(x):
        if x in (0, p):
            return x
        if x in qr:
            return (pow(x, 3, p) * pow(9, -1, p)) % p
        return (9 * pow(x, 3, p)) % p

    gens = [pl_perm(p, mobius(p, 1, 1, 0, 1)), pl_perm(p, mobius(p, 2, 0, 0, 1)),
            pl_perm(p, mobius(p, 0, -1 % p, 1, 0)), pl_perm(p, delta)]
    G = GeneratedGroup(24, gens, "M24")
    assert G.order() == 244823040
    return G


def psl27() -> GeneratedGroup:
    p = 7
    gens = [pl_perm(p, mobius(p, 1, 1, 0, 1)), pl_perm(p, mobius(p, 2, 0, 0, 1)),
            pl_perm(p, mobius(p, 0, -1 % p, 1, 0))]
    G = GeneratedGroup(8, gens, "PSL(2,7) on PL(7)")
    assert G.order() == 168
    return G


def check_code_invariant(G: GeneratedGroup) -> None:
    from ptdesigns.algebra import golay_code

    octads = set(golay_code("binary").supports_of_weight(8))
    for g in G.generators:
        for o in octads:
            assert tuple(sorted(g.images[x] for x in o)) in octads, "M24 generator does not preserve octads"


def generators_from_search(A, colour, v, base_len, target_order):
    """Automorphisms of an incidence structure found by a level-by-level search."""
    gens: list[Permutation] = []

    def group():
        return GeneratedGroup(v, gens)

    points = list(range(v))
    for level in range(base_len):
        prefix = points[:level]
        G = group()
        stab = G
        for q in prefix:
            stab = point_stabilizer(stab, q)
        covered = set()
        for o in orbits(v, stab.generators):
            if level in o:
                covered = set(o)
        for y in range(v):
            if y in covered or y in prefix:
                continue
            perm = find_automorphism(A, colour, prefix + [level], prefix + [y])
            if perm is None:
                continue
            gens.append(Permutation(perm[:v]))
            stab = group()
            for q in prefix:
                stab = point_stabilizer(stab, q)
            covered = set(next(o for o in orbits(v, stab.generators) if level in o))
        if group().order() == target_order:
            break
    G = group()
    assert G.order() == target_order, G.order()
    return G


def m11() -> tuple[GeneratedGroup, GeneratedGroup]:
    from ptdesigns.constructions.golay import hadamard12

    H = hadamard12()
    A, colour = incidence_graph(H.v, H.blocks)
    G = generators_from_search(A, colour, H.v, 5, 7920)
    G = G.relabel("M11 on 12 points")
    assert is_k_transitive(G, 3)
    # action on the 11 parallel classes {w, -w} of the 22 blocks
    classes = sorted({tuple(sorted((i, j))) for i, bi in enumerate(H.blocks)
                      for j, bj in enumerate(H.blocks) if i != j and not set(bi) & set(bj)})
    assert len(classes) == 11
    idx = {blk: i for i, blk in enumerate(H.blocks)}
    cls_of = {b: c for c, pair in enumerate(classes) for b in pair}
    gens11 = []
    for g in G.generators:
        img = [cls_of[idx[tuple(sorted(g.images[x] for x in H.blocks[pair[0]]))]] for pair in classes]
        gens11.append(Permutation(img))
    G11 = GeneratedGroup(11, gens11, "M11 on 11 points")
    assert G11.order() == 7920
    assert is_k_transitive(G11, 4)
    return G, G11


def alt7_in_gl42(seed: int = 20240607) -> MatrixGroup:
    F2 = GF(2)
    rng = np.random.default_rng(seed)

    def rand_inv():
        while True:
            M = rng.integers(0, 2, size=(4, 4))
            A = FqMatrix(F2, M)
            if A.is_invertible():
                return A

    while True:
        gens = [rand_inv(), rand_inv()]
        G = MatrixGroup(F2, 4, gens, "Alt(7) < GL(4,2)")
        if G.order() == 2520:
            nz = G.on_nonzero_vectors()
            if is_k_transitive(nz, 2):
                return G


def hs176(skip: bool) -> GeneratedGroup | None:
    from ptdesigns.constructions.golay import d176_design, m22_on_d176

    D = d176_design()
    M22 = m22_on_d176()
    if skip:
        return None
    A, colour = incidence_graph(D.v, D.blocks)
    stab0 = point_stabilizer(M22, 0)
    orbs = [o for o in orbits(176, stab0.generators) if 0 not in o]
    a = orbs[0][0]
    t = time.time()
    for orb in orbs[1:]:
        c = orb[0]
        perm = find_automorphism(A, colour, [0, a], [0, c])
        if perm is not None:
            break
    else:
        raise RuntimeError("no automorphism outside M22 found")
    print(f"  HS search: {time.time() - t:.1f}s")
    G = GeneratedGroup(176, list(M22.generators) + [Permutation(perm[:176])], "HS on 176 points")
    assert G.order() == 44352000, G.order()
    return G


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--skip-hs", action="store_true", help="do not search for the HS generator")
    args = ap.parse_args(argv)
    DATA.mkdir(parents=True, exist_ok=True)

    golay_codes()
    G24 = m24()
    check_code_invariant(G24)
    write("m24.grp", format_grp(G24, comments=[
        "M24 on the projective line PL(23) = {0..22, inf = 23}.",
        "Generators x -> x+1, x -> 2x, x -> -1/x (generating PSL(2,23)) and",
        "x -> x^3/9 on quadratic residues, 9 x^3 on non-residues, fixing 0 and inf",
        "(Conway's generators; Conway and Sloane, SPLAG ch. 10 and 11).",
        "They preserve the octads of golay24.code.",
    ]))
    write("psl27_8.grp", format_grp(psl27(), comments=[
        "PSL(2,7) on the projective line PL(7) = {0..6, inf = 7}.",
        "Generators x -> x+1, x -> 2x, x -> -1/x.",
    ]))
    G12, G11 = m11()
    write("m11_12.grp", format_grp(G12, comments=[
        "M11 in its 3-transitive action on 12 points: automorphisms of the",
        "3-(12,6,2) design H(12) built from golay12.code, found by",
        "individualization-refinement search (tools/autsearch.py).",
    ]))
    write("m11_11.grp", format_grp(G11, comments=[
        "M11 on 11 points: the action of m11_12.grp on the 11 parallel classes",
        "(pairs of disjoint blocks) of H(12), classes in lexicographic order.",
    ]))
    A7 = alt7_in_gl42()
    write("alt7_gl42.mgrp", format_mgrp(A7, comments=[
        "Alt(7) as a subgroup of GL(4,2) = Alt(8): two matrices found by a seeded",
        "random search (seed 20240607) for a pair generating a group of order 2520",
        "that is 2-transitive on the 15 nonzero vectors. Row-vector convention x -> xA.",
    ]))
    HS = hs176(args.skip_hs)
    if HS is not None:
        write("hs176.grp", format_grp(HS, comments=[
            "Higman-Sims group on the 176 points of D176 (octads through 22 but not 23,",
            "in lexicographic order). Generators: M22 (stabilizer of 22 and 23 in m24.grp)",
            "plus one design automorphism outside M22 found by individualization-refinement",
            "search (tools/autsearch.py).",
        ]))
    return 0


if __name__ == "__main__":
    sys.exit(main())
