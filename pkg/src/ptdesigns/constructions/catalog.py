"""Desk-scale instances of every table row, plus negative and trivial fixtures.

Rows are built lazily. Expected parameters come from the closed formulas
of each family, never from the constructed design.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Callable

from ..algebra import GF, general_linear, projective_objects
from ..designs import Design, DesignParameters, complement, is_trivial
from ..permgroup import GeneratedGroup
from . import golay
from .families import (
    Construction,
    ag_design,
    alt7_on_15,
    complete,
    hyperoval_design,
    pg_design,
    quadratic_forms_design,
    sp_forms_vectors,
)
from .gammal1 import GammaL1Subgroup, gammal1_matrices, subfield_subspace
from .regn import ConstructionInput, construction_regN, subspace_orbit
from .sporadic import load_sporadic


@dataclass
class CatalogRow:
    tag: str
    builder: Callable[[], Construction] = field(repr=False)
    expected_verdict: bool
    expected: tuple[int, int, int] | None = None
    mu: int | None = None
    kind: str = "table"
    _built: Construction | None = field(default=None, repr=False)

    def construction(self) -> Construction:
        if self._built is None:
            self._built = self.builder()
        return self._built

    @property
    def design(self) -> Design:
        return self.construction().design

    @property
    def group(self) -> GeneratedGroup | None:
        return self.construction().group

    @property
    def translations(self) -> GeneratedGroup | None:
        return self.construction().translations

    @property
    def v(self) -> int:
        return self.expected[0] if self.expected else self.design.v

    def __iter__(self):
        return iter((self.design, self.group, self.expected_verdict, self.tag))


def trivial_case(params: DesignParameters) -> str | None:
    """For a trivial 2-design: 'a' when k = 2 and lambda = 1, 'b' when k = v and
    lambda = b, 'neither' otherwise. None for a non-trivial design."""
    if not is_trivial(params):
        return None
    if params.k == 2 and params.lam == 1:
        return "a"
    if params.k == params.v and params.lam == params.b:
        return "b"
    return "neither"


# -- row builders -------------------------------------------------------------------


def _cached(fn):
    return lru_cache(maxsize=None)(fn)


@_cached
def _pg(d, q, kind, group):
    return pg_design(d, q, kind, group)


@_cached
def _forms(m, sign, e, derived):
    return quadratic_forms_design(m, sign, e, derived)


@_cached
def _h11():
    return Construction(golay.hadamard11(), golay.psl2_11())


@_cached
def _d176():
    return Construction(golay.d176_design(), golay.hs176())


def _complement_of(build):
    def make():
        c = build()
        return Construction(complement(c.design), c.group, None, dict(c.notes, complement=True))
    return make


def _complete_with(v, k, group):
    def make():
        c = complete(v, k)
        return Construction(c.design, group() if group else c.group)
    return make


def ag32_psl27() -> Construction:
    """AG(3,2) on the projective line PL(7): the 14-block PSL(2,7)-orbit of the
    lexicographically least 4-set whose orbit is a 2-design with disjoint blocks."""
    G = load_sporadic("PSL27_8").group
    from ..designs import parameters

    for S in combinations(range(8), 4):
        orb = {S}
        frontier = [S]
        while frontier:
            s = frontier.pop()
            for g in G.generators:
                img = tuple(sorted(g.images[x] for x in s))
                if img not in orb:
                    orb.add(img)
                    frontier.append(img)
        if len(orb) != 14:
            continue
        D = Design(8, orb, "AG(3,2) on PL(7)")
        p = parameters(D)
        if p.is_2_design and 0 in p.intersection_profile:
            return Construction(D, G)
    raise AssertionError("no 2-(8,4,3) orbit found")


def table2_line2() -> Construction:
    from .sporadic import alt7_matrices

    M = projective_objects(4, 2, "hyperplanes")
    c = construction_regN(ConstructionInput(2, 4, alt7_matrices(), M), "AG(4,2) via 2^4:Alt(7)")
    c.group = c.group.relabel("2^4:Alt(7)")
    return c


def table2_line3() -> Construction:
    G0 = gammal1_matrices(GammaL1Subgroup(2, 4, 1, 0, 1))
    M = subspace_orbit(G0, subfield_subspace(16, 2))
    c = construction_regN(ConstructionInput(2, 4, G0, M), "AG(2,4) via AGammaL(1,16)")
    c.group = c.group.relabel("AGammaL(1,16)")
    return c


def regn_gl32() -> Construction:
    M = projective_objects(3, 2, "hyperplanes")
    return construction_regN(ConstructionInput(2, 3, general_linear(GF(2), 3), M))


def _h12():
    return Construction(golay.hadamard12(), golay.m11_12())


def _m22(group):
    def make():
        return Construction(golay.witt22_design(), golay.m22() if group == "M22" else golay.m22_2())
    return make


def _double_pairs():
    c = complete(4, 2)
    return Construction(Design(4, list(c.design.blocks) * 2, "2 x C(4,2)"), c.group)


# -- formulas -------------------------------------------------------------------


def _pg_params(d, q):
    return ((q**d - 1) // (q - 1), (q**(d - 1) - 1) // (q - 1), (q**(d - 2) - 1) // (q - 1))


def _pg_comp_params(d, q):
    return ((q**d - 1) // (q - 1), q**(d - 1), q**(d - 2) * (q - 1))


def _sminus(m):
    return (2**(2 * m), 2**(2 * m - 1) - 2**(m - 1), 2**(2 * m - 2) - 2**(m - 1))


def _splus(m):
    return (2**(2 * m), 2**(2 * m - 1) + 2**(m - 1), 2**(2 * m - 2) + 2**(m - 1))


def _ag_params(f, q):
    return (q**f, q**(f - 1), (q**(f - 1) - 1) // (q - 1)), q**(f - 2)


def _pg1_params(d, q):
    return ((q**d - 1) // (q - 1), q + 1, 1), 1


# -- the catalog -------------------------------------------------------------


FORM_GROUPS = [  # (m, e, derived, suffix)
    (2, 1, False, "(m=2,e=1)"),
    (2, 1, True, "(m=2,e=1)'"),
    (2, 2, False, "(m=2,e=2)"),
    (3, 1, False, "(m=3,e=1)"),
    (3, 3, False, "(m=3,e=3)"),
]


def catalog() -> list[CatalogRow]:
    rows: list[CatalogRow] = []
    add = rows.append

    # Table 1 (symmetric designs)
    add(CatalogRow("Table1:line1(5)", _complete_with(5, 4, None), True, (5, 4, 3)))
    add(CatalogRow("Table1:line1(8)", _complete_with(8, 7, None), True, (8, 7, 6)))
    add(CatalogRow("Table1:line1(8)PSL(2,7)",
                   _complete_with(8, 7, lambda: load_sporadic("PSL27_8").group), True, (8, 7, 6)))
    for d, q in [(3, 2), (3, 3), (4, 2), (3, 4)]:
        for grp in ("PSL", "PGammaL"):
            sfx = "" if grp == "PSL" else grp
            build = (lambda d=d, q=q, grp=grp: _pg(d, q, "hyperplanes", grp))
            add(CatalogRow(f"Table1:line2({d},{q}){sfx}", build, True, _pg_params(d, q)))
            add(CatalogRow(f"Table1:line4({d},{q}){sfx}", _complement_of(build), True, _pg_comp_params(d, q)))
    add(CatalogRow("Table1:line3", alt7_on_15, True, (15, 7, 3)))
    add(CatalogRow("Table1:line5", _complement_of(alt7_on_15), True, (15, 8, 4)))
    add(CatalogRow("Table1:line6", _h11, True, (11, 5, 2)))
    add(CatalogRow("Table1:line7", _complement_of(_h11), True, (11, 6, 3)))
    add(CatalogRow("Table1:line8", _d176, True, (176, 50, 14)))
    add(CatalogRow("Table1:line9", _complement_of(_d176), True, (176, 126, 90)))
    for m, e, der, sfx in FORM_GROUPS:
        minus = (lambda m=m, e=e, der=der: _forms(m, "-", e, der))
        plus = (lambda m=m, e=e, der=der: _forms(m, "+", e, der))
        add(CatalogRow(f"Table1:line10{sfx}", minus, True, _sminus(m)))
        add(CatalogRow(f"Table1:line12{sfx}", plus, True, _splus(m)))
    # lines 11 and 13 are represented by their Sp-type groups only
    add(CatalogRow("Table1:line11(m=3,Sp-type)", lambda: _forms(3, "-", 1, False), True, _sminus(3)))
    add(CatalogRow("Table1:line13(m=3,Sp-type)", lambda: _forms(3, "+", 1, False), True, _splus(3)))

    # Table 2 (quasisymmetric designs)
    for f, q, grp in [(3, 3, "ASL"), (3, 2, "ASL"), (2, 3, "ASL"), (2, 5, "ASL"), (2, 4, "AGammaL")]:
        par, mu = _ag_params(f, q)
        sfx = "" if grp == "ASL" else grp
        add(CatalogRow(f"Table2:line1({f},{q}){sfx}", (lambda f=f, q=q, grp=grp: ag_design(f, q, grp)),
                       True, par, mu))
    add(CatalogRow("Table2:line1(3,2)regN", regn_gl32, True, *_ag_params(3, 2)))
    add(CatalogRow("Table2:line2", table2_line2, True, (16, 8, 7), 4))
    add(CatalogRow("Table2:line3", table2_line3, True, (16, 4, 1), 1))
    add(CatalogRow("Table2:line4", ag32_psl27, True, (8, 4, 3), 2))
    add(CatalogRow("Table2:line5", _h12, True, (12, 6, 5), 3))
    for d, q in [(4, 2), (4, 3), (5, 2)]:
        add(CatalogRow(f"Table2:line6({d},{q})", (lambda d=d, q=q: _pg(d, q, "lines", "PSL")),
                       True, *_pg1_params(d, q)))
    add(CatalogRow("Table2:line7", lambda: hyperoval_design("PSigmaL"), True, (21, 6, 4), 2))
    add(CatalogRow("Table2:line7PSL", lambda: hyperoval_design("PSL"), True, (21, 6, 4), 2))
    add(CatalogRow("Table2:line8", _m22("M22"), True, (22, 6, 5), 2))
    add(CatalogRow("Table2:line8M22.2", _m22("M22.2"), True, (22, 6, 5), 2))

    # negative fixtures
    for v in range(5, 9):
        for k in range(3, v - 1):
            add(CatalogRow(f"neg:C({v},{k})", _complete_with(v, k, None), False, (v, k, comb(v - 2, k - 2)),
                           kind="negative"))
    add(CatalogRow("neg:Sp(6,2)forms28", lambda: sp_forms_vectors(3, "elliptic"), False, (28, 12, 11),
                   kind="negative"))
    add(CatalogRow("neg:Sp(6,2)forms36", lambda: sp_forms_vectors(3, "hyperbolic"), False, (36, 16, 12),
                   kind="negative"))

    # trivial designs
    add(CatalogRow("trivial:C(5,2)", _complete_with(5, 2, None), True, (5, 2, 1), kind="trivial"))
    add(CatalogRow("trivial:C(3,2)", _complete_with(3, 2, None), True, (3, 2, 1), kind="trivial"))
    add(CatalogRow("trivial:C(4,4)", _complete_with(4, 4, None), True, (4, 4, 1), kind="trivial"))
    add(CatalogRow("trivial:2xC(4,2)", _double_pairs, False, (4, 2, 2), kind="trivial"))
    return rows


def catalog_row(tag: str) -> CatalogRow:
    for row in catalog():
        if row.tag == tag:
            return row
    raise KeyError(f"no catalog row {tag!r}")


def translations_passing(rows) -> list[str]:
    """Tags of rows whose design is nicely affine for its translation subgroup."""
    from ..designs import nicely_affine

    return [r.tag for r in rows if r.translations is not None and nicely_affine(r.design, r.translations).holds]
