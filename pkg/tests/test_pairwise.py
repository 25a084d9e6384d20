import pytest

from ptdesigns.constructions import (
    ag_design,
    catalog,
    catalog_row,
    complete,
    hadamard12,
    m11_12,
    pg_design,
    quadratic_forms_design,
)
from ptdesigns.designs import is_trivial, parameters
from ptdesigns.errors import PTDError
from ptdesigns.pairwise import (
    PAIR_SETS,
    brute_verify,
    classify_block_action,
    fast_verify,
    format_certificate,
    verify,
)
from ptdesigns.permgroup import closure_elements, symmetric_group


def naive_counts(design, group):
    """Orbit counts on the five pair sets from the full element list."""
    elems = list(closure_elements(group))
    blocks = [frozenset(b) for b in design.blocks]
    index = {b: i for i, b in enumerate(blocks)}
    v, b = design.v, len(blocks)

    def act(g, item):
        kind, x = item
        if kind == "p":
            return ("p", g(x))
        return ("b", index[frozenset(g(y) for y in blocks[x])])

    P = [("p", x) for x in range(v)]
    B = [("b", j) for j in range(b)]
    sets = {
        "point_pairs": [(x, y) for x in P for y in P if x != y],
        "flags": [(x, y) for x in P for y in B if x[1] in blocks[y[1]]],
        "antiflags": [(x, y) for x in P for y in B if x[1] not in blocks[y[1]]],
        "intersecting_block_pairs": [(x, y) for x in B for y in B
                                     if x != y and blocks[x[1]] & blocks[y[1]]],
        "disjoint_block_pairs": [(x, y) for x in B for y in B if not blocks[x[1]] & blocks[y[1]]],
    }
    out = {}
    for name, pairs in sets.items():
        left = set(pairs)
        n = 0
        while left:
            x, y = left.pop()
            left -= {(act(g, x), act(g, y)) for g in elems}
            n += 1
        out[name] = n
    return out


SMALL = [
    lambda: catalog_row("Table2:line4").construction(),
    lambda: ag_design(2, 3),
    lambda: pg_design(3, 2),
    lambda: complete(6, 3),
    lambda: complete(5, 4),
    lambda: quadratic_forms_design(2, "-"),
]


@pytest.mark.parametrize("make", SMALL)
def test_brute_counts_match_element_enumeration(make):
    c = make()
    assert brute_verify(c.design, c.group).counts == naive_counts(c.design, c.group)


def test_table2_line4_counts():
    c = catalog_row("Table2:line4").construction()
    rep = brute_verify(c.design, c.group)
    assert rep.verdict and [rep.counts[n] for n in PAIR_SETS] == [1, 1, 1, 1, 1]


def test_complete_6_3_has_two_intersecting_orbits():
    c = complete(6, 3)
    rep = verify(c.design, c.group)
    assert not rep.verdict and rep.counts["intersecting_block_pairs"] == 2


def test_complete_7_6_has_no_disjoint_pairs():
    c = complete(7, 6)
    rep = verify(c.design, c.group)
    assert rep.verdict and rep.empty["disjoint_block_pairs"]


def test_symmetric_shortcut_pg33():
    c = pg_design(3, 3)
    rep = fast_verify(c.design, c.group)
    assert rep.verdict and rep.conditions.get("symmetric_shortcut")
    assert fast_verify(c.design, c.group, symmetric_shortcut=False).verdict


def test_fast_refuses_trivial_designs():
    c = complete(5, 2)
    with pytest.raises(PTDError):
        fast_verify(c.design, c.group)


def test_degree_mismatch_is_an_error():
    with pytest.raises(PTDError):
        brute_verify(pg_design(3, 2).design, symmetric_group(8))


def test_bad_mode():
    c = pg_design(3, 2)
    with pytest.raises(ValueError):
        verify(c.design, c.group, "slow")


@pytest.mark.parametrize("row", [r for r in catalog() if r.v <= 64 and r.group is not None],
                         ids=lambda r: r.tag)
def test_fast_equals_brute_on_catalog(row):
    D, G = row.design, row.group
    p = parameters(D)
    brute = brute_verify(D, G)
    assert brute.verdict == row.expected_verdict
    if p.is_2_design and not is_trivial(p):
        assert fast_verify(D, G).verdict == brute.verdict
        if D.b == D.v:
            assert fast_verify(D, G, symmetric_shortcut=False).verdict == brute.verdict


def test_h12_block_action():
    rep = classify_block_action(hadamard12(), m11_12())
    assert rep.rank_on_blocks == 3 and not rep.primitive_on_blocks
    assert len(rep.block_system) == 11 and all(len(p) == 2 for p in rep.block_system)


def test_pg1_lines_block_action_is_primitive_rank_3():
    c = pg_design(4, 2, "lines")
    rep = classify_block_action(c.design, c.group)
    assert rep.rank_on_blocks == 3 and rep.primitive_on_blocks


def test_ag24_nicely_affine_case():
    c = catalog_row("Table2:line3").construction()
    rep = classify_block_action(c.design, c.group)
    assert rep.rank_on_blocks == 3 and not rep.primitive_on_blocks
    assert rep.imprimitive_case == "affine-nicely-affine"
    assert len(rep.nicely_affine.orbit_partition) == 5


def test_sminus4_full_group_rank_2():
    c = quadratic_forms_design(2, "-")
    rep = classify_block_action(c.design, c.group)
    assert rep.rank_on_blocks == 2 and rep.design_tag == "symmetric"


def test_c54_rank_2_symmetric():
    c = complete(5, 4)
    rep = classify_block_action(c.design, c.group)
    assert rep.rank_on_blocks == 2 and rep.design_tag == "symmetric"


def test_certificate_text_is_deterministic_without_timing():
    c = pg_design(3, 2)
    p = parameters(c.design)
    rep = verify(c.design, c.group)
    a = format_certificate("fano", p, rep, None, c.group.label, c.group.order(), timing=False)
    rep2 = verify(c.design, c.group)
    b = format_certificate("fano", p, rep2, None, c.group.label, c.group.order(), timing=False)
    assert a == b and a.endswith("verdict: pairwise-transitive\n")
