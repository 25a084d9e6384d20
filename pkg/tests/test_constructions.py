import shutil
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ptdesigns._data import BUNDLED
from ptdesigns.algebra import GF, affine_hyperplane_cosets, enumerate_subspaces, general_linear, rref
from ptdesigns.constructions import (
    ConstructionInput,
    GammaL1Subgroup,
    ag_design,
    alt7_matrices,
    alt7_on_15,
    catalog,
    catalog_row,
    check_conditions,
    complete_design,
    construction_regN,
    gammal1_is_transitive,
    gammal1_matrices,
    gammal1_orbits,
    golay_designs,
    hyperoval_design,
    load_sporadic,
    pg_design,
    quadratic_forms_design,
    sp_forms_vectors,
    standard_form_triples,
    subfield_subspace,
    subspace_orbit,
    trivial_case,
    zsigmondy_ppd,
)
from ptdesigns.designs import combined_action, derived, is_quasisymmetric, parameters, residual
from ptdesigns.errors import ConstructionError, FormatError
from ptdesigns.permgroup import action_report, point_stabilizer


def log_orbits(s):
    """Orbits of <tau^i, tau^j sigma^t> on discrete logs, by plain integer closure."""
    n = s.p**s.d - 1
    pt = s.p**s.t
    left, out = set(range(n)), []
    while left:
        a = min(left)
        orb, stack = {a}, [a]
        while stack:
            x = stack.pop()
            for y in ((x + s.i) % n, (s.j + x * pt) % n):
                if y not in orb:
                    orb.add(y)
                    stack.append(y)
        left -= orb
        out.append(orb)
    return out


def ppd_oracle(p, d):
    n, x, primes = p**d - 1, 2, set()
    while x * x <= n:
        while n % x == 0:
            primes.add(x)
            n //= x
        x += 1
    if n > 1:
        primes.add(n)
    return {x for x in primes if all((p**c - 1) % x for c in range(1, d))}


# -- complete designs and projective / affine families ----------------------------


def test_complete_designs():
    p = parameters(complete_design(5, 4))
    assert (p.b, p.k, p.lam) == (5, 4, 3) and p.b == p.v
    assert complete_design(6, 3).b == 20
    assert complete_design(4, 4).b == 1 and trivial_case(parameters(complete_design(4, 4))) == "b"


@pytest.mark.parametrize("d,q,kind,params", [
    (4, 2, "hyperplanes", (15, 7, 3)),
    (4, 2, "lines", (15, 3, 1)),
    (3, 3, "hyperplanes", (13, 4, 1)),
])
def test_pg_designs(d, q, kind, params):
    p = parameters(pg_design(d, q, kind).design)
    assert (p.v, p.k, p.lam) == params


def test_pg_lines_counts():
    D = pg_design(4, 2, "lines").design
    assert D.b == 35 and is_quasisymmetric(D)[1] == (0, 1)


@pytest.mark.parametrize("f,q,params,mu", [(3, 2, (8, 4, 3), 2), (2, 4, (16, 4, 1), 1), (4, 2, (16, 8, 7), 4)])
def test_ag_designs(f, q, params, mu):
    c = ag_design(f, q)
    p = parameters(c.design)
    assert (p.v, p.k, p.lam) == params and p.mu == mu
    assert c.translations.order() == q**f


def test_ag_blocks_are_hyperplane_cosets():
    assert sorted(ag_design(3, 2).design.blocks) == sorted(tuple(sorted(b)) for b in affine_hyperplane_cosets(3, 2))


@pytest.mark.parametrize("m,sign,params", [(2, "-", (16, 6, 2)), (2, "+", (16, 10, 6)), (3, "-", (64, 28, 12))])
def test_quadratic_forms_designs(m, sign, params):
    p = parameters(quadratic_forms_design(m, sign).design)
    assert (p.v, p.k, p.lam) == params and p.b == p.v


def test_sminus_block_count_oracle():
    # lambda for S^-(4) by direct count: forms Q with Q(x)=Q(y)=0 for x != y
    c = quadratic_forms_design(2, "-")
    blocks = [set(b) for b in c.design.blocks]
    lams = {sum(1 for b in blocks if x in b and y in b) for x, y in product(range(16), repeat=2) if x != y}
    assert lams == {2}


def test_sp_forms_vectors_have_no_disjoint_blocks():
    for kind, params in [("elliptic", (28, 12, 11)), ("hyperbolic", (36, 16, 12))]:
        c = sp_forms_vectors(3, kind)
        p = parameters(c.design)
        assert (p.v, p.k, p.lam) == params and c.design.b == 63
        assert 0 not in p.intersection_profile


def test_hyperoval_design():
    c = hyperoval_design()
    p = parameters(c.design)
    assert (p.v, p.k, p.lam, p.mu, p.b) == (21, 6, 4, 2, 56)
    S = point_stabilizer(combined_action(c.design, c.group), 21)
    sizes = sorted(len(o) for o in S.orbits() if min(o) < 21)
    assert sizes == [6, 15]


def test_alt7_on_15():
    c = alt7_on_15()
    assert c.group.order() == 2520 and c.group.degree == 15
    assert action_report(c.group).rank == 2
    assert parameters(c.design).describe() == "2-(15,7,3)"


# -- GammaL(1, p^d) --------------------------------------------------------------


def test_gammal1_standard_form_validation():
    with pytest.raises(ValueError):
        GammaL1Subgroup(2, 4, 4, 0, 1)
    with pytest.raises(ValueError):
        GammaL1Subgroup(2, 4, 5, 5, 1)
    with pytest.raises(ValueError):
        GammaL1Subgroup(2, 4, 5, 1, 3)


def test_full_gammal1_64():
    assert gammal1_is_transitive(GammaL1Subgroup(2, 6, 1, 0, 1))


@pytest.mark.parametrize("p,d", [(2, 3), (3, 2), (2, 4), (5, 2), (3, 3), (2, 5), (2, 6), (3, 4)])
def test_gammal1_criterion_against_log_closure(p, d):
    for s in standard_form_triples(p, d):
        assert gammal1_is_transitive(s) == (len(log_orbits(s)) == 1), s


def test_field_action_matches_log_action():
    for s in standard_form_triples(3, 4):
        assert sorted(map(len, gammal1_orbits(s))) == sorted(map(len, log_orbits(s)))


def test_gammal1_16_i5():
    for s in (x for x in standard_form_triples(2, 4) if x.i == 5):
        assert gammal1_is_transitive(s) == (len(gammal1_orbits(s)) == 1)
    sizes = sorted(len(o) for o in gammal1_orbits(GammaL1Subgroup(2, 4, 5, 0, 1)))
    assert sorted([1] + sizes) == [1, 3, 12]


def test_gammal1_81_i2_j1():
    s = GammaL1Subgroup(3, 4, 2, 1, 1)
    assert gammal1_is_transitive(s) == (len(gammal1_orbits(s)) == 1)


def test_orbit_of_one_under_tau5_sigma():
    F = GF(16)
    s = GammaL1Subgroup(2, 4, 5, 0, 1)
    orb = next(o for o in gammal1_orbits(s) if 0 in o)  # element 1 is index 0
    assert sorted(x + 1 for x in orb) == sorted([1, F.eps(5), F.eps(10)])


def test_gammal1_matrices_order():
    s = GammaL1Subgroup(2, 4, 1, 0, 1)
    assert gammal1_matrices(s).order() == 60


@pytest.mark.parametrize("p,d", [(2, 6), (2, 4), (3, 4), (2, 10), (5, 3), (7, 2), (2, 2), (3, 2)])
def test_zsigmondy_against_trial_division(p, d):
    assert zsigmondy_ppd(p, d) == ppd_oracle(p, d)


def test_zsigmondy_examples():
    assert zsigmondy_ppd(2, 6) == set()
    assert zsigmondy_ppd(2, 4) == {5} == zsigmondy_ppd(3, 4)


@settings(max_examples=25, deadline=None)
@given(st.sampled_from([2, 3, 5, 7]), st.integers(2, 8))
def test_zsigmondy_property(p, d):
    assert zsigmondy_ppd(p, d) == ppd_oracle(p, d)


# -- regular normal subgroup construction ---------------------------------------


def test_regn_gl32_hyperplanes_give_ag32():
    F = GF(2)
    M = enumerate_subspaces(F, 3, 2)
    c = construction_regN(ConstructionInput(2, 3, general_linear(F, 3), M))
    assert sorted(c.design.blocks) == sorted(ag_design(3, 2).design.blocks)
    assert c.design.b == 14


def test_regn_alt7():
    M = enumerate_subspaces(GF(2), 4, 3)
    c = construction_regN(ConstructionInput(2, 4, alt7_matrices(), M))
    p = parameters(c.design)
    assert p.describe() == "2-(16,8,7)" and p.mu == 4 and c.notes["r"] == 15


def test_regn_gammal1_16():
    G0 = gammal1_matrices(GammaL1Subgroup(2, 4, 1, 0, 1))
    M = subspace_orbit(G0, subfield_subspace(16, 2))
    assert len(M) == 5
    c = construction_regN(ConstructionInput(2, 4, G0, M))
    assert parameters(c.design).describe() == "2-(16,4,1)"


def test_regn_condition_errors():
    G0 = gammal1_matrices(GammaL1Subgroup(2, 4, 1, 0, 1))
    with pytest.raises(ConstructionError, match=r"condition \(b\)"):
        check_conditions(ConstructionInput(2, 4, G0, enumerate_subspaces(GF(2), 4, 3)))
    with pytest.raises(ConstructionError, match=r"condition \(a\)"):
        tau5 = gammal1_matrices(GammaL1Subgroup(2, 4, 5, 0, 1))
        check_conditions(ConstructionInput(2, 4, tau5, enumerate_subspaces(GF(2), 4, 3)))
    with pytest.raises(ConstructionError, match=r"condition \(b\)"):
        check_conditions(ConstructionInput(2, 4, G0, [subfield_subspace(16, 2)]))


def test_regn_input_normalises_subspaces():
    F = GF(2)
    inp = ConstructionInput(2, 3, general_linear(F, 3), [((1, 1, 0), (0, 1, 0))])
    assert inp.M[0] == rref(F, [(1, 0, 0), (0, 1, 0)])


# -- Golay family and sporadic data --------------------------------------------------


def test_golay_designs():
    g = golay_designs()
    h12 = parameters(g["H12"].design)
    assert h12.t_max == 3 and set(h12.intersection_profile) == {0, 3}
    assert parameters(g["M22_design"].design).describe() == "2-(22,6,5)" and g["M22_design"].design.b == 77
    d176 = parameters(g["D176"].design)
    assert d176.describe() == "2-(176,50,14)" and d176.b == 176
    assert g["D176"].notes["group_status"] in ("verified", "construction-only")


def test_derived_h12_is_h11():
    g = golay_designs()
    for x in (0, 5, 11):
        assert parameters(derived(g["H12"].design, x)).describe() == "2-(11,5,2)"


def test_residual_m22_matches_hyperovals():
    D = golay_designs()["M22_design"].design
    p = parameters(residual(D, 0))
    q = parameters(hyperoval_design().design)
    assert (p.v, p.b, p.k, p.lam) == (q.v, q.b, q.k, q.lam) == (21, 56, 6, 4)


@pytest.mark.parametrize("name,order", [("M11_11", 7920), ("M11_12", 7920), ("PSL27_8", 168),
                                        ("M24", 244823040)])
def test_sporadic_orders(name, order):
    assert load_sporadic(name).group.order() == order


def test_m24_stabilizers_and_m11_point_stabilizer():
    G = load_sporadic("M24").group
    assert point_stabilizer(point_stabilizer(G, 0), 1).order() == 443520 == 244823040 // (24 * 23)
    assert point_stabilizer(load_sporadic("M11_12").group, 0).order() == 660


def test_m11_order_by_closure():
    from ptdesigns.permgroup import closure_elements

    assert len(closure_elements(load_sporadic("M11_11").group, limit=10000)) == 7920


def test_unknown_sporadic_name():
    with pytest.raises(KeyError):
        load_sporadic("J1")


def test_corrupted_data_file(tmp_path, monkeypatch):
    for f in BUNDLED.iterdir():
        shutil.copy(f, tmp_path / f.name)
    text = (tmp_path / "m11_12.grp").read_text().splitlines()
    i = next(n for n, line in enumerate(text) if line.startswith("perm"))
    text[i] = "perm 0 0 1"
    (tmp_path / "m11_12.grp").write_text("\n".join(text) + "\n")
    monkeypatch.setenv("PTD_DATA_DIR", str(tmp_path))
    load_sporadic.cache_clear()
    try:
        with pytest.raises(FormatError) as exc:
            load_sporadic("M11_12")
        assert exc.value.lineno == i + 1
    finally:
        monkeypatch.delenv("PTD_DATA_DIR")
        load_sporadic.cache_clear()


# -- catalog --------------------------------------------------------------------------


def test_catalog_tags_unique():
    tags = [r.tag for r in catalog()]
    assert len(tags) == len(set(tags))


def test_catalog_expected_parameters_match():
    for row in catalog():
        if row.v > 64 or row.expected is None:
            continue
        p = parameters(row.design)
        assert (p.v, p.k, p.lam) == row.expected, row.tag
        if row.mu is not None:
            assert p.mu == row.mu, row.tag


def test_catalog_row_lookup():
    assert catalog_row("Table2:line4").v == 8
    with pytest.raises(KeyError):
        catalog_row("Table9:line1")
