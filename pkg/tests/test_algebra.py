from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import GF as SymGF
from sympy import Poly, symbols

from ptdesigns.algebra import (
    GF,
    FqMatrix,
    ProjectiveSpace,
    QuadraticForm,
    affine_hyperplane_cosets,
    enumerate_subspaces,
    forms_polarising,
    gaussian_binomial,
    general_linear,
    golay_code,
    hyperovals_pg24,
    parse_code,
    parse_mgrp,
    prime_power,
    projective_group,
    projective_objects,
    restrict_scalars,
    semilinear,
    special_linear,
    symplectic_group,
    symplectic_order,
)
from ptdesigns.errors import FormatError

X = symbols("x")
FIELDS = [4, 8, 9, 16, 25, 27, 49]


def _poly(F, a):
    return Poly(list(reversed(F.digits(a))), X, modulus=F.p)


@pytest.mark.parametrize("q", FIELDS)
def test_field_multiplication_matches_polynomial_arithmetic(q):
    F = GF(q)
    mod = Poly(list(reversed(F.poly)), X, modulus=F.p)
    rng = np.random.default_rng(q)
    for a, b in rng.integers(0, q, size=(200, 2)):
        expect = (_poly(F, a) * _poly(F, b)).rem(mod)
        assert _poly(F, F.mul[a, b]) == expect or (F.mul[a, b] == 0 and expect.is_zero)


@pytest.mark.parametrize("q", [2, 3, 5, 7, 4, 8, 9, 16, 27])
def test_field_axioms(q):
    F = GF(q)
    a = np.arange(q)
    assert (F.add[a, F.neg[a]] == 0).all()
    assert (F.mul[a[1:], F.inv[a[1:]]] == 1).all()
    assert F.order_of(F.prim) == q - 1
    assert sorted(F.frob.tolist()) == list(range(q))


def test_prime_field_matches_sympy():
    F, S = GF(7), SymGF(7)
    for a, b in product(range(7), repeat=2):
        assert F.mul[a, b] == int(S(a) * S(b)) % 7


def test_prime_power():
    assert prime_power(64) == (2, 6)
    assert prime_power(12) is None


@pytest.mark.parametrize("d,k,q", [(3, 1, 2), (4, 2, 2), (3, 2, 3), (4, 1, 3), (3, 1, 4)])
def test_subspace_counts_are_gaussian_binomials(d, k, q):
    assert len(enumerate_subspaces(GF(q), d, k)) == gaussian_binomial(d, k, q)


def test_projective_object_errors():
    with pytest.raises(ValueError):
        projective_objects(1, 2)
    with pytest.raises(ValueError):
        projective_objects(2, 2, "lines")


@pytest.mark.parametrize("group, order", [
    (lambda: general_linear(GF(2), 3), 168),
    (lambda: general_linear(GF(2), 4), 20160),
    (lambda: special_linear(GF(3), 3), 5616),
    (lambda: special_linear(GF(4), 2), 60),
    (lambda: semilinear(GF(4), 2), 360),
])
def test_linear_group_orders(group, order):
    assert group().order() == order


@pytest.mark.parametrize("kind, order", [("PSL", 20160), ("PGL", 60480), ("PSigmaL", 40320),
                                         ("PGammaL", 120960)])
def test_projective_groups_of_pg24(kind, order):
    assert projective_group(3, 4, kind).order() == order


def test_matrix_inverse_and_det():
    F = GF(9)
    gens = general_linear(F, 3).generators
    A = gens[0] @ gens[-1] @ gens[1]
    assert A.is_invertible() and A.det() != 0
    assert A @ A.inverse() == FqMatrix.identity(F, 3)
    row = [1, 2, 5]
    c = F.prim
    S = FqMatrix(F, [row, [int(F.mul[c, x]) for x in row], [0, 0, 1]])
    assert not S.is_invertible() and S.det() == 0


def test_restriction_of_scalars_preserves_products():
    F = GF(4)
    rng = np.random.default_rng(3)
    A = FqMatrix(F, rng.integers(0, 4, size=(2, 2)))
    B = FqMatrix(F, rng.integers(0, 4, size=(2, 2)))
    P = GF(2)
    assert restrict_scalars(A @ B, P) == restrict_scalars(A, P) @ restrict_scalars(B, P)


@pytest.mark.parametrize("m,e,order", [(2, 1, 720), (2, 2, 60), (3, 1, 1451520), (3, 3, 504)])
def test_symplectic_orders(m, e, order):
    S = symplectic_group(m, e)
    assert S.on_vectors().order() == order == symplectic_order(m // e, 2**e)


@pytest.mark.parametrize("m", [2, 3])
def test_form_type_counts(m):
    kinds = [Q.kind for Q in forms_polarising(m)]
    assert kinds.count("hyperbolic") == 2 ** (2 * m - 1) + 2 ** (m - 1)
    assert kinds.count("elliptic") == 2 ** (2 * m - 1) - 2 ** (m - 1)


def test_forms_polarise_to_fixed_form():
    for Q in forms_polarising(2):
        for x, y in product(product(range(2), repeat=4), repeat=2):
            expect = sum(x[2 * i] * y[2 * i + 1] + x[2 * i + 1] * y[2 * i] for i in range(2)) % 2
            assert Q.polar(x, y) == expect


def test_sp42_orbits_on_forms():
    G = symplectic_group(2).on_forms()
    assert sorted(len(o) for o in G.orbits()) == [6, 10]


def test_truth_table_agrees_with_call():
    Q = QuadraticForm.standard(2, (1, 0, 1, 1))
    vecs = list(product(range(2), repeat=4))
    assert [Q(v) for v in vecs] == Q.truth_table.tolist()


def test_hyperovals():
    H = hyperovals_pg24()
    assert len(H.ovals) == 168 and H.orbit_sizes() == [56, 56, 56]
    space = ProjectiveSpace(3, 4)
    for o in H.ovals[:20]:
        for L in space.objects_as_point_sets("lines"):
            assert len(set(o) & set(L)) in (0, 2)


def test_affine_cosets():
    blocks = affine_hyperplane_cosets(3, 3)
    assert len(blocks) == 39 and all(len(b) == 9 for b in blocks)


def test_golay_weight_enumerators():
    assert golay_code("binary").weight_enumerator == {0: 1, 8: 759, 12: 2576, 16: 759, 24: 1}
    assert golay_code("ternary").weight_enumerator == {0: 1, 6: 264, 9: 440, 12: 24}


def test_code_parse_errors():
    with pytest.raises(FormatError):
        parse_code("field 2 1\nlength 3\ndim 1\nrow 0 1\n")


def test_mgrp_round_trip():
    from ptdesigns.algebra import format_mgrp

    G = general_linear(GF(3), 2)
    H = parse_mgrp(format_mgrp(G))
    assert H.order() == 48


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([4, 8, 9]), st.integers(0, 10**6))
def test_frobenius_is_additive_and_multiplicative(q, seed):
    F = GF(q)
    rng = np.random.default_rng(seed)
    a, b = rng.integers(0, q, size=2)
    assert F.frob[F.add[a, b]] == F.add[F.frob[a], F.frob[b]]
    assert F.frob[F.mul[a, b]] == F.mul[F.frob[a], F.frob[b]]
