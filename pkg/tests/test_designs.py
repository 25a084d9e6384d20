from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ptdesigns.constructions import ag_design, complete_design, hadamard12, pg_design
from ptdesigns.designs import (
    Design,
    block_permutation,
    complement,
    derived,
    dual,
    format_dsg,
    identities,
    is_quasisymmetric,
    is_symmetric,
    is_trivial,
    nicely_affine,
    parameters,
    parse_dsg,
    preserves,
    residual,
    structural_checks,
)
from ptdesigns.errors import FormatError, NotPreservedError
from ptdesigns.permgroup import Permutation, symmetric_group


def lam_oracle(design):
    """Blocks through each pair, counted directly."""
    counts = {}
    for x, y in combinations(range(design.v), 2):
        counts[(x, y)] = sum(1 for b in design.blocks if x in b and y in b)
    vals = set(counts.values())
    return vals.pop() if len(vals) == 1 else None


def test_fano_parameters():
    D = pg_design(3, 2).design
    p = parameters(D)
    assert (p.v, p.b, p.k, p.r, p.lam) == (7, 7, 3, 3, 1)
    assert p.describe() == "2-(7,3,1)"
    assert is_symmetric(D)
    assert all(identities(p).values())


def test_unequal_blocks_are_not_a_design():
    D = Design(5, [(0, 1, 2), (1, 2)])
    p = parameters(D)
    assert not p.is_2_design
    assert p.describe() == "not a t-design (t>=2)"
    assert identities(p) == {}


@settings(max_examples=40, deadline=None)
@given(st.integers(4, 8).flatmap(lambda v: st.tuples(
    st.just(v), st.lists(st.sets(st.integers(0, v - 1), min_size=3, max_size=3), min_size=2, max_size=12))))
def test_lambda_matches_direct_count(args):
    v, blocks = args
    D = Design(v, blocks)
    assert parameters(D).lam == lam_oracle(D)


def test_h12_is_a_3_design():
    p = parameters(hadamard12())
    assert p.t_max == 3 and (p.k, p.lam) == (6, 5)
    assert p.intersection_profile == {0: 11, 3: 220} and p.mu == 3


def test_transforms():
    D = ag_design(3, 2).design
    C = complement(D)
    assert parameters(C).describe() == "2-(8,4,3)"
    assert dual(dual(D)) == D
    assert parameters(derived(D, 0)).describe() == "2-(7,3,1)"
    assert parameters(residual(D, 0)).k == 4
    with pytest.raises(ValueError):
        derived(D, 8)


def test_complement_of_complete_fails_cleanly():
    with pytest.raises(ValueError):
        complement(complete_design(4, 4))


def test_structural_checks():
    s = structural_checks(Design(6, [(0, 1, 2), (3, 4, 5)]))
    assert not s.connected
    s = structural_checks(Design(4, [(0, 1, 2), (0, 1, 2)]))
    assert s.repeated_blocks


def test_quasisymmetric_and_trivial():
    D = pg_design(4, 2, "lines").design
    flag, sizes = is_quasisymmetric(D)
    assert flag and sizes == (0, 1)
    assert is_trivial(parameters(complete_design(5, 2)))
    assert not is_trivial(parameters(D))


def test_block_permutation_detects_non_automorphisms():
    D = pg_design(3, 2).design
    with pytest.raises(NotPreservedError):
        block_permutation(D, Permutation.from_cycles(7, [(0, 1)]))
    assert not preserves(D, symmetric_group(7))


def test_nicely_affine_ag24():
    c = ag_design(2, 4)
    rep = nicely_affine(c.design, c.translations)
    assert rep.holds and rep.mu == 1 and len(rep.orbit_partition) == 5


def test_dsg_round_trip():
    D = pg_design(3, 3).design
    assert parse_dsg(format_dsg(D, expect=True)) == D


@pytest.mark.parametrize("text, lineno", [
    ("points 3\nblock 0 1 5\n", 2),
    ("points 3\nblock\n", 2),
    ("points 3\nexpect k 2\nblock 0 1 2\n", None),
    ("block 0 1\n", None),
])
def test_dsg_errors(text, lineno):
    with pytest.raises(FormatError) as exc:
        parse_dsg(text, "d.dsg")
    if lineno is not None:
        assert exc.value.lineno == lineno


def test_intersection_matrix_symmetric():
    D = ag_design(2, 3).design
    I = D.intersection_matrix
    assert np.array_equal(I, I.T) and (np.diag(I) == 3).all()
