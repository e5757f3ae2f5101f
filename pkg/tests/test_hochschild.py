import pytest

from ssb import hochschild as hh
from ssb import invariants as inv
from ssb.errors import UnsupportedDegree
from ssb.families import (FamilySpec, build, centre_dim_formula, hh1_verified,
                          higher_hh_verified)


def spec(kind, *params, char=0):
    return FamilySpec(kind, tuple(params), char)


def test_stage_counts_lambda():
    A = build(spec("lambda", 1, 1, 2, 2))
    assert hh.stage(A, 0).summand_count() == 1
    assert hh.stage(A, 1).summand_count() == 2
    # one summand per minimal generator: the identification and two zeros
    assert hh.stage(A, 2).summand_count() == 3
    with pytest.raises(UnsupportedDegree):
        hh.stage(A, 3)


def test_stage_counts_gamma_uses_resolution():
    A = build(spec("gamma", 2, 2, 1))
    assert hh.stage(A, 1).summand_count() == 4  # one per arrow
    assert hh.stage(A, 2).summand_count() == 3  # one per minimal generator
    assert hh.stage(A, 4).summand_count() == 5


def test_generic_complex_property():
    for s in [spec("lambda", 1, 2, 2, 3), spec("nakayama", 2, 2),
              spec("gamma", 1, 2, 1)]:
        A = build(s)
        hh.verify_complex(A, hh.stage(A, 1), hh.stage(A, 2))


def test_hom_dimension_bookkeeping():
    # dim Hom(P^n, A) equals the sum of Cartan entries (j, i) over summands
    for s in [spec("gamma", 2, 3, 1), spec("lambda", 2, 2, 2, 2)]:
        A = build(s)
        for n in (0, 1, 2):
            st = hh.stage(A, n)
            assert hh.hom_dim(A, st) == sum(
                A.cartan_entry(j, i) for (i, j) in st.summands)


def test_hh0_equals_centre_grid():
    for s in [spec("gamma", 2, 2, 2, char=2), spec("gamma", 1, 3, 1),
              spec("lambda", 2, 3, 2, 1, char=3), spec("nakayama", 3, 2)]:
        A = build(s)
        assert hh.hh_dim(A, 0) == inv.centre(A).dim == centre_dim_formula(s)


@pytest.mark.parametrize("s,char,expected", [
    (("lambda", (1, 2, 2, 2)), 2, 4),
    (("lambda", (1, 2, 2, 2)), 3, 3),
    (("gamma", (1, 1, 1)), 2, 8),
    (("gamma", (1, 1, 1)), 0, 4),
    (("gamma", (1, 2, 1)), 2, 5),
    (("gamma", (1, 2, 1)), 0, 3),
    (("gamma", (2, 2, 2)), 0, 3),
])
def test_hh1_examples(s, char, expected):
    kind, params = s
    assert hh.hh_dim(build(FamilySpec(kind, params, char)), 1) == expected


def test_hh1_one_vertex_gamma_verified_values():
    # inner derivations have codim dim A - dim Z; at r >= 2 this gives r+3
    # (characteristic not 2) resp. r+7, diverging from the published 2r+2
    for r, char, expected in [(2, 0, 5), (3, 0, 6), (2, 2, 9), (3, 2, 10),
                              (1, 0, 4), (1, 2, 8)]:
        s = spec("gamma", 1, 1, r, char=char)
        assert hh.hh_dim(build(s), 1) == expected == hh1_verified(s, char)


@pytest.mark.parametrize("pqr,char,deg,expected", [
    ((3, 3, 2), 0, 2, 2), ((3, 3, 2), 2, 2, 3),     # interior, n = 2 even
    ((3, 4, 2), 3, 4, 3),                            # top degree, verified
    ((3, 4, 1), 2, 4, 3),
])
def test_higher_hh_values(pqr, char, deg, expected):
    s = spec("gamma", *pqr, char=char)
    assert hh.hh_dim(build(s), deg) == expected == higher_hh_verified(s, deg, char)


def test_unsupported_degrees():
    with pytest.raises(UnsupportedDegree):
        hh.hh_dim(build(spec("lambda", 1, 1, 2, 2)), 2)
    with pytest.raises(UnsupportedDegree):
        hh.hh_dim(build(spec("gamma", 1, 2, 1)), 2)
    with pytest.raises(UnsupportedDegree):
        hh.hh_dim(build(spec("gamma", 2, 2, 1)), 3)  # beyond 2p-2


def test_hh_table():
    A = build(spec("gamma", 3, 3, 1))
    table = hh.hh_table(A, 4)
    assert set(table) == {0, 1, 2, 3, 4}
    assert table[0] == 6 and table[1] == 2
