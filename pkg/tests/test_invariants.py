import pytest

from ssb import invariants as inv
from ssb.errors import CharZero, NotAnIdeal
from ssb.families import (FamilySpec, build, cartan_det_formula,
                          cartan_invariants_formula, centre_dim_formula,
                          commutator_dim_formula)


def spec(kind, *params, char=0):
    return FamilySpec(kind, tuple(params), char)


def test_cartan_examples():
    assert inv.cartan_invariants(build(spec("gamma", 2, 3, 2))) == [1, 1, 1, 8]
    assert inv.cartan_determinant(build(spec("gamma", 2, 3, 2))) == 8
    assert inv.cartan_invariants(build(spec("gamma", 1, 2, 1))) == [2, 2]
    assert inv.cartan_invariants(build(spec("lambda", 2, 3, 2, 3))) == [1, 1, 1, 23]
    # odd-parity case: r(p+q-2) = 3 gives the 2, 2r tail
    assert inv.cartan_invariants(build(spec("gamma", 2, 3, 1))) == [1, 1, 2, 2]


def test_centre_examples():
    assert inv.centre(build(spec("lambda", 1, 2, 2, 3))).dim == 6
    assert inv.centre(build(spec("gamma", 1, 1, 1))).dim == 4
    assert inv.centre(build(spec("gamma", 2, 2, 2))).dim == 5


def test_centre_contains_one_and_socle():
    A = build(spec("gamma", 2, 2, 2))
    Z = inv.centre(A)
    assert Z.contains(A.one())
    for el in inv.socle(A).elements:
        assert Z.contains(el)


def test_centre_z_element():
    # z = sum of the mixed cycles is central
    A = build(spec("gamma", 2, 2, 2))
    from ssb.families import CycleWords
    w = CycleWords(2, 2)
    z = {}
    for i in (1, 2):
        z = A.add(z, A.element_from_word(w.eta(i)))
    for j in (1, 2):
        z = A.add(z, A.element_from_word(w.theta(j)))
    assert inv.centre(A).contains(z)


def test_symmetrizing_form_examples():
    A = build(spec("gamma", 1, 1, 1))
    form = inv.symmetrizing_form(A)
    ab = A.multiply(A.arrow_element(0), A.arrow_element(1))
    e1 = A.idempotent(1)
    assert form.value(ab) == A.field.one()
    assert form.value(e1) == A.field.zero()
    assert form.value(A.arrow_element(0)) == A.field.zero()

    B = build(spec("lambda", 1, 1, 2, 2))
    fb = inv.symmetrizing_form(B)
    asq = B.multiply(B.arrow_element(0), B.arrow_element(0))
    assert fb.value(asq) == B.field.one()

    C = build(spec("nakayama", 1, 1))
    fc = inv.symmetrizing_form(C)
    assert fc.value(C.arrow_element(0)) == C.field.one()
    assert fc.value(C.one()) == C.field.zero()


def test_form_vanishes_on_commutators():
    for s in [spec("gamma", 2, 2, 1), spec("lambda", 1, 2, 2, 2, char=3)]:
        A = build(s)
        form = inv.symmetrizing_form(A)
        f = A.field
        for b1 in A.basis:
            for b2 in A.basis:
                x, y = {b1: f.one()}, {b2: f.one()}
                comm = A.sub(A.multiply(x, y), A.multiply(y, x))
                assert f.is_zero(form.value(comm))


def test_commutator_dims():
    assert inv.commutator_subspace(build(spec("gamma", 2, 2, 1))).dim == 14
    assert inv.commutator_subspace(build(spec("gamma", 1, 1, 1))).dim == 0
    s = spec("gamma", 2, 3, 2)
    assert inv.commutator_subspace(build(s)).dim == commutator_dim_formula(s)


def test_commutator_contains_sampled_brackets():
    import random
    A = build(spec("lambda", 1, 3, 2, 2, char=2))
    kappa = inv.commutator_subspace(A)
    rng = random.Random(0)
    f = A.field
    for _ in range(50):
        x = {rng.choice(A.basis): f.one()}
        y = {rng.choice(A.basis): f.one()}
        assert kappa.contains(A.sub(A.multiply(x, y), A.multiply(y, x)))


def test_kulshammer_char_zero_refused():
    with pytest.raises(CharZero):
        inv.kulshammer_perp(build(spec("gamma", 2, 2, 3)), 1)


def test_kulshammer_gamma_223():
    A = build(spec("gamma", 2, 2, 3, char=2))
    assert inv.commutator_subspace(A).dim == 44
    perp = inv.kulshammer_perp(A, 1)
    # socle basis (3 paths) plus the single central power in range
    assert perp.dim == 4
    soc = inv.socle(A)
    Z = inv.centre(A)
    assert perp.contains_subspace(soc)
    assert Z.contains_subspace(perp)
    assert perp.dim < Z.dim
    assert inv.quotient_radical_profile(Z, perp)[0] == 1


@pytest.mark.parametrize("st,expected_first", [((2, 2), 1), ((2, 4), 1)])
def test_kulshammer_lambda_13(st, expected_first):
    # the (2,4) case: y^2 is identified with the short-cycle generator by
    # the orthogonal, so the first radical layer is 1, not 2
    A = build(spec("lambda", 1, 3, *st, char=2))
    perp = inv.kulshammer_perp(A, 1)
    Z = inv.centre(A)
    prof = inv.quotient_radical_profile(Z, perp)
    assert prof[0] == expected_first


def test_kulshammer_perp_basis_element_lambda_124():
    # alpha^(m/2) + y^(M/2) lies in the orthogonal for even exponents
    A = build(spec("lambda", 1, 3, 2, 4, char=2))
    perp = inv.kulshammer_perp(A, 1)
    from ssb.families import CycleWords
    w = CycleWords(1, 3)
    alpha = A.arrow_element(0)
    y = {}
    for j in (1, 2, 3):
        delta_j = w.b_run(j, 3) + w.b_run(1, j - 1)
        y = A.add(y, A.element_from_word(delta_j))
    el = A.add(alpha, A.multiply(y, y))
    assert perp.contains(el)


def test_t_space_stabilizes():
    A = build(spec("lambda", 1, 2, 2, 2, char=2))
    dims = [inv.t_space(A, n).dim for n in (1, 2, 3, 4)]
    assert dims[-1] == dims[-2]
    soc = inv.socle(A)
    perp_large = inv.kulshammer_perp(A, 4)
    assert perp_large.contains_subspace(soc)


def test_soc_perp_centre_chain_grid():
    for s in [spec("gamma", 2, 2, 1, char=2), spec("gamma", 1, 2, 2, char=3),
              spec("lambda", 2, 2, 2, 2, char=5), spec("nakayama", 2, 2, char=2)]:
        A = build(s)
        perp = inv.kulshammer_perp(A, 1)
        assert perp.contains_subspace(inv.socle(A))
        Z = inv.centre(A)
        assert Z.contains_subspace(perp)
        assert perp.dim < Z.dim


def test_quotient_radical_profile_rejects_non_ideal():
    A = build(spec("gamma", 2, 2, 1, char=2))
    Z = inv.centre(A)
    f = A.field
    bad = inv.Subspace(A, [A.arrow_element(0)])  # not inside Z
    with pytest.raises(NotAnIdeal):
        inv.quotient_radical_profile(Z, bad)


def test_centre_formula_sample_grid():
    for s in [spec("gamma", p, q, r, char=c)
              for (p, q, r) in [(1, 1, 3), (1, 3, 2), (2, 4, 3), (3, 3, 1)]
              for c in (0, 2, 5)]:
        assert inv.centre(build(s)).dim == centre_dim_formula(s)
    for s in [spec("lambda", *pr, char=c)
              for pr in [(1, 1, 3, 4), (2, 3, 1, 2), (4, 4, 2, 2)]
              for c in (0, 3)]:
        assert inv.centre(build(s)).dim == centre_dim_formula(s)


def test_cartan_formula_sample_grid():
    for s in [spec("gamma", 3, 4, 2), spec("gamma", 1, 4, 3),
              spec("lambda", 2, 4, 3, 1), spec("nakayama", 4, 3)]:
        A = build(s)
        assert inv.cartan_invariants(A) == cartan_invariants_formula(s)
        assert inv.cartan_determinant(A) == cartan_det_formula(s)


def test_soc_perp_centre_chain_positive_char_grid():
    from ssb.verify import grid_specs
    checked = 0
    for s in grid_specs(3, (2, 3, 5)):
        A = build(s)
        perp = inv.kulshammer_perp(A, 1)
        assert perp.contains_subspace(inv.socle(A)), s
        Z = inv.centre(A)
        assert Z.contains_subspace(perp), s
        assert perp.dim < Z.dim, s
        checked += 1
    assert checked > 150
