"""Invariants of a built algebra: Cartan data, centre, socle, the
socle-indicator symmetrizing form, commutator subspace, power-map ideals and
their orthogonals, and radical profiles of centre quotients.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CharZero, NotAnIdeal, NotSymmetric
from .linalg import EchelonSpan, det_int, nullspace, rank, smith_normal_form


# ---------------------------------------------------------------------------
# subspaces
# ---------------------------------------------------------------------------

class Subspace:
    """A subspace of an algebra, held as spanning elements + echelon rows."""

    def __init__(self, algebra, elements):
        self.algebra = algebra
        self.elements = list(elements)
        self.span = EchelonSpan(algebra.field, algebra.dim)
        for el in self.elements:
            self.span.add(algebra.to_vector(el))

    @property
    def dim(self):
        return self.span.dim

    def contains(self, element):
        return self.span.contains(self.algebra.to_vector(element))

    def contains_subspace(self, other):
        return all(self.contains(el) for el in other.elements)

    def reduced_elements(self):
        return [self.algebra.from_vector(row) for row in self.span.rows]


# ---------------------------------------------------------------------------
# Cartan data
# ---------------------------------------------------------------------------

def cartan_matrix(alg):
    vs = alg.quiver.vertices
    return [[alg.cartan_entry(i, j) for j in vs] for i in vs]


def cartan_invariants(alg):
    return smith_normal_form(cartan_matrix(alg))


def cartan_determinant(alg):
    return det_int(cartan_matrix(alg))


# ---------------------------------------------------------------------------
# centre
# ---------------------------------------------------------------------------

def centre(alg) -> Subspace:
    """Z(A) as the kernel of x -> x*g - g*x over the arrows, solved on the
    vertex-diagonal part (commuting with the idempotents already confines a
    central element there)."""
    f = alg.field
    diag = [p for p in alg.basis
            if p[0] == (alg.quiver.arrows[p[1][-1]].target if p[1] else p[0])]
    cols = len(diag)
    rows = []
    for ai in range(len(alg.quiver.arrows)):
        a_el = alg.arrow_element(ai)
        images = []
        for p in diag:
            x = {p: f.one()}
            comm = alg.sub(alg.multiply(x, a_el), alg.multiply(a_el, x))
            images.append(alg.to_vector(comm))
        for coord in range(alg.dim):
            row = [images[c][coord] for c in range(cols)]
            if any(not f.is_zero(v) for v in row):
                rows.append(row)
    elements = []
    for vec in nullspace(rows, f, ncols=cols):
        el = {}
        for c, coeff in enumerate(vec):
            if not f.is_zero(coeff):
                el[diag[c]] = coeff
        elements.append(el)
    # put the identity first; it is always central
    one_vec = alg.one()
    ordered = [one_vec]
    span = EchelonSpan(f, alg.dim)
    span.add(alg.to_vector(one_vec))
    for el in elements:
        if span.add(alg.to_vector(el)):
            ordered.append(el)
    return Subspace(alg, ordered)


def centre_dim(alg):
    return centre(alg).dim


# ---------------------------------------------------------------------------
# socle and the symmetrizing form
# ---------------------------------------------------------------------------

def socle(alg) -> Subspace:
    vecs = alg.right_socle()
    return Subspace(alg, [alg.from_vector(v) for v in vecs])


@dataclass
class SymmetrizingForm:
    """The linear form equal to 1 on the chosen socle basis paths and 0 on
    the other basis paths, with symmetry and nondegeneracy verified."""

    algebra: object
    socle_paths: tuple

    def value(self, element):
        f = self.algebra.field
        total = f.zero()
        for p in self.socle_paths:
            c = element.get(p)
            if c is not None:
                total = f.add(total, c)
        return total

    def pairing(self, x, y):
        return self.value(self.algebra.multiply(x, y))

    def vector(self):
        f = self.algebra.field
        vec = [f.zero()] * self.algebra.dim
        for p in self.socle_paths:
            vec[self.algebra.index[p]] = f.one()
        return vec


def symmetrizing_form(alg) -> SymmetrizingForm:
    f = alg.field
    soc_vecs = alg.right_socle()
    span = EchelonSpan(f, alg.dim)
    for v in soc_vecs:
        span.add(v)
    socle_paths = []
    for row in span.rows:
        support = [i for i, c in enumerate(row) if not f.is_zero(c)]
        if len(support) != 1:
            raise NotSymmetric(
                "socle is not spanned by basis paths in this basis")
        socle_paths.append(alg.basis[support[0]])
    form = SymmetrizingForm(alg, tuple(socle_paths))

    # symmetry on all closing basis pairs
    vs = alg.quiver.vertices
    for i in vs:
        for j in vs:
            for b1 in alg.pair_basis(i, j):
                x = {b1: f.one()}
                for b2 in alg.pair_basis(j, i):
                    y = {b2: f.one()}
                    if not f.eq(form.pairing(x, y), form.pairing(y, x)):
                        raise NotSymmetric(
                            f"form is not symmetric on the pair {b1}, {b2}")

    # blockwise nondegeneracy of (x, y) -> f(xy)
    for i in vs:
        for j in vs:
            rows_b = alg.pair_basis(i, j)
            cols_b = alg.pair_basis(j, i)
            if len(rows_b) != len(cols_b):
                raise NotSymmetric(
                    f"pairing block ({i},{j}) is not square")
            if not rows_b:
                continue
            gram = [[form.pairing({b1: f.one()}, {b2: f.one()})
                     for b2 in cols_b] for b1 in rows_b]
            if rank(gram, f) != len(rows_b):
                raise NotSymmetric(
                    f"pairing block ({i},{j}) is degenerate")
    return form


# ---------------------------------------------------------------------------
# commutator subspace and power-map ideals
# ---------------------------------------------------------------------------

def _is_diagonal(alg, p):
    src, word = p
    tgt = alg.quiver.arrows[word[-1]].target if word else src
    return src == tgt


def commutator_subspace(alg) -> Subspace:
    """span{ xy - yx : x, y basis paths }.

    Every off-diagonal basis path b is e_(source) b - b e_(source), so the
    off-diagonal coordinate subspace is included wholesale; only closing
    pairs contribute genuinely diagonal combinations.
    """
    f = alg.field
    elements = [{p: f.one()} for p in alg.basis if not _is_diagonal(alg, p)]
    vs = alg.quiver.vertices
    seen = EchelonSpan(f, alg.dim)
    for el in elements:
        seen.add(alg.to_vector(el))
    extras = []
    for i in vs:
        for j in vs:
            for b1 in alg.pair_basis(i, j):
                x = {b1: f.one()}
                for b2 in alg.pair_basis(j, i):
                    y = {b2: f.one()}
                    d = alg.sub(alg.multiply(x, y), alg.multiply(y, x))
                    if d and seen.add(alg.to_vector(d)):
                        extras.append(d)
    return Subspace(alg, elements + extras)


def power_map_quotient(alg, kappa: Subspace):
    """Representative diagonal paths of A/kappa and the kappa echelon."""
    f = alg.field
    reps = []
    pivot_cols = set(kappa.span.pivots)
    for p in alg.basis:
        if alg.index[p] not in pivot_cols:
            reps.append(p)
    return reps


def t_space(alg, n: int) -> Subspace:
    """T_n(A) = {x : x^(char^n) lies in the commutator subspace}.

    The char-power map is additive modulo commutators, hence linear over the
    prime field on A/kappa; T_n is the preimage of its n-fold kernel.
    """
    ell = alg.field.char
    if ell == 0:
        raise CharZero("T_n is undefined in characteristic zero")
    f = alg.field
    kappa = commutator_subspace(alg)
    reps = power_map_quotient(alg, kappa)
    rep_index = {p: i for i, p in enumerate(reps)}

    def reduce_mod_kappa(element):
        vec = kappa.span.reduce(alg.to_vector(element))
        out = [f.zero()] * len(reps)
        for i, c in enumerate(vec):
            if not f.is_zero(c):
                out[rep_index[alg.basis[i]]] = c
        return out

    # matrix of x -> x^ell on A/kappa in the representative basis
    cols = []
    for p in reps:
        x = {p: f.one()}
        power = dict(x)
        for _ in range(ell - 1):
            power = alg.multiply(power, x)
        cols.append(reduce_mod_kappa(power))
    m = len(reps)
    mat1 = [[cols[c][r] for c in range(m)] for r in range(m)]
    mat = mat1
    for _ in range(n - 1):
        mat = [[_dot(f, mat[r], [mat1[k][c] for k in range(m)])
                for c in range(m)] for r in range(m)]
    lifts = []
    for vec in nullspace(mat, f, ncols=m):
        el = {}
        for c, coeff in enumerate(vec):
            if not f.is_zero(coeff):
                el[reps[c]] = coeff
        lifts.append(el)
    return Subspace(alg, kappa.elements + lifts)


def _dot(f, row, col):
    total = f.zero()
    for a, b in zip(row, col):
        total = f.add(total, f.mul(a, b))
    return total


def kulshammer_perp(alg, n: int) -> Subspace:
    """Orthogonal of T_n(A) under (x, y) -> f(xy); lands inside the centre.

    Commutators are automatically orthogonal to central elements under a
    symmetric form, so only the lifted kernel vectors of the power map give
    conditions; a dimension certificate guards the containment argument.
    """
    if alg.field.char == 0:
        raise CharZero("T_n is undefined in characteristic zero")
    f = alg.field
    form = symmetrizing_form(alg)
    T = t_space(alg, n)
    Z = centre(alg)
    zb = Z.elements
    rows = []
    for x in T.elements:
        row = [form.pairing(x, z) for z in zb]
        if any(not f.is_zero(c) for c in row):
            rows.append(row)
    elements = []
    for vec in nullspace(rows, f, ncols=len(zb)):
        el = {}
        for c, coeff in enumerate(vec):
            if not f.is_zero(coeff):
                el = alg.add(el, alg.scale(coeff, zb[c]))
        elements.append(el)
    perp = Subspace(alg, elements)
    # nondegeneracy certificate: dim T + dim T-perp must be dim A
    if T.dim + perp.dim != alg.dim:
        raise NotSymmetric(
            "orthogonal computed inside the centre has the wrong dimension; "
            "the form is degenerate or the centre containment failed")
    return perp


def radical_intersection(alg, sub: Subspace) -> Subspace:
    """Intersection of a subspace with the radical (positive-length span)."""
    f = alg.field
    triv = [alg.index[(v, ())] for v in alg.quiver.vertices]
    rows = []
    for coord in triv:
        row = [alg.to_vector(el)[coord] for el in sub.elements]
        rows.append(row)
    elements = []
    for vec in nullspace(rows, f, ncols=len(sub.elements)):
        el = {}
        for c, coeff in enumerate(vec):
            if not f.is_zero(coeff):
                el = alg.add(el, alg.scale(coeff, sub.elements[c]))
        elements.append(el)
    return Subspace(alg, elements)


def quotient_radical_profile(Z: Subspace, ideal: Subspace):
    """Dims of rad^k(Q)/rad^(k+1)(Q) for Q = Z/ideal, k >= 1.

    Z must be a commutative subalgebra containing 1 of a connected algebra
    (so Z is local and its radical is Z meet rad A); the ideal must be
    Z-stable.  Raises NotAnIdeal otherwise.
    """
    alg = Z.algebra
    f = alg.field
    if not Z.contains_subspace(ideal):
        raise NotAnIdeal("ideal is not contained in the subalgebra")
    for z in Z.elements:
        for x in ideal.elements:
            if not ideal.contains(alg.multiply(z, x)):
                raise NotAnIdeal("subspace is not stable under multiplication")
    radZ = radical_intersection(alg, Z)
    # an ideal not inside the radical contains a unit, so the quotient is 0
    if not radZ.contains_subspace(ideal):
        return []
    profile = []
    current = radZ.elements
    prev = Subspace(alg, current + ideal.elements).dim
    while True:
        nxt = []
        for x in current:
            for y in radZ.elements:
                z = alg.multiply(x, y)
                if z:
                    nxt.append(z)
        cur_dim = Subspace(alg, nxt + ideal.elements).dim
        layer = prev - cur_dim
        if layer == 0:
            break
        profile.append(layer)
        current = nxt
        prev = cur_dim
    return profile
