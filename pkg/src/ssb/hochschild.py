"""Hochschild cohomology via projective bimodule resolutions.

A stage P^n is a direct sum of bimodules A e_i (x) e_j A, stored as a
summand list plus the differential to stage n-1 as a term table: each term
is (coefficient, left word, right word, target summand index).  A bimodule
hom P^n -> A is identified with a tuple of elements of e_i A e_j, one per
summand, which turns every cohomology computation into exact linear algebra.

Degrees 0 and 1 are available for any presentation (stage 2 is built from
the presentation's relations, so HH^1 is computed from a minimal generating
set whenever the input relations are one).  Higher degrees dispatch to the
dedicated two-cycle resolution in gamma_resolution.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ComplexCheckFailed, UnsupportedDegree
from .linalg import rank


@dataclass
class BimoduleStage:
    degree: int
    summands: list          # list of (i, j) vertex pairs
    labels: list            # parallel list of symbolic labels
    terms: list             # per summand: list of (sign:int, left, right, target)

    def summand_count(self):
        return len(self.summands)


def _generic_stage0(alg):
    vs = list(alg.quiver.vertices)
    return BimoduleStage(0, [(v, v) for v in vs], [("v", v) for v in vs],
                         [[] for _ in vs])


def _generic_stage1(alg):
    arrows = alg.quiver.arrows
    vs = list(alg.quiver.vertices)
    vindex = {v: k for k, v in enumerate(vs)}
    summands, labels, terms = [], [], []
    for ai, a in enumerate(arrows):
        summands.append((a.source, a.target))
        labels.append(("a", ai))
        terms.append([(1, (), (ai,), vindex[a.source]),
                      (-1, (ai,), (), vindex[a.target])])
    return BimoduleStage(1, summands, labels, terms)


def _generic_stage2(alg):
    q = alg.quiver
    summands, labels, terms = [], [], []
    for gi, rel in enumerate(alg.presentation.relations):
        word0 = rel[0][1]
        summands.append((q.word_source(word0), q.word_target(word0)))
        labels.append(("g", gi))
        tt = []
        for coeff, word in rel:
            for k in range(len(word)):
                tt.append((coeff, word[:k], word[k + 1:], word[k]))
        terms.append(tt)
    return BimoduleStage(2, summands, labels, terms)


def generic_stage(alg, n):
    if n == 0:
        return _generic_stage0(alg)
    if n == 1:
        return _generic_stage1(alg)
    if n == 2:
        return _generic_stage2(alg)
    raise UnsupportedDegree(
        f"stage {n} is only available for the two-cycle gamma family")


def stage(alg, n):
    """Stage of a minimal bimodule resolution.

    Dispatches to the explicit two-cycle resolution when the algebra is a
    gamma-family member with p > 1 (all degrees through 2p); otherwise the
    generic low-degree stages are used (n <= 2).
    """
    fam = alg.presentation.meta.get("family")
    if fam is not None and fam.kind == "gamma" and fam.params[0] > 1:
        from .gamma_resolution import gamma_stage
        return gamma_stage(alg, n)
    return generic_stage(alg, n)


# ---------------------------------------------------------------------------
# hom complexes
# ---------------------------------------------------------------------------

def hom_basis(alg, st: BimoduleStage):
    """Coordinates of Hom(P^n, A): per summand (i, j), a basis of e_i A e_j."""
    coords = []
    for s, (i, j) in enumerate(st.summands):
        for p in alg.pair_basis(i, j):
            coords.append((s, p))
    return coords


def hom_dim(alg, st: BimoduleStage):
    return sum(alg.cartan_entry(i, j) for i, j in st.summands)


def induced_matrix(alg, lower: BimoduleStage, upper: BimoduleStage):
    """Matrix of Hom(P^(n-1), A) -> Hom(P^n, A), phi -> phi . d^n.

    Rows are indexed by the upper hom coordinates, columns by the lower.
    """
    f = alg.field
    lower_coords = hom_basis(alg, lower)
    upper_coords = hom_basis(alg, upper)
    row_index = {}
    for r, (s, p) in enumerate(upper_coords):
        row_index[(s, p)] = r
    cols = []
    for (s_low, p) in lower_coords:
        x = {p: f.one()}
        col = [f.zero()] * len(upper_coords)
        for s_up, tt in enumerate(upper.terms):
            for sign, left, right, target in tt:
                if target != s_low:
                    continue
                lv = alg.element_from_word(left, source=upper.summands[s_up][0])
                rv = alg.element_from_word(right,
                                           source=upper.summands[s_up][1] if not right else None)
                val = alg.multiply(alg.multiply(lv, x), rv)
                if not val:
                    continue
                c = f.from_fraction(sign) if not isinstance(sign, int) else f.from_int(sign)
                for pp, vv in val.items():
                    r = row_index.get((s_up, pp))
                    if r is None:
                        continue
                    col[r] = f.add(col[r], f.mul(c, vv))
        cols.append(col)
    nrows = len(upper_coords)
    return [[cols[c][r] for c in range(len(cols))] for r in range(nrows)]


def verify_complex(alg, lower, upper):
    """d^(n-1) . d^n = 0, checked symbolically on each generator."""
    f = alg.field
    for s_up, tt in enumerate(upper.terms):
        acc = {}
        for sign, left, right, target in tt:
            c0 = f.from_fraction(sign) if not isinstance(sign, int) else f.from_int(sign)
            for sign2, left2, right2, target2 in lower.terms[target]:
                c1 = f.from_fraction(sign2) if not isinstance(sign2, int) else f.from_int(sign2)
                c = f.mul(c0, c1)
                lv = alg.element_from_word(
                    left + left2, source=upper.summands[s_up][0])
                rv = alg.element_from_word(
                    right2 + right, source=upper.summands[s_up][1])
                for pl, cl in lv.items():
                    for pr, cr in rv.items():
                        key = (target2, pl, pr)
                        cur = acc.get(key, f.zero())
                        cur = f.add(cur, f.mul(c, f.mul(cl, cr)))
                        if f.is_zero(cur):
                            acc.pop(key, None)
                        else:
                            acc[key] = cur
        if acc:
            raise ComplexCheckFailed(
                f"d.d != 0 out of stage {upper.degree} summand "
                f"{upper.labels[s_up]}: {len(acc)} residual terms")
    return True


# ---------------------------------------------------------------------------
# dimensions
# ---------------------------------------------------------------------------

def max_degree(alg):
    fam = alg.presentation.meta.get("family")
    if fam is not None and fam.kind == "gamma" and fam.params[0] > 1:
        return 2 * fam.params[0] - 2
    return 1


def hh_dim(alg, n):
    """dim HH^n(A) = dim ker(hom d^(n+1)) - rank(hom d^n)."""
    if n < 0:
        raise UnsupportedDegree("negative degree")
    if n > max_degree(alg):
        raise UnsupportedDegree(
            f"degree {n} exceeds the supported range (max {max_degree(alg)})")
    f = alg.field
    st_n = stage(alg, n)
    st_up = stage(alg, n + 1)
    mat_up = induced_matrix(alg, st_n, st_up)
    dim_n = hom_dim(alg, st_n)
    kernel = dim_n - rank(mat_up, f)
    if n == 0:
        return kernel
    st_down = stage(alg, n - 1)
    mat_down = induced_matrix(alg, st_down, st_n)
    return kernel - rank(mat_down, f)


def hh_table(alg, maxdeg):
    return {n: hh_dim(alg, n) for n in range(maxdeg + 1)}
