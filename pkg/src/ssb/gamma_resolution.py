"""The explicit minimal bimodule resolution of the two-cycle gamma family,
through homological degree 2p (p = length of the shorter cycle, p > 1).

Summands are tracked by symbolic labels: ('A', i) and ('B', j) for the
families indexed cyclically around the two cycles, ('E',) for the extra
(1,1) summand at even stages, ('v', v) at stage zero.  Terms of each
differential are (sign, left word, right word, target label); every term is
endpoint-checked against its target summand at construction time, and the
composite of consecutive differentials is verified to vanish.

The p = q corner is delicate: the (1,1) summand appears with multiplicity
two at stage 2p-1 (once in each cyclic family), and the b-side bullet for
('B', 1) degenerates; it is taken to be the mirror image of the a-side
formula, which the d.d = 0 and exactness gates confirm.
"""

from __future__ import annotations

from .errors import ExactnessFailure, UnsupportedDegree
from .families import CycleWords
from .hochschild import BimoduleStage, verify_complex
from .linalg import sparse_rank
from .scalars import PrimeField


def _sgn(k):
    return 1 if k % 2 == 0 else -1


class GammaResolution:
    def __init__(self, p, q, r):
        assert 2 <= p <= q
        self.p, self.q, self.r = p, q, r
        self.w = CycleWords(p, q)

    # ---------- vertex bookkeeping ----------

    def avert(self, i):
        return (i - 1) % self.p + 1

    def bvert(self, j):
        pos = (j - 1) % self.q + 1
        return 1 if pos == 1 else self.p + pos - 1

    def bidx(self, j):
        return (j - 1) % self.q + 1

    # ---------- summands ----------

    def summands(self, n):
        """List of (label, (row_vertex, col_vertex)) for stage n <= 2p."""
        p, q = self.p, self.q
        if n < 0 or n > 2 * p:
            raise UnsupportedDegree(f"stage {n} outside 0..{2 * p}")
        if n == 0:
            return [(("v", v), (v, v)) for v in range(1, p + q)]
        if n % 2 == 1:
            m = (n + 1) // 2
            out = [(("A", i), (self.avert(i), self.avert(i + m)))
                   for i in range(1, p + 1)]
            out += [(("B", j), (self.bvert(j), self.bvert(j + m)))
                    for j in range(1, q + 1)]
            return out
        m = n // 2
        if m < p:
            out = []
            for i in range(2, p + 1):
                col = i + m if i <= p - m else self.avert(i + m + 1)
                out.append((("A", i), (i, col)))
            for j in range(2, q + 1):
                col = self.bvert(j + m) if j <= q - m else self.bvert(j + m + 1)
                out.append((("B", j), (self.bvert(j), col)))
            out.append((("E",), (1, 1)))
            return out
        # stage 2p
        out = [(("A", i), (i, self.avert(i + 1))) for i in range(1, p + 1)]
        jlo = 1 if p == q else 2
        for j in range(jlo, q + 1):
            col = self.bvert(j + p) if j <= q - p else self.bvert(j + p + 1)
            out.append((("B", j), (self.bvert(j), col)))
        out.append((("E",), (1, 1)))
        return out

    # ---------- differentials ----------

    def terms(self, n):
        """Per-source-label term lists for d^n : P^n -> P^(n-1)."""
        if n % 2 == 1:
            return self._terms_odd((n + 1) // 2)
        if n // 2 < self.p:
            return self._terms_even(n // 2)
        return self._terms_top()

    def _terms_odd(self, m):
        p, q, r, w = self.p, self.q, self.r, self.w
        out = {}
        if m == 1:
            for i in range(1, p + 1):
                out[("A", i)] = [(1, (), w.a(i), ("v", self.avert(i))),
                                 (-1, w.a(i), (), ("v", self.avert(i + 1)))]
            for j in range(1, q + 1):
                out[("B", j)] = [(-1, (), w.b(j), ("v", self.bvert(j))),
                                 (1, w.b(j), (), ("v", self.bvert(j + 1)))]
            return out

        # a-side
        for i in range(2, p - m + 1):
            out[("A", i)] = [(1, (), w.a(i + m - 1), ("A", i)),
                             (-1, w.a(i), (), ("A", i + 1))]
        if m < p:
            i = p - m + 1
            tt = [(1, (), w.a(p), ("A", i))]
            for k in range(1, m):
                tt.append((_sgn(m) * _sgn(k * (m - 1)),
                           w.a_run(i, p - k),
                           w.a_run(m - k + 1, p) + w.delta + w.gd(r - 1),
                           ("A", p - k + 1)))
            tt.append((-1, w.a_run(i, p), (), ("E",)))
            out[("A", i)] = tt
        for i in range(max(2, p - m + 2), p + 1):
            # the top odd stage carries (-1)^i, not the generic (-1)^(i+p+1)
            g = _sgn(i + p + 1) if m < p else _sgn(i)
            s2 = _sgn((p - i) * (m - 1))
            tt = [(g, (), w.eta(i + m - p, r), ("A", i)),
                  (g * s2, w.a_run(i, p), w.a_run(1, m - p + i - 1), ("E",)),
                  (-g, w.eta(i, r), (), ("A", i))]
            for k in range(1, p - i + 1):
                tt.append((-g * _sgn(m) * s2 * _sgn(k * (m - 1)),
                           w.a_run(i, p - k),
                           w.a_run(m - k + 1, p) + w.delta + w.gd(r - 1)
                           + w.a_run(1, m - p + i - 1),
                           ("A", p - k + 1)))
            for k in range(p - i + 2, m):
                tt.append((g * _sgn(m) * s2 * _sgn(k * (m - 1)),
                           w.a_run(i, p) + w.dg(r - 1) + w.delta + w.a_run(1, p - k),
                           w.a_run(m - k + 1, m - p + i - 1),
                           ("A", p - k + 1)))
            out[("A", i)] = tt
        if m < p:
            G = _sgn(m - 1)
            tt = [(G, (), w.a_run(1, m), ("E",))]
            for k in range(1, m):
                tt.append((G * _sgn(m) * _sgn(k * (m - 1)),
                           w.delta + w.gd(r - 1) + w.a_run(1, p - k),
                           w.a_run(m - k + 1, m),
                           ("A", p - k + 1)))
            tt.append((G * _sgn(m), w.a(1), (), ("A", 2)))
            out[("A", 1)] = tt
        else:
            tt = [(1, (), w.gamma, ("E",))]
            for k in range(1, p):
                tt.append((-_sgn(k * (p - 1)),
                           w.a_run(1, p - k),
                           w.a_run(p - k + 1, p) + w.delta + w.gd(r - 1),
                           ("A", p - k + 1)))
            for k in range(1, p):
                tt.append((_sgn(p) * _sgn(k * (p - 1)),
                           w.delta + w.gd(r - 1) + w.a_run(1, p - k),
                           w.a_run(p - k + 1, p),
                           ("A", p - k + 1)))
            tt.append((_sgn(p), w.gamma, (), ("E",)))
            out[("A", 1)] = tt

        # b-side
        for j in range(2, q - m + 1):
            out[("B", j)] = [(-1, (), w.b(j + m - 1), ("B", j)),
                             (1, w.b(j), (), ("B", j + 1))]
        if q - m + 1 >= 2:
            j = q - m + 1
            tt = [(-1, (), w.b(q), ("B", j))]
            for k in range(1, m):
                tt.append((-_sgn(m) * _sgn(k * (m - 1)),
                           w.b_run(j, q - k),
                           w.b_run(m - k + 1, q) + w.gd(r - 1) + w.gamma,
                           ("B", q - k + 1)))
            tt.append((1, w.b_run(j, q), (), ("E",)))
            out[("B", j)] = tt
        for j in range(max(2, q - m + 2), q + 1):
            g = _sgn(j + q)
            s2 = _sgn((q - j) * (m - 1))
            tt = [(g, (), w.theta(j + m - q, r), ("B", j)),
                  (g * s2, w.b_run(j, q), w.b_run(1, m - q + j - 1), ("E",)),
                  (-g, w.theta(j, r), (), ("B", j))]
            for k in range(1, q - j + 1):
                tt.append((-g * _sgn(m) * s2 * _sgn(k * (m - 1)),
                           w.b_run(j, q - k),
                           w.b_run(m - k + 1, q) + w.gd(r - 1) + w.gamma
                           + w.b_run(1, m - q + j - 1),
                           ("B", q - k + 1)))
            for k in range(q - j + 2, m):
                tt.append((g * _sgn(m) * s2 * _sgn(k * (m - 1)),
                           w.b_run(j, q) + w.gamma + w.dg(r - 1) + w.b_run(1, q - k),
                           w.b_run(m - k + 1, m - q + j - 1),
                           ("B", q - k + 1)))
            out[("B", j)] = tt
        if m < p or p < q:
            G = _sgn(m)
            tt = [(G, (), w.b_run(1, m), ("E",))]
            for k in range(1, m):
                tt.append((G * _sgn(m) * _sgn(k * (m - 1)),
                           w.gd(r - 1) + w.gamma + w.b_run(1, q - k),
                           w.b_run(m - k + 1, m),
                           ("B", q - k + 1)))
            tt.append((G * _sgn(m), w.b(1), (), ("B", 2)))
            out[("B", 1)] = tt
        else:
            # p = q at the top odd stage: mirror of the ('A', 1) formula,
            # twisted by the parity carried on the b-side of stage 2p
            sigma = _sgn(p)
            tt = [(sigma, (), w.delta, ("E",))]
            for k in range(1, q):
                tt.append((sigma * -_sgn(k * (q - 1)),
                           w.b_run(1, q - k),
                           w.b_run(q - k + 1, q) + w.gamma + w.dg(r - 1),
                           ("B", q - k + 1)))
            for k in range(1, q):
                tt.append((sigma * _sgn(q) * _sgn(k * (q - 1)),
                           w.gamma + w.dg(r - 1) + w.b_run(1, q - k),
                           w.b_run(q - k + 1, q),
                           ("B", q - k + 1)))
            tt.append((sigma * _sgn(q), w.delta, (), ("E",)))
            out[("B", 1)] = tt
        return out

    def _terms_even(self, m):
        p, q, r, w = self.p, self.q, self.r, self.w
        out = {}
        for i in range(2, p - m + 1):
            tt = []
            for k in range(0, r + 1):
                tt.append((1, w.eta(i, k), w.eta(i + m, r - k), ("A", i)))
            for k in range(0, r):
                for l in range(0, p - i - m + 1):
                    tt.append((1,
                               w.eta(i, k) + w.a_run(i, i + l),
                               w.a_run(i + l + m + 1, p) + w.delta
                               + w.a_run(1, i + m - 1) + w.eta(i + m, r - k - 1),
                               ("A", i + l + 1)))
                for l in range(0, i - 1):
                    tt.append((1,
                               w.eta(i, k) + w.a_run(i, p) + w.delta + w.a_run(1, l),
                               w.a_run(l + m + 1, i + m - 1) + w.eta(i + m, r - k - 1),
                               ("A", l + 1)))
                for l in range(0, q - m + 1):
                    tt.append((_sgn(m),
                               w.eta(i, k) + w.a_run(i, p) + w.b_run(1, l),
                               w.b_run(l + m + 1, q) + w.a_run(1, i + m - 1)
                               + w.eta(i + m, r - k - 1),
                               ("B", l + 1)))
            out[("A", i)] = tt
        for i in range(max(2, p - m + 1), p + 1):
            out[("A", i)] = [(1, (), w.a(self.avert(i + m)), ("A", i)),
                             (-_sgn(m), w.a(i), (), ("A", self.avert(i + 1)))]
        tt = []
        for k in range(0, r):
            for l in range(0, p - m + 1):
                tt.append((1,
                           w.delta + w.gd(k) + w.a_run(1, l),
                           w.a_run(l + m + 1, p) + w.dg(r - k - 1),
                           ("A", l + 1)))
                tt.append((_sgn(m),
                           w.gd(k) + w.a_run(1, l),
                           w.a_run(l + m + 1, p) + w.dg(r - k - 1) + w.delta,
                           ("A", l + 1)))
            for l in range(0, q - m + 1):
                tt.append((1,
                           w.gamma + w.dg(k) + w.b_run(1, l),
                           w.b_run(l + m + 1, q) + w.gd(r - k - 1),
                           ("B", l + 1)))
                tt.append((_sgn(m),
                           w.dg(k) + w.b_run(1, l),
                           w.b_run(l + m + 1, q) + w.gd(r - k - 1) + w.gamma,
                           ("B", l + 1)))
        out[("E",)] = tt
        for j in range(2, q - m + 1):
            tt = []
            for k in range(0, r + 1):
                tt.append((1, w.theta(j, k), w.theta(j + m, r - k), ("B", j)))
            for k in range(0, r):
                for l in range(0, q - j - m + 1):
                    tt.append((1,
                               w.theta(j, k) + w.b_run(j, j + l),
                               w.b_run(j + l + m + 1, q) + w.gamma
                               + w.b_run(1, j + m - 1) + w.theta(j + m, r - k - 1),
                               ("B", j + l + 1)))
                for l in range(0, j - 1):
                    tt.append((1,
                               w.theta(j, k) + w.b_run(j, q) + w.gamma + w.b_run(1, l),
                               w.b_run(l + m + 1, j + m - 1) + w.theta(j + m, r - k - 1),
                               ("B", l + 1)))
                for l in range(0, p - m + 1):
                    tt.append((_sgn(m),
                               w.theta(j, k) + w.b_run(j, q) + w.a_run(1, l),
                               w.a_run(l + m + 1, p) + w.b_run(1, j + m - 1)
                               + w.theta(j + m, r - k - 1),
                               ("A", l + 1)))
            out[("B", j)] = tt
        for j in range(max(2, q - m + 1), q + 1):
            out[("B", j)] = [(1, (), w.b(self.bidx(j + m)), ("B", j)),
                             (-_sgn(m), w.b(j), (),
                              ("B", j + 1 if j < q else 1))]
        return out

    def _terms_top(self):
        p, q, r, w = self.p, self.q, self.r, self.w
        out = {}
        for i in range(1, p + 1):
            out[("A", i)] = [(1, (), w.a(i), ("A", i)),
                             (-_sgn(p), w.a(i), (), ("A", self.avert(i + 1)))]
        tt = []
        for k in range(0, r):
            tt.append((_sgn(p), w.delta + w.gd(k), w.dg(r - k - 1), ("A", 1)))
            tt.append((1, w.gd(k), w.dg(r - k - 1) + w.delta, ("A", 1)))
            for l in range(0, q - p + 1):
                tt.append((-1,
                           w.gamma + w.dg(k) + w.b_run(1, l),
                           w.b_run(l + p + 1, q) + w.gd(r - k - 1),
                           ("B", l + 1)))
                tt.append((-_sgn(p),
                           w.dg(k) + w.b_run(1, l),
                           w.b_run(l + p + 1, q) + w.gd(r - k - 1) + w.gamma,
                           ("B", l + 1)))
        out[("E",)] = tt
        jlo = 1 if p == q else 2
        for j in range(max(jlo, q - p + 1), q + 1):
            out[("B", j)] = [(1, (), w.b(self.bidx(j + p)), ("B", j)),
                             (-_sgn(p), w.b(j), (),
                              ("B", j + 1 if j < q else 1))]
        for j in range(2, q - p + 1):
            tt = []
            for k in range(0, r + 1):
                tt.append((1, w.theta(j, k), w.theta(j + p, r - k), ("B", j)))
            for k in range(0, r):
                for l in range(0, q - j - p + 1):
                    tt.append((1,
                               w.theta(j, k) + w.b_run(j, j + l),
                               w.b_run(j + l + p + 1, q) + w.gamma
                               + w.b_run(1, j + p - 1) + w.theta(j + p, r - k - 1),
                               ("B", j + l + 1)))
                for l in range(0, j - 1):
                    tt.append((1,
                               w.theta(j, k) + w.b_run(j, q) + w.gamma + w.b_run(1, l),
                               w.b_run(l + p + 1, j + p - 1) + w.theta(j + p, r - k - 1),
                               ("B", l + 1)))
                tt.append((-1,
                           w.theta(j, k) + w.b_run(j, q),
                           w.b_run(1, j + p - 1) + w.theta(j + p, r - k - 1),
                           ("A", 1)))
            out[("B", j)] = tt
        return out

    # ---------- assembled, endpoint-checked stages ----------

    def stage(self, quiver, n):
        summs = self.summands(n)
        labels = [lb for lb, _ in summs]
        pairs = [pr for _, pr in summs]
        if n == 0:
            return BimoduleStage(0, pairs, labels, [[] for _ in pairs])
        prev = self.summands(n - 1)
        prev_index = {lb: k for k, (lb, _) in enumerate(prev)}
        prev_pairs = [pr for _, pr in prev]
        all_terms = self.terms(n)
        table = []
        for lb, (i, j) in summs:
            tt = []
            for sign, left, right, tgt in all_terms[lb]:
                k = prev_index[tgt]
                ti, tj = prev_pairs[k]
                _check_path(quiver, left, i, ti, n, lb, tgt)
                _check_path(quiver, right, tj, j, n, lb, tgt)
                tt.append((sign, left, right, k))
            table.append(tt)
        return BimoduleStage(n, pairs, labels, table)


def _check_path(quiver, word, src, tgt, n, lb, target_label):
    if not word:
        if src != tgt:
            raise ExactnessFailure(
                f"stage {n} {lb}->{target_label}: trivial word typed {src}->{tgt}")
        return
    if not quiver.word_is_path(word):
        raise ExactnessFailure(
            f"stage {n} {lb}->{target_label}: word is not a path")
    if quiver.word_source(word) != src or quiver.word_target(word) != tgt:
        raise ExactnessFailure(
            f"stage {n} {lb}->{target_label}: word runs "
            f"{quiver.word_source(word)}->{quiver.word_target(word)}, "
            f"expected {src}->{tgt}")


# ---------------------------------------------------------------------------
# public entry points
# ---------------------------------------------------------------------------

def _resolution_for(alg):
    fam = alg.presentation.meta.get("family")
    if fam is None or fam.kind != "gamma" or fam.params[0] < 2:
        raise UnsupportedDegree(
            "explicit resolution stages exist only for the two-cycle gamma "
            "family with p > 1")
    p, q, r = fam.params
    return GammaResolution(p, q, r)


def gamma_stage(alg, n):
    cache = getattr(alg, "_gamma_stage_cache", None)
    if cache is None:
        cache = alg._gamma_stage_cache = {}
    if n not in cache:
        res = _resolution_for(alg)
        cache[n] = res.stage(alg.quiver, n)
    return cache[n]


def verify_gamma_complex(alg, up_to=None):
    """d.d = 0 for all consecutive stages up to the requested degree."""
    res = _resolution_for(alg)
    if up_to is None:
        up_to = 2 * res.p
    for n in range(2, up_to + 1):
        verify_complex(alg, gamma_stage(alg, n - 1), gamma_stage(alg, n))
    return True


def _semisimplified_matrix(alg, st, prev):
    """The induced map of right modules after killing left radicals.

    Columns are indexed by (summand s, basis path of e_{j_s} A); the map
    sends x to sum of c * v * x over the terms of d with trivial left word.
    """
    f = alg.field
    col_offsets = []
    total = 0
    for s, (i, j) in enumerate(st.summands):
        col_offsets.append(total)
        total += len(alg.pair_basis_all_from(j))
    row_offsets = []
    rtotal = 0
    row_pos = {}
    for s, (i, j) in enumerate(prev.summands):
        row_offsets.append(rtotal)
        for b in alg.pair_basis_all_from(j):
            row_pos[(s, b)] = rtotal
            rtotal += 1
    rows = [dict() for _ in range(rtotal)]
    col = 0
    for s, (i, j) in enumerate(st.summands):
        basis_j = alg.pair_basis_all_from(j)
        for b in basis_j:
            x = {b: f.one()}
            for sign, left, right, target in st.terms[s]:
                if left:
                    continue
                c = f.from_int(sign)
                rv = alg.element_from_word(
                    right, source=prev.summands[target][1] if not right else None)
                val = alg.multiply(rv, x)
                for pp, vv in val.items():
                    rr = row_pos.get((target, pp))
                    if rr is None:
                        continue
                    cur = rows[rr].get(col, f.zero())
                    cur = f.add(cur, f.mul(c, vv))
                    if f.is_zero(cur):
                        rows[rr].pop(col, None)
                    else:
                        rows[rr][col] = cur
            col += 1
    return rows, total, rtotal


def verify_resolution(alg, up_to=None):
    """Exactness and minimality of the resolution through degree up_to.

    After tensoring with the semisimple quotient on the left, the induced
    complex of right modules must be exact in degrees 1..up_to-1 with
    cokernel of rank = number of simples at degree 0, and every differential
    must land in the radical.  In characteristic zero the rank counts are
    certified modulo a large prime: d.d = 0 is checked exactly, so modular
    ranks summing to the full dimension force exactness over the rationals.
    """
    res = _resolution_for(alg)
    if up_to is None:
        up_to = 2 * res.p
    if up_to > 2 * res.p:
        raise UnsupportedDegree(f"resolution available through {2 * res.p}")
    verify_gamma_complex(alg, up_to)
    stages = [gamma_stage(alg, n) for n in range(up_to + 1)]
    for st in stages[1:]:
        for tt in st.terms:
            for sign, left, right, _ in tt:
                if not left and not right:
                    raise ExactnessFailure(
                        f"stage {st.degree} is not minimal: a term has two "
                        "trivial words")
    f = alg.field
    check_fields = [f] if f.char != 0 else [PrimeField(2147483647),
                                            PrimeField(2147483629)]
    dims = []
    mats = []
    for n in range(1, up_to + 1):
        rows, ncols, nrows = _semisimplified_matrix(alg, stages[n], stages[n - 1])
        mats.append(rows)
        dims.append((ncols, nrows))
    n_simples = len(alg.quiver.vertices)
    for cf in check_fields:
        ranks = []
        for rows in mats:
            if cf is f:
                ranks.append(sparse_rank(rows, cf))
            else:
                conv = [{c: cf.from_fraction(v) for c, v in row.items()}
                        for row in rows]
                ranks.append(sparse_rank(conv, cf))
        ok = True
        f0_dim = sum(len(alg.pair_basis_all_from(j))
                     for (_, j) in stages[0].summands)
        if f0_dim - ranks[0] != n_simples:
            ok = False
        for n in range(1, up_to):
            ncols_n = dims[n - 1][0]
            if ranks[n - 1] + ranks[n] != ncols_n:
                ok = False
        if ok:
            return True
    raise ExactnessFailure(
        f"induced right-module complex is not exact through degree {up_to}")
