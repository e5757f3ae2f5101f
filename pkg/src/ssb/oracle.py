"""Brute-force cross-checks, independent of the rewriting engine.

brute_basis builds the quotient dimension by sparse linear closure in the
free path space; hh1_derivations computes outer derivations directly;
hh2_reduced_bar runs the reduced bar complex relative to the vertex span;
ext_multiplicities resolves simple right modules by syzygies.  Only the
exact linear algebra kernel is shared with the main engine.
"""

from __future__ import annotations

from .errors import NotFiniteDimensional, TooLarge
from .linalg import EchelonSpan, nullspace, rank, sparse_rank
from .scalars import field_for_characteristic

HH2_DIM_BOUND = 64


# ---------------------------------------------------------------------------
# independent path closure
# ---------------------------------------------------------------------------

def brute_basis(presentation, len_bound=None):
    """Dimension of the quotient by sparse linear closure in path space.

    Single-term relations are handled as a monomial filter (a word containing
    one as a subword lies in the ideal outright); the remaining relations are
    closed under one-arrow multiplications into a sparse echelon span over
    the monomial-free words.  The dimension is #(monomial-free words) minus
    the span rank once an entire word layer has died, with saturation run
    one maximal relation length past the cutoff to absorb inhomogeneous
    cancellations.  Returns (dimension, cutoff_length).
    """
    presentation.validate()
    q = presentation.quiver
    field = field_for_characteristic(presentation.char)
    maxrel = presentation.max_relation_length()
    if len_bound is None:
        len_bound = max(4 * maxrel, 16)

    monomials = []
    general = []
    for rel in presentation.relations:
        if len(rel) == 1:
            monomials.append(rel[0][1])
        else:
            general.append(rel)

    def dead(word):
        return any(word[k:k + len(m)] == m
                   for m in monomials
                   for k in range(len(word) - len(m) + 1))

    def dead_at_end(word):
        return any(word[-len(m):] == m for m in monomials
                   if len(m) <= len(word))

    def wtgt(w):
        return w[1] if w[0] == "v" else q.arrows[w[-1]].target

    def wsrc(w):
        return w[1] if w[0] == "v" else q.arrows[w[0]].source

    out_arrows = {v: q.out_arrows(v) for v in q.vertices}
    in_arrows = {v: q.in_arrows(v) for v in q.vertices}

    words_by_len = [[("v", v) for v in q.vertices]]

    def extend_words():
        nxt = []
        for w in words_by_len[-1]:
            for ai in out_arrows[wtgt(w)]:
                nw = (ai,) if w[0] == "v" else w + (ai,)
                if not dead_at_end(nw):
                    nxt.append(nw)
        words_by_len.append(nxt)

    span = {}  # lead word -> reduced row over monomial-free words

    def filter_row(row):
        return {w: c for w, c in row.items()
                if not field.is_zero(c) and not dead(w)}

    def reduce_row(row):
        row = dict(row)
        while row:
            lead = max(row, key=lambda w: (len(w), w))
            piv = span.get(lead)
            if piv is None:
                return row, lead
            c = field.div(row[lead], piv[lead])
            for w2, v2 in piv.items():
                nv = field.sub(row.get(w2, field.zero()), field.mul(c, v2))
                if field.is_zero(nv):
                    row.pop(w2, None)
                else:
                    row[w2] = nv
        return row, None

    def insert(row):
        row, lead = reduce_row(row)
        if lead is None:
            return None
        span[lead] = row
        return row

    def saturate(rows, cap):
        frontier = [r for r in (insert(row) for row in rows) if r is not None]
        while frontier:
            nxt = []
            for row in frontier:
                if max(len(w) for w in row) + 1 > cap:
                    continue
                some = next(iter(row))
                for ai in out_arrows[wtgt(some)]:
                    r2 = insert(filter_row(
                        {w + (ai,): c for w, c in row.items()}))
                    if r2:
                        nxt.append(r2)
                for ai in in_arrows[wsrc(some)]:
                    r2 = insert(filter_row(
                        {(ai,) + w: c for w, c in row.items()}))
                    if r2:
                        nxt.append(r2)
            frontier = nxt

    base_rows = []
    for rel in general:
        row = {}
        for coeff, word in rel:
            row[word] = field.add(row.get(word, field.zero()),
                                  field.from_fraction(coeff))
        base_rows.append(filter_row(row))

    L = maxrel
    while True:
        cap = L + maxrel
        while len(words_by_len) - 1 < cap:
            extend_words()
        span.clear()
        saturate(base_rows, cap)
        layer_dead = True
        for w in words_by_len[L]:
            residue, _ = reduce_row({w: field.one()})
            if residue:
                layer_dead = False
                break
        if layer_dead:
            total = sum(len(ws) for ws in words_by_len[: cap + 1])
            return total - len(span), L
        L += 1
        if L > len_bound:
            raise NotFiniteDimensional(
                f"brute closure still alive at length {len_bound}")


# ---------------------------------------------------------------------------
# derivations
# ---------------------------------------------------------------------------

def hh1_derivations(alg, dim_bound=60):
    """dim HH^1 as outer derivations vanishing on the idempotents."""
    if alg.dim > dim_bound:
        raise TooLarge(f"algebra dimension {alg.dim} exceeds {dim_bound}")
    f = alg.field
    q = alg.quiver
    slots = []
    for ai, a in enumerate(q.arrows):
        for p in alg.pair_basis(a.source, a.target):
            slots.append((ai, p))
    nslots = len(slots)
    slot_index = {sp: k for k, sp in enumerate(slots)}

    rows = []
    for rel in alg.presentation.relations:
        acc_cols = [dict() for _ in range(nslots)]
        for coeff, word in rel:
            c0 = f.from_fraction(coeff)
            for k, ai in enumerate(word):
                pre = alg.element_from_word(
                    word[:k], source=q.arrows[word[0]].source)
                post = alg.element_from_word(
                    word[k + 1:], source=q.arrows[word[-1]].target)
                a = q.arrows[ai]
                for p in alg.pair_basis(a.source, a.target):
                    x = {p: f.one()}
                    val = alg.multiply(alg.multiply(pre, x), post)
                    col = acc_cols[slot_index[(ai, p)]]
                    for pp, vv in val.items():
                        cur = f.add(col.get(pp, f.zero()), f.mul(c0, vv))
                        if f.is_zero(cur):
                            col.pop(pp, None)
                        else:
                            col[pp] = cur
        coords = set()
        for col in acc_cols:
            coords.update(col)
        for pp in coords:
            rows.append([acc_cols[k].get(pp, f.zero()) for k in range(nslots)])
    der_dim = nslots - rank(rows, f)

    inner_rows = []
    for p in alg.basis:
        src, word = p
        tgt = q.arrows[word[-1]].target if word else src
        if src != tgt:
            continue
        d = {p: f.one()}
        vec = [f.zero()] * nslots
        touched = False
        for ai in range(len(q.arrows)):
            ael = alg.arrow_element(ai)
            comm = alg.sub(alg.multiply(d, ael), alg.multiply(ael, d))
            for pp, vv in comm.items():
                vec[slot_index[(ai, pp)]] = vv
                touched = True
        if touched:
            inner_rows.append(vec)
    return der_dim - rank(inner_rows, f)


# ---------------------------------------------------------------------------
# reduced bar complex relative to the vertex span
# ---------------------------------------------------------------------------

def hh2_reduced_bar(alg, dim_bound=HH2_DIM_BOUND):
    """dim HH^2 from the reduced bar complex with radical tensor factors."""
    if alg.dim > dim_bound:
        raise TooLarge(f"algebra dimension {alg.dim} exceeds {dim_bound}")
    f = alg.field
    q = alg.quiver

    def p_src(p):
        return p[0]

    def p_tgt(p):
        return q.arrows[p[1][-1]].target if p[1] else p[0]

    radical = [p for p in alg.basis if p[1]]
    rad_by_src = {}
    rad_by_tgt = {}
    for p in radical:
        rad_by_src.setdefault(p_src(p), []).append(p)
        rad_by_tgt.setdefault(p_tgt(p), []).append(p)

    pair_prod = {}

    def prod(u, v):
        """Radical components of u*v for radical basis paths u, v."""
        key = (u, v)
        got = pair_prod.get(key)
        if got is None:
            got = [(p, c) for p, c in
                   alg.multiply({u: f.one()}, {v: f.one()}).items()]
            pair_prod[key] = got
        return got

    chains2 = [(u, v) for u in radical for v in rad_by_src.get(p_tgt(u), [])]
    chains3 = [(u, v, w) for (u, v) in chains2
               for w in rad_by_src.get(p_tgt(v), [])]

    def coords(chs):
        idx = {}
        for ch in chs:
            for b in alg.pair_basis(p_src(ch[0]), p_tgt(ch[-1])):
                idx[(ch, b)] = len(idx)
        return idx

    idx1 = coords([(u,) for u in radical])
    idx2 = coords(chains2)
    idx3 = coords(chains3)

    def assemble(rows, row_idx, ch_row, element, col, sign):
        for p, c in element.items():
            k = row_idx.get((ch_row, p))
            if k is None:
                continue
            cur = f.add(rows[k].get(col, f.zero()), f.mul(f.from_int(sign), c))
            if f.is_zero(cur):
                rows[k].pop(col, None)
            else:
                rows[k][col] = cur

    # d2 : C^2 -> C^3,  (df)(a,u,v) = a f(u,v) - f(au,v) + f(a,uv) - f(a,u) v
    rows3 = [dict() for _ in range(len(idx3))]
    for ((u, v), b), col in idx2.items():
        x = {b: f.one()}
        for a in rad_by_tgt.get(p_src(u), []):
            assemble(rows3, idx3, (a, u, v),
                     alg.multiply({a: f.one()}, x), col, 1)
        for w in rad_by_src.get(p_tgt(v), []):
            assemble(rows3, idx3, (u, v, w),
                     alg.multiply(x, {w: f.one()}), col, -1)
    for (a, u, v) in chains3:
        for p, c in prod(a, u):
            for b in alg.pair_basis(p_src(p), p_tgt(v)):
                col = idx2.get(((p, v), b))
                if col is not None:
                    assemble(rows3, idx3, (a, u, v),
                             {b: f.neg(c)}, col, 1)
        for p, c in prod(u, v):
            for b in alg.pair_basis(p_src(a), p_tgt(p)):
                col = idx2.get(((a, p), b))
                if col is not None:
                    assemble(rows3, idx3, (a, u, v), {b: c}, col, 1)
    rank2 = sparse_rank([row for row in rows3 if row], f)

    # d1 : C^1 -> C^2,  (df)(u,v) = u f(v) - f(uv) + f(u) v
    rows2 = [dict() for _ in range(len(idx2))]
    for ((u,), b), col in idx1.items():
        x = {b: f.one()}
        for a in rad_by_tgt.get(p_src(u), []):
            assemble(rows2, idx2, (a, u), alg.multiply({a: f.one()}, x), col, 1)
        for w in rad_by_src.get(p_tgt(u), []):
            assemble(rows2, idx2, (u, w), alg.multiply(x, {w: f.one()}), col, 1)
    for (u, v) in chains2:
        for p, c in prod(u, v):
            for b in alg.pair_basis(p_src(p), p_tgt(p)):
                col = idx1.get(((p,), b))
                if col is not None:
                    assemble(rows2, idx2, (u, v), {b: f.neg(c)}, col, 1)
    rank1 = sparse_rank([row for row in rows2 if row], f)
    return len(idx2) - rank2 - rank1


# ---------------------------------------------------------------------------
# Ext multiplicities by right-module syzygies
# ---------------------------------------------------------------------------

def ext_multiplicities(alg, i, nmax):
    """[{vertex: dim Ext^n(S_i, S_vertex)} for n = 0..nmax], from a minimal
    projective resolution of the simple right module at vertex i."""
    f = alg.field
    q = alg.quiver

    def proj_basis(verts):
        out = []
        for k, v in enumerate(verts):
            for p in alg.pair_basis_all_from(v):
                out.append((k, p))
        return out

    mults = [{i: 1}]
    verts = [i]
    kernel = [{0: {p: f.one()}} for p in alg.pair_basis_all_from(i) if p[1]]

    for _ in range(nmax):
        kb = proj_basis(verts)
        kb_index = {bp: t for t, bp in enumerate(kb)}

        def to_vec(x):
            vec = [f.zero()] * len(kb)
            for slot, el in x.items():
                for p, c in el.items():
                    vec[kb_index[(slot, p)]] = c
            return vec

        def mod_mult(x, a_el):
            out = {}
            for slot, el in x.items():
                y = alg.multiply(el, a_el)
                if y:
                    out[slot] = y
            return out

        span_K = EchelonSpan(f, len(kb))
        kernel_red = []
        for x in kernel:
            if span_K.add(to_vec(x)):
                kernel_red.append(x)
        span_Krad = EchelonSpan(f, len(kb))
        for x in kernel_red:
            for ai in range(len(q.arrows)):
                y = mod_mult(x, alg.arrow_element(ai))
                if y:
                    span_Krad.add(to_vec(y))

        new_gens = []
        new_mult = {}
        for w in q.vertices:
            ew = alg.idempotent(w)
            probe = EchelonSpan(f, len(kb))
            for row in span_Krad.rows:
                probe.add(list(row))
            for x in kernel_red:
                xw = mod_mult(x, ew)
                if xw and probe.add(to_vec(xw)):
                    new_gens.append((xw, w))
                    new_mult[w] = new_mult.get(w, 0) + 1
        mults.append(new_mult)

        cols = []
        col_tags = []
        for mslot, (g, w) in enumerate(new_gens):
            for p in alg.pair_basis_all_from(w):
                y = mod_mult(g, {p: f.one()})
                cols.append(to_vec(y))
                col_tags.append((mslot, p))
        mat = [[cols[c][r] for c in range(len(cols))] for r in range(len(kb))]
        kernel = []
        for kv in nullspace(mat, f, ncols=len(cols)):
            x = {}
            for cidx, coeff in enumerate(kv):
                if f.is_zero(coeff):
                    continue
                mslot, p = col_tags[cidx]
                x.setdefault(mslot, {})[p] = coeff
            kernel.append(x)
        verts = [w for _, w in new_gens]
    return mults
