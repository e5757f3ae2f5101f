"""Finite-dimensional algebras presented by quiver and relations.

build() completes the relations to a confluent rewriting system, enumerates
the irreducible words as a monomial basis, and exposes exact multiplication.
Elements are dicts mapping basis paths to scalars; a path is a pair
(source_vertex, word) so that trivial paths are representable.
"""

from __future__ import annotations

from .errors import NotFiniteDimensional
from .linalg import EchelonSpan
from .quiver import Presentation
from .rewrite import RewriteSystem
from .scalars import field_for_characteristic


def path_source(quiver, path):
    return path[0]


def path_target(quiver, path):
    src, word = path
    return quiver.arrows[word[-1]].target if word else src


class FiniteAlgebra:
    def __init__(self, presentation, field, rewriter, basis):
        self.presentation = presentation
        self.quiver = presentation.quiver
        self.field = field
        self.rewriter = rewriter
        self.basis = basis                      # list of (source, word), sorted
        self.index = {p: i for i, p in enumerate(basis)}
        self.dim = len(basis)
        self._by_pair = {}
        for p in basis:
            key = (path_source(self.quiver, p), path_target(self.quiver, p))
            self._by_pair.setdefault(key, []).append(p)

    # ---------- construction ----------

    @classmethod
    def build(cls, presentation: Presentation, len_bound=None):
        presentation.validate()
        field = field_for_characteristic(presentation.char)
        rw = RewriteSystem(field)
        hints = set(presentation.meta.get("lead_hints", ()))
        for rel in presentation.relations:
            terms = {}
            for coeff, word in rel:
                terms[word] = field.add(terms.get(word, field.zero()),
                                        field.from_fraction(coeff))
            hint = next((w for w in terms if w in hints), None)
            rw.add_relation(terms, lead_hint=hint)
        rw.complete()
        if len_bound is None:
            len_bound = max(4 * presentation.max_relation_length(), 16)
        basis = cls._closure(presentation.quiver, rw, len_bound)
        alg = cls(presentation, field, rw, basis)
        alg._sanity()
        return alg

    @staticmethod
    def _closure(quiver, rw, len_bound):
        basis = [(v, ()) for v in quiver.vertices]
        frontier = list(basis)
        out = {v: quiver.out_arrows(v) for v in quiver.vertices}
        while frontier:
            nxt = []
            for src, word in frontier:
                end = quiver.arrows[word[-1]].target if word else src
                for ai in out[end]:
                    w2 = word + (ai,)
                    # only suffixes ending at the new letter can be fresh redexes
                    if any(w2[-len(lhs):] == lhs for lhs, _ in rw.rules
                           if len(lhs) <= len(w2)):
                        continue
                    if len(w2) > len_bound:
                        raise NotFiniteDimensional(
                            f"path closure exceeded length bound {len_bound}")
                    nxt.append((src, w2))
            basis.extend(nxt)
            frontier = nxt
        basis.sort(key=lambda p: (len(p[1]), p[1], p[0]))
        return basis

    def _sanity(self):
        # identity law and Cartan bookkeeping
        one = self.one()
        for p in self.basis[: min(self.dim, 12)]:
            x = {p: self.field.one()}
            assert self.multiply(one, x) == x and self.multiply(x, one) == x
        assert sum(len(v) for v in self._by_pair.values()) == self.dim

    # ---------- element helpers ----------

    def zero(self):
        return {}

    def one(self):
        f = self.field
        return {(v, ()): f.one() for v in self.quiver.vertices}

    def idempotent(self, v):
        return {(v, ()): self.field.one()}

    def element_from_word(self, word, source=None):
        """The class of an arbitrary path word as an element."""
        if not word:
            if source is None:
                raise ValueError("trivial path needs a source vertex")
            return {(source, ()): self.field.one()}
        src = self.quiver.word_source(word)
        nf = self.rewriter.reduce_word(tuple(word))
        return {(src, w): c for w, c in nf.items()}

    def basis_path(self, i):
        return self.basis[i]

    def pair_basis(self, i, j):
        """Basis paths spanning e_i A e_j."""
        return self._by_pair.get((i, j), [])

    # ---------- multiplication ----------

    def multiply_paths(self, p1, p2):
        """Product of two basis paths as {path: scalar}."""
        q = self.quiver
        if path_target(q, p1) != path_source(q, p2):
            return {}
        src1, w1 = p1
        _, w2 = p2
        word = w1 + w2
        if not word:
            return {p1: self.field.one()}
        nf = self.rewriter.reduce_word(word)
        src = src1
        return {(src, w): c for w, c in nf.items()}

    def multiply(self, x, y):
        """Bilinear product of elements (dicts path -> scalar)."""
        f = self.field
        out = {}
        for p1, c1 in x.items():
            if f.is_zero(c1):
                continue
            for p2, c2 in y.items():
                if f.is_zero(c2):
                    continue
                c = f.mul(c1, c2)
                for p, cp in self.multiply_paths(p1, p2).items():
                    cur = out.get(p)
                    s = f.mul(c, cp) if cur is None else f.add(cur, f.mul(c, cp))
                    if f.is_zero(s):
                        out.pop(p, None)
                    else:
                        out[p] = s
        return out

    def scale(self, c, x):
        f = self.field
        if f.is_zero(c):
            return {}
        return {p: f.mul(c, v) for p, v in x.items()}

    def add(self, x, y):
        f = self.field
        out = dict(x)
        for p, c in y.items():
            cur = out.get(p)
            s = c if cur is None else f.add(cur, c)
            if f.is_zero(s):
                out.pop(p, None)
            else:
                out[p] = s
        return out

    def sub(self, x, y):
        return self.add(x, self.scale(self.field.neg(self.field.one()), y))

    def equal(self, x, y):
        return not self.sub(x, y)

    def to_vector(self, x):
        vec = [self.field.zero()] * self.dim
        for p, c in x.items():
            vec[self.index[p]] = c
        return vec

    def from_vector(self, vec):
        f = self.field
        return {self.basis[i]: c for i, c in enumerate(vec) if not f.is_zero(c)}

    # ---------- structural queries ----------

    def cartan_entry(self, i, j):
        return len(self.pair_basis(i, j))

    def arrow_element(self, ai):
        return self.element_from_word((ai,))

    def radical_basis(self):
        """Basis paths of positive length (the radical, ideal admissible)."""
        return [p for p in self.basis if p[1]]

    def right_socle(self):
        """Basis vectors of {x : x * a = 0 for every arrow a}."""
        from .linalg import nullspace
        f = self.field
        rows = []
        for ai in range(len(self.quiver.arrows)):
            a_el = self.arrow_element(ai)
            images = [self.to_vector(self.multiply({p: f.one()}, a_el))
                      for p in self.basis]
            for coord in range(self.dim):
                row = [images[b][coord] for b in range(self.dim)]
                if any(not f.is_zero(c) for c in row):
                    rows.append(row)
        return nullspace(rows, f, ncols=self.dim)

    def projective_radical_layers(self, v):
        """Dims of rad^k(e_v A)/rad^(k+1)(e_v A) for k = 0, 1, ...

        Layers use the right-module radical filtration e_v A . rad^k.
        """
        f = self.field
        arrows = [self.arrow_element(ai) for ai in range(len(self.quiver.arrows))]
        current = [{p: f.one()} for p in self.pair_basis_all_from(v)]
        dims = []
        prev_dim = len(current)
        while True:
            span = EchelonSpan(f, self.dim)
            nxt = []
            for x in current:
                for a in arrows:
                    y = self.multiply(x, a)
                    if y and span.add(self.to_vector(y)):
                        nxt.append(y)
            dims.append(prev_dim - span.dim)
            if span.dim == 0:
                break
            current = nxt
            prev_dim = span.dim
        return dims

    def pair_basis_all_from(self, v):
        return [p for p in self.basis if p[0] == v]

    def is_uniserial_projective(self, v):
        return all(d <= 1 for d in self.projective_radical_layers(v))

    def projective_structure(self):
        """Per-vertex report: uniserial flag and radical layer dims."""
        report = {}
        nonuniserial = 0
        for v in self.quiver.vertices:
            layers = self.projective_radical_layers(v)
            uni = all(d <= 1 for d in layers)
            if not uni:
                nonuniserial += 1
            report[v] = {"uniserial": uni, "radical_layer_dims": layers}
        return {"per_vertex": report, "nonuniserial_count": nonuniserial}

    # ---------- verification ----------

    def verify_associativity(self, sample=None, seed=0):
        """(x*y)*z == x*(y*z) on basis triples.

        sample=None checks all dim^3 triples (use on small algebras only);
        otherwise `sample` random triples are drawn deterministically.
        """
        f = self.field
        singles = [{p: f.one()} for p in self.basis]
        if sample is None:
            triples = ((x, y, z) for x in singles for y in singles for z in singles)
        else:
            import random
            rng = random.Random(seed)
            triples = ((rng.choice(singles), rng.choice(singles), rng.choice(singles))
                       for _ in range(sample))
        for x, y, z in triples:
            left = self.multiply(self.multiply(x, y), z)
            right = self.multiply(x, self.multiply(y, z))
            if left != right:
                return False
        return True
