"""Noncommutative rewriting on path words, with critical-pair completion.

A rule rewrites its leading word to a scalar combination of smaller words.
Orientation is by degree-lexicographic comparison (length first, then the
arrow-declaration order), except that a constructor may pin the leading word
of specific relations.  Completion resolves all overlap and containment
ambiguities; a system that completes is locally confluent, and together with
terminating reduction this makes normal forms well defined, hence the
reduced-word multiplication associative.
"""

from __future__ import annotations

from .errors import NonConfluent

REDUCTION_STEP_LIMIT = 500_000
MAX_RULES = 2000


def deglex_key(word):
    return (len(word), word)


class RewriteSystem:
    def __init__(self, field):
        self.field = field
        self.rules = []            # list of (lhs_word, {word: scalar})
        self._nf_cache = {}
        self._by_first = None      # lazy index: first arrow -> [rule index]

    def _first_index(self):
        if self._by_first is None:
            idx = {}
            for ri, (lhs, _) in enumerate(self.rules):
                idx.setdefault(lhs[0], []).append(ri)
            self._by_first = idx
        return self._by_first

    # ---------- construction ----------

    def add_relation(self, terms, lead_hint=None):
        """Orient a relation {word: scalar} into a rule and store it.

        The relation is first reduced modulo the rules already present, so
        leading words are always irreducible and never collide.
        """
        f = self.field
        terms = self.reduce_element(terms)
        if not terms:
            return
        if lead_hint is not None and lead_hint in terms:
            lead = lead_hint
        else:
            lead = max(terms, key=deglex_key)
        c = terms.pop(lead)
        cinv = f.neg(f.inv(c))
        rhs = {w: f.mul(cinv, v) for w, v in terms.items()}
        self.rules.append((lead, rhs))
        self._by_first = None
        self._nf_cache.clear()

    # ---------- reduction ----------

    def find_redex(self, word):
        """First (position, rule index) whose lhs occurs at that position."""
        n = len(word)
        index = self._first_index()
        for pos in range(n):
            candidates = index.get(word[pos])
            if not candidates:
                continue
            for ri in candidates:
                lhs = self.rules[ri][0]
                L = len(lhs)
                if pos + L <= n and word[pos:pos + L] == lhs:
                    return pos, ri
        return None

    def reduce_word(self, word):
        """Normal form of a word as {word: scalar}; deterministic."""
        cached = self._nf_cache.get(word)
        if cached is not None:
            return dict(cached)
        f = self.field
        result = {}
        work = [(word, f.one())]
        steps = 0
        while work:
            w, c = work.pop()
            hit = self._nf_cache.get(w)
            if hit is not None:
                for nw, nc in hit.items():
                    _acc(result, nw, f.mul(c, nc), f)
                continue
            redex = self.find_redex(w)
            if redex is None:
                _acc(result, w, c, f)
                continue
            pos, ri = redex
            lhs, rhs = self.rules[ri]
            pre, post = w[:pos], w[pos + len(lhs):]
            for mid, mc in rhs.items():
                work.append((pre + mid + post, f.mul(c, mc)))
            steps += 1
            if steps > REDUCTION_STEP_LIMIT:
                raise NonConfluent(
                    f"reduction of a word of length {len(word)} did not "
                    f"terminate within {REDUCTION_STEP_LIMIT} steps")
        self._nf_cache[word] = dict(result)
        return result

    def reduce_element(self, element):
        """Normal form of {word: scalar}."""
        f = self.field
        out = {}
        for w, c in element.items():
            if f.is_zero(c):
                continue
            for nw, nc in self.reduce_word(w).items():
                _acc(out, nw, f.mul(c, nc), f)
        return out

    def is_irreducible(self, word):
        return self.find_redex(word) is None

    # ---------- completion ----------

    def complete(self):
        """Knuth-Bendix style completion; raises NonConfluent on blow-up."""
        pending = [(i, j) for i in range(len(self.rules))
                   for j in range(len(self.rules))]
        while pending:
            i, j = pending.pop(0)
            if i >= len(self.rules) or j >= len(self.rules):
                continue
            for ambiguity in self._ambiguities(i, j):
                diff = self._resolve(ambiguity)
                if diff:
                    self.add_relation(diff)
                    new = len(self.rules) - 1
                    if new + 1 > MAX_RULES:
                        raise NonConfluent(
                            f"completion exceeded {MAX_RULES} rules")
                    pending.extend((new, k) for k in range(new + 1))
                    pending.extend((k, new) for k in range(new))
        self._interreduce()
        return self

    def _ambiguities(self, i, j):
        """Overlap/containment critical words for rules i (left) and j."""
        lhs1, rhs1 = self.rules[i]
        lhs2, rhs2 = self.rules[j]
        out = []
        f = self.field
        # suffix of lhs1 meets prefix of lhs2
        for k in range(1, min(len(lhs1), len(lhs2))):
            if lhs1[-k:] == lhs2[:k]:
                word = lhs1 + lhs2[k:]
                a = {lhs1[:len(lhs1) - k] + w: c for w, c in rhs2.items()}
                b = {w + lhs2[k:]: c for w, c in rhs1.items()}
                out.append((a, b))
        # lhs2 contained strictly inside lhs1
        if i != j and len(lhs2) < len(lhs1):
            for pos in range(len(lhs1) - len(lhs2) + 1):
                if lhs1[pos:pos + len(lhs2)] == lhs2:
                    pre, post = lhs1[:pos], lhs1[pos + len(lhs2):]
                    a = {pre + w + post: c for w, c in rhs2.items()}
                    out.append((a, dict(rhs1)))
        return out

    def _resolve(self, ambiguity):
        """Reduce both sides of a critical pair; nonzero difference or {}."""
        f = self.field
        a, b = ambiguity
        na = self.reduce_element(a)
        nb = self.reduce_element(b)
        for w, c in nb.items():
            _acc(na, w, f.neg(c), f)
        return na

    def _interreduce(self):
        """Drop rules whose lhs is reducible by another rule."""
        keep = []
        for idx, (lhs, rhs) in enumerate(self.rules):
            others = self.rules[:idx] + self.rules[idx + 1:]
            reducible = any(
                _occurs(olhs, lhs) for olhs, _ in others
                if deglex_key(olhs) <= deglex_key(lhs))
            if not reducible:
                keep.append((lhs, rhs))
        if len(keep) != len(self.rules):
            self.rules = keep
            self._by_first = None
            self._nf_cache.clear()
            # re-normalize right-hand sides against the reduced system
            self.rules = [(lhs, self.reduce_element(rhs)) for lhs, rhs in keep]
        self.rules.sort(key=lambda r: deglex_key(r[0]))
        self._by_first = None
        self._nf_cache.clear()


def _occurs(needle, hay):
    n, h = len(needle), len(hay)
    return any(hay[p:p + n] == needle for p in range(h - n + 1))


def _acc(acc, word, coeff, field):
    cur = acc.get(word)
    if cur is None:
        if not field.is_zero(coeff):
            acc[word] = coeff
    else:
        s = field.add(cur, coeff)
        if field.is_zero(s):
            del acc[word]
        else:
            acc[word] = s
