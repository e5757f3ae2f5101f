"""Isomorphism, derived equivalence and stable equivalence of Morita type
between family members, decided from parameters with an evidence trail.

The decision procedure follows the classification: normal forms for the
equivalence classes, and for distinct normal forms a chain of equivalence
invariants evaluated on closed forms until one separates.  External facts
that the chain leans on (literature results not re-proved here) are kept in
a declarative table and surfaced on every verdict that uses them.  The
--audit path recomputes every claimed separator value from freshly built
algebras.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import CharUnsupported, InvalidParams, NoSquareRoot
from .families import (FamilySpec, GAMMA, LAMBDA, NAKAYAMA, build,
                       cartan_det_formula, centre_dim_formula, hh1_verified,
                       higher_hh_verified, simple_count)

CITED_FACTS = {
    "holm-dihedral": {
        "key": "holm-dihedral",
        "claim": "the dihedral-type algebras D(3A)_1^3 and D(3A)_2^{2,2} are "
                 "not derived equivalent; the two-cycle algebras gamma(2,2,3) "
                 "and lambda(2,2,2,2) are of those types",
        "source": "T. Holm, derived-equivalence classification of algebras "
                  "of dihedral, semidihedral and quaternion type",
    },
    "membrillo-hernandez-trees": {
        "key": "membrillo-hernandez-trees",
        "claim": "generalised Brauer tree algebras are derived equivalent iff "
                 "they have the same number of edges and the same multiset of "
                 "multiplicities; distinct members of the normal-form list "
                 "are therefore not derived equivalent",
        "source": "F. H. Membrillo-Hernandez, Brauer tree algebras and "
                  "derived equivalence",
    },
    "gabriel-riedtmann": {
        "key": "gabriel-riedtmann",
        "claim": "an algebra stably equivalent to a Brauer tree algebra is a "
                 "Brauer tree algebra of the same type",
        "source": "P. Gabriel, C. Riedtmann, group representations without "
                  "groups",
    },
    "pogorzaly": {
        "key": "pogorzaly",
        "claim": "the number of simple modules is invariant under stable "
                 "equivalence of Morita type for selfinjective special "
                 "biserial algebras",
        "source": "Z. Pogorzaly",
    },
    "liu-zhou-zimmermann": {
        "key": "liu-zhou-zimmermann",
        "claim": "the dimension of the centre is invariant under stable "
                 "equivalence of Morita type for indecomposable symmetric "
                 "algebras",
        "source": "Y. Liu, G. Zhou, A. Zimmermann",
    },
    "koenig-liu-zhou": {
        "key": "koenig-liu-zhou",
        "claim": "the stable centre and its power-map ideal quotients are "
                 "invariant under stable equivalence of Morita type for "
                 "symmetric algebras",
        "source": "S. Koenig, Y. Liu, G. Zhou",
    },
    "xi": {
        "key": "xi",
        "claim": "Hochschild cohomology dimensions in positive degrees and "
                 "the absolute Cartan determinant are invariant under stable "
                 "equivalence of Morita type",
        "source": "C. Xi",
    },
    "rickard-keller-vossieck": {
        "key": "rickard-keller-vossieck",
        "claim": "derived equivalent selfinjective algebras are stably "
                 "equivalent of Morita type",
        "source": "J. Rickard; B. Keller, D. Vossieck",
    },
    "zimmermann": {
        "key": "zimmermann",
        "claim": "the power-map ideal orthogonals are invariant under derived "
                 "equivalence of symmetric algebras",
        "source": "A. Zimmermann",
    },
}


@dataclass
class EquivalenceVerdict:
    relation: str                   # iso | derived | stable-morita
    result: str                     # equivalent | inequivalent
    evidence: dict
    cited_facts: list = field(default_factory=list)

    @property
    def equivalent(self):
        return self.result == "equivalent"

    def to_json(self):
        return {"relation": self.relation, "result": self.result,
                "evidence": self.evidence, "cited_facts": self.cited_facts}


# ---------------------------------------------------------------------------
# normal forms
# ---------------------------------------------------------------------------

def derived_normal_form(spec: FamilySpec) -> FamilySpec:
    """The unique representative of the derived-equivalence class."""
    spec = spec.canonical()
    if spec.kind == LAMBDA:
        p, q, s, t = spec.params
        lo, hi = min(s, t), max(s, t)
        if lo >= 2:
            return FamilySpec(LAMBDA, (1, p + q - 1, lo, hi), spec.char).canonical()
        return FamilySpec(NAKAYAMA, (p + q - 1, hi), spec.char).canonical()
    if spec.kind == GAMMA:
        p, q, r = spec.params
        if (p, q, r) == (1, 1, 1) and spec.char != 2:
            return FamilySpec(LAMBDA, (1, 1, 2, 2), spec.char).canonical()
        return spec
    return spec


stable_normal_form = derived_normal_form   # the two partitions coincide


# ---------------------------------------------------------------------------
# invariant chains
# ---------------------------------------------------------------------------

def _kulshammer_layer_formula(spec: FamilySpec):
    """First radical layer of Z/T_1-perp in characteristic 2, in the only
    configuration the classifier can reach (gamma with odd r, or lambda with
    both exponents even); computed honestly, so min(s,t)=2 gives 1."""
    spec = spec.canonical()
    if spec.kind == GAMMA:
        r = spec.params[2]
        return 1 if r >= 3 else 0
    if spec.kind == LAMBDA:
        s, t = spec.params[2], spec.params[3]
        return 1 if min(s, t) == 2 else 2
    return None


def _chain(x: FamilySpec, y: FamilySpec, char):
    """Ordered invariant evaluations; yields (name, value_x, value_y)."""
    yield "simple_count", simple_count(x), simple_count(y)
    yield "centre_dim", centre_dim_formula(x), centre_dim_formula(y)
    yield "hh1", hh1_verified(x, char), hh1_verified(y, char)
    yield "cartan_det", cartan_det_formula(x), cartan_det_formula(y)
    if x.kind == GAMMA and y.kind == GAMMA:
        deg = 2 * min(x.params[0], y.params[0]) - 2
        if deg >= 2:
            vx = higher_hh_verified(x, deg, char)
            vy = higher_hh_verified(y, deg, char)
            if vx is not None and vy is not None:
                yield f"hh{deg}", vx, vy
    kinds = {x.kind, y.kind}
    if kinds == {GAMMA, LAMBDA}:
        if char != 2:
            raise CharUnsupported(
                "the power-map ideal comparison is only reached in "
                "characteristic 2")
        yield ("kulshammer_rad_layer", _kulshammer_layer_formula(x),
               _kulshammer_layer_formula(y))


def _final_citations(x: FamilySpec, y: FamilySpec, relation):
    kinds = {x.kind, y.kind}
    if kinds == {GAMMA, LAMBDA} or kinds == {GAMMA}:
        facts = ["holm-dihedral"]
        if relation == "stable-morita":
            facts += ["koenig-liu-zhou", "liu-zhou-zimmermann"]
        else:
            facts += ["zimmermann"]
        return facts
    if relation == "stable-morita":
        return ["gabriel-riedtmann", "membrillo-hernandez-trees"]
    return ["membrillo-hernandez-trees"]


def _decide(x: FamilySpec, y: FamilySpec, char, relation):
    x = FamilySpec(x.kind, x.params, char).canonical()
    y = FamilySpec(y.kind, y.params, char).canonical()
    nx, ny = derived_normal_form(x), derived_normal_form(y)
    base_facts = (["rickard-keller-vossieck"]
                  if relation == "stable-morita" else [])
    if nx == ny:
        ev = {"normal_form": str(nx), "x": str(x), "y": str(y)}
        facts = list(base_facts)
        exceptional = (x.kind == GAMMA and nx.kind == LAMBDA) or \
                      (y.kind == GAMMA and ny.kind == LAMBDA)
        if exceptional:
            ev["witness"] = ("explicit isomorphism via the loop substitution "
                             "with a square root of -1")
        elif x != nx or y != ny:
            facts.append("membrillo-hernandez-trees")
        return EquivalenceVerdict(relation, "equivalent", ev,
                                  [CITED_FACTS[k] for k in dict.fromkeys(facts)])
    separator = None
    for name, vx, vy in _chain(x, y, char):
        if vx != vy:
            separator = {"separator": name, "x": str(x), "y": str(y),
                         "value_x": vx, "value_y": vy}
            break
    stable_extra = {
        "simple_count": ["pogorzaly"],
        "centre_dim": ["liu-zhou-zimmermann"],
        "hh1": ["xi"], "cartan_det": ["xi"],
        "kulshammer_rad_layer": ["koenig-liu-zhou"],
    }
    if separator is not None:
        facts = list(base_facts)
        if relation == "stable-morita":
            facts += stable_extra.get(separator["separator"],
                                      ["xi"])
        elif separator["separator"] == "kulshammer_rad_layer":
            facts += ["zimmermann"]
        return EquivalenceVerdict(relation, "inequivalent", separator,
                                  [CITED_FACTS[k] for k in dict.fromkeys(facts)])
    ev = {"x": str(x), "y": str(y),
          "note": "all computed invariants agree; separation rests on the "
                  "cited classification facts"}
    facts = base_facts + _final_citations(x, y, relation)
    return EquivalenceVerdict(relation, "inequivalent", ev,
                              [CITED_FACTS[k] for k in dict.fromkeys(facts)])


def _common_char(x, y, char):
    if char is not None:
        return char
    if x.char != y.char:
        raise InvalidParams(
            f"specs live over different characteristics ({x.char} vs {y.char})")
    return x.char


def derived_equivalent(x: FamilySpec, y: FamilySpec, char=None):
    return _decide(x, y, _common_char(x, y, char), "derived")


def stably_equivalent_morita(x: FamilySpec, y: FamilySpec, char=None):
    return _decide(x, y, _common_char(x, y, char), "stable-morita")


def isomorphic(x: FamilySpec, y: FamilySpec, char=None):
    """Isomorphism between family members (pairwise distinct up to the
    lambda(q,q;s,t)=lambda(q,q;t,s) identification and the one exceptional
    cross-family isomorphism away from characteristic 2)."""
    char = x.char if char is None else char
    x = FamilySpec(x.kind, x.params, char).canonical()
    y = FamilySpec(y.kind, y.params, char).canonical()
    if x == y:
        return EquivalenceVerdict("iso", "equivalent",
                                  {"canonical": str(x)})
    pair = {x, y}
    exceptional = {FamilySpec(GAMMA, (1, 1, 1), char),
                   FamilySpec(LAMBDA, (1, 1, 2, 2), char)}
    if pair == exceptional and char != 2:
        return EquivalenceVerdict(
            "iso", "equivalent",
            {"canonical": "gamma(1,1,1) ~ lambda(1,1,2,2)",
             "witness": "the loop substitution a -> a + i b, b -> a - i b "
                        "with i*i = -1"})
    verdict = _decide(x, y, char, "derived")
    if verdict.result == "equivalent":
        ev = {"x": str(x), "y": str(y),
              "note": "derived equivalent but distinct canonical "
                      "presentations; not isomorphic"}
    else:
        ev = dict(verdict.evidence)
    return EquivalenceVerdict("iso", "inequivalent", ev, verdict.cited_facts)


def classify(relation, x, y, char=None):
    if relation == "derived":
        return derived_equivalent(x, y, char)
    if relation == "stable":
        return stably_equivalent_morita(x, y, char)
    if relation == "iso":
        return isomorphic(x, y, char)
    raise InvalidParams(f"unknown relation {relation!r}")


# ---------------------------------------------------------------------------
# audit: recompute separators numerically
# ---------------------------------------------------------------------------

def audit_verdict(verdict: EquivalenceVerdict, x: FamilySpec, y: FamilySpec,
                  char=None):
    """Recompute a claimed separator from freshly built algebras.

    Returns a report dict; raises AssertionError on any mismatch between the
    claimed values and the recomputed ones.
    """
    from . import hochschild, invariants

    char = x.char if char is None else char
    ev = verdict.evidence
    if "separator" not in ev:
        return {"audited": False,
                "reason": "no computed separator (normal forms or cited facts)"}
    name = ev["separator"]
    out = {}
    for tag, spec in (("x", x), ("y", y)):
        spec = FamilySpec(spec.kind, spec.params, char).canonical()
        alg = build(spec)
        if name == "simple_count":
            val = len(alg.quiver.vertices)
        elif name == "centre_dim":
            val = invariants.centre(alg).dim
        elif name == "hh1":
            val = hochschild.hh_dim(alg, 1)
        elif name == "cartan_det":
            val = invariants.cartan_determinant(alg)
        elif name.startswith("hh"):
            val = hochschild.hh_dim(alg, int(name[2:]))
        elif name == "kulshammer_rad_layer":
            Z = invariants.centre(alg)
            perp = invariants.kulshammer_perp(alg, 1)
            profile = invariants.quotient_radical_profile(Z, perp)
            val = profile[0] if profile else 0
        else:
            raise AssertionError(f"unknown separator {name}")
        claimed = ev[f"value_{tag}"]
        assert val == claimed, (
            f"audit mismatch for {name} on {spec}: claimed {claimed}, "
            f"computed {val}")
        out[tag] = val
    assert out["x"] != out["y"], "audited separator does not separate"
    return {"audited": True, "separator": name, **out}


# ---------------------------------------------------------------------------
# the explicit exceptional isomorphism
# ---------------------------------------------------------------------------

def verify_explicit_iso(char):
    """Check the loop substitution a -> a + i b, b -> a - i b really is an
    isomorphism gamma(1,1,1) -> lambda(1,1,2,2) away from characteristic 2.

    Works over the prime field when -1 is a square there, otherwise over the
    quadratic extension.  Refuses in characteristic 2, where the map
    degenerates (both loops get the same image).
    """
    from .scalars import field_with_sqrt_minus_one

    if char == 2:
        raise NoSquareRoot(
            "characteristic 2: the substitution maps both loops to a + b")
    ext, i_val = field_with_sqrt_minus_one(char)
    target = build(FamilySpec(LAMBDA, (1, 1, 2, 2), char))
    f = target.field

    def lift(element):
        return {p: ext.from_base(c) for p, c in element.items()}

    def mul(xe, ye):
        out = {}
        for p1, c1 in xe.items():
            for p2, c2 in ye.items():
                for p, cp in target.multiply_paths(p1, p2).items():
                    c = ext.mul(ext.mul(c1, c2), ext.from_base(cp))
                    cur = ext.add(out.get(p, ext.zero()), c)
                    if ext.is_zero(cur):
                        out.pop(p, None)
                    else:
                        out[p] = cur
        return out

    a_el = lift(target.arrow_element(0))
    b_el = lift(target.arrow_element(1))
    phi_a = {p: c for p, c in a_el.items()}
    for p, c in b_el.items():
        phi_a[p] = ext.add(phi_a.get(p, ext.zero()), ext.mul(i_val, c))
    phi_b = {p: c for p, c in a_el.items()}
    for p, c in b_el.items():
        phi_b[p] = ext.sub(phi_b.get(p, ext.zero()), ext.mul(i_val, c))

    def is_zero(el):
        return all(ext.is_zero(c) for c in el.values())

    relations_hold = (is_zero(mul(phi_a, phi_a))
                      and is_zero(mul(phi_b, phi_b)))
    comm = mul(phi_a, phi_b)
    for p, c in mul(phi_b, phi_a).items():
        comm[p] = ext.sub(comm.get(p, ext.zero()), c)
    relations_hold = relations_hold and is_zero(comm)

    # the induced linear map on the 4-dimensional spaces is invertible
    source = build(FamilySpec(GAMMA, (1, 1, 1), char))
    images = [lift(target.one()), phi_a, phi_b, mul(phi_a, phi_b)]
    cols = []
    for img in images:
        col = []
        for p in target.basis:
            col.append(img.get(p, ext.zero()))
        cols.append(col)
    from .linalg import rank
    mat = [[cols[c][r] for c in range(4)] for r in range(target.dim)]
    invertible = rank(mat, ext) == source.dim
    if not (relations_hold and invertible):
        raise AssertionError(
            "explicit isomorphism verification failed "
            f"(relations_hold={relations_hold}, invertible={invertible})")
    return {"char": char, "relations_hold": True, "invertible": True,
            "extension_used": ext.__class__.__name__ == "ImaginaryExtension"}
