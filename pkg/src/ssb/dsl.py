"""Text format for presentations, plus JSON and DOT emitters.

Grammar (line-oriented, '#' starts a comment):

    algebra { char = <0|prime>
      vertices = [v1, v2, ...]
      arrows = [ name: v -> w, ... ]
      relations = [ <term> (('+'|'-') <term>)*, ... ]   # term := [coeff '*'] arrow ('*' arrow)*
    }

Paths multiply left to right.  Coefficients are integers or fractions a/b.
Family strings gamma(p,q,r) / lambda(p,q,s,t) / nakayama(n,m) are accepted
anywhere a file is.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ParseError, ValidationError
from .quiver import Arrow, Presentation, Quiver
from .scalars import is_prime


class _Tokens:
    PUNCT = ("->", "{", "}", "=", "[", "]", ",", ":", "+", "-", "*")

    def __init__(self, text):
        self.items = []           # (token, line, col)
        for ln, line in enumerate(text.splitlines(), start=1):
            line = line.split("#", 1)[0]
            col = 0
            while col < len(line):
                ch = line[col]
                if ch.isspace():
                    col += 1
                    continue
                if line.startswith("->", col):
                    self.items.append(("->", ln, col + 1))
                    col += 2
                    continue
                if ch in "{}=[],:+-*":
                    self.items.append((ch, ln, col + 1))
                    col += 1
                    continue
                if ch.isalnum() or ch == "_":
                    end = col
                    while end < len(line) and (line[end].isalnum()
                                               or line[end] in "_/"):
                        end += 1
                    self.items.append((line[col:end], ln, col + 1))
                    col = end
                    continue
                raise ParseError(f"unexpected character {ch!r}", ln, col + 1)
        self.pos = 0

    def peek(self):
        if self.pos < len(self.items):
            return self.items[self.pos][0]
        return None

    def where(self):
        if self.pos < len(self.items):
            _, ln, col = self.items[self.pos]
            return ln, col
        if self.items:
            _, ln, col = self.items[-1]
            return ln, col
        return 1, 1

    def take(self, expected=None):
        if self.pos >= len(self.items):
            ln, col = self.where()
            raise ParseError(f"unexpected end of input (wanted {expected!r})",
                             ln, col)
        tok, ln, col = self.items[self.pos]
        if expected is not None and tok != expected:
            raise ParseError(f"expected {expected!r}, found {tok!r}", ln, col)
        self.pos += 1
        return tok


def parse_presentation(text) -> Presentation:
    toks = _Tokens(text)
    toks.take("algebra")
    toks.take("{")
    char = None
    vertex_names = None
    arrows = []
    arrow_index = {}
    relations = []

    def vertex_id(name):
        if name not in vertex_ids:
            ln, col = toks.where()
            raise ParseError(f"unknown vertex {name!r}", ln, col)
        return vertex_ids[name]

    vertex_ids = {}
    while toks.peek() != "}":
        key = toks.take()
        toks.take("=")
        if key == "char":
            ln, col = toks.where()
            val = toks.take()
            if not val.isdigit():
                raise ParseError(f"char must be a number, got {val!r}", ln, col)
            char = int(val)
            if char != 0 and not is_prime(char):
                raise ParseError(f"char must be 0 or prime, got {char}",
                                 ln, col)
        elif key == "vertices":
            toks.take("[")
            vertex_names = []
            while toks.peek() != "]":
                name = toks.take()
                if name in vertex_ids:
                    ln, col = toks.where()
                    raise ParseError(f"duplicate vertex {name!r}", ln, col)
                vertex_ids[name] = len(vertex_names) + 1
                vertex_names.append(name)
                if toks.peek() == ",":
                    toks.take(",")
            toks.take("]")
        elif key == "arrows":
            toks.take("[")
            while toks.peek() != "]":
                name = toks.take()
                if name in arrow_index:
                    ln, col = toks.where()
                    raise ParseError(f"duplicate arrow {name!r}", ln, col)
                toks.take(":")
                src = vertex_id(toks.take())
                toks.take("->")
                tgt = vertex_id(toks.take())
                arrow_index[name] = len(arrows)
                arrows.append(Arrow(name, src, tgt))
                if toks.peek() == ",":
                    toks.take(",")
            toks.take("]")
        elif key == "relations":
            toks.take("[")
            while toks.peek() != "]":
                relations.append(_parse_relation(toks, arrow_index))
                if toks.peek() == ",":
                    toks.take(",")
            toks.take("]")
        else:
            ln, col = toks.where()
            raise ParseError(f"unknown section {key!r}", ln, col)
    toks.take("}")
    if char is None:
        raise ParseError("missing 'char =' line")
    if vertex_names is None:
        raise ParseError("missing 'vertices =' line")
    quiver = Quiver(tuple(range(1, len(vertex_names) + 1)), tuple(arrows))
    pres = Presentation(quiver, tuple(relations), char,
                        {"vertex_names": tuple(vertex_names)})
    pres.validate()
    return pres


def _parse_relation(toks, arrow_index):
    terms = []
    sign = 1
    while True:
        coeff, word = _parse_term(toks, arrow_index)
        terms.append((Fraction(sign) * coeff, word))
        nxt = toks.peek()
        if nxt == "+":
            toks.take("+")
            sign = 1
        elif nxt == "-":
            toks.take("-")
            sign = -1
        else:
            return tuple(terms)


def _parse_term(toks, arrow_index):
    ln, col = toks.where()
    tok = toks.take()
    coeff = Fraction(1)
    factors = []
    if _is_number(tok):
        coeff = _as_fraction(tok, ln, col)
    else:
        factors.append(_as_arrow(tok, arrow_index, ln, col))
    while toks.peek() == "*":
        toks.take("*")
        ln, col = toks.where()
        tok = toks.take()
        factors.append(_as_arrow(tok, arrow_index, ln, col))
    if not factors:
        raise ParseError("term has no arrows", ln, col)
    return coeff, tuple(factors)


def _is_number(tok):
    return tok[0].isdigit()


def _as_fraction(tok, ln, col):
    try:
        if "/" in tok:
            num, den = tok.split("/")
            return Fraction(int(num), int(den))
        return Fraction(int(tok))
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad coefficient {tok!r}", ln, col)


def _as_arrow(tok, arrow_index, ln, col):
    if tok not in arrow_index:
        raise ParseError(f"unknown arrow {tok!r}", ln, col)
    return arrow_index[tok]


# ---------------------------------------------------------------------------
# emitters
# ---------------------------------------------------------------------------

def emit_presentation(pres: Presentation) -> str:
    names = pres.meta.get("vertex_names")
    if names is None:
        names = tuple(str(v) for v in pres.quiver.vertices)
    vname = {v: names[k] for k, v in enumerate(pres.quiver.vertices)}
    lines = ["algebra {", f"  char = {pres.char}"]
    lines.append("  vertices = [" + ", ".join(names) + "]")
    parts = [f"{a.name}: {vname[a.source]} -> {vname[a.target]}"
             for a in pres.quiver.arrows]
    lines.append("  arrows = [ " + ", ".join(parts) + " ]")
    rels = []
    for rel in pres.relations:
        chunks = []
        for k, (coeff, word) in enumerate(rel):
            mag = abs(coeff)
            body = "*".join(pres.quiver.arrows[ai].name for ai in word)
            if mag != 1:
                body = f"{mag}*{body}"
            if k == 0:
                chunks.append(body if coeff > 0 else f"-{body}")
            else:
                chunks.append(("+ " if coeff > 0 else "- ") + body)
        rels.append(" ".join(chunks))
    lines.append("  relations = [ " + ", ".join(rels) + " ]")
    lines.append("}")
    return "\n".join(lines) + "\n"


def emit_dot(quiver: Quiver, name="quiver") -> str:
    lines = [f"digraph {name} {{"]
    for v in quiver.vertices:
        lines.append(f'  "{v}";')
    for a in quiver.arrows:
        lines.append(f'  "{a.source}" -> "{a.target}" [label="{a.name}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def load_source(text_or_path, char=None):
    """A family string or a presentation-document path -> Presentation.

    For family strings the characteristic defaults to 0 unless given; for
    documents the characteristic comes from the file (passing one is an
    error if it conflicts).
    """
    from . import families

    if families.looks_like_family(text_or_path):
        spec = families.parse_family(text_or_path, 0 if char is None else char)
        return families.presentation(spec)
    with open(text_or_path, "r", encoding="utf-8") as fh:
        text = fh.read()
    pres = parse_presentation(text)
    if char is not None and char != pres.char:
        raise ValidationError(
            f"--char {char} conflicts with the document's char {pres.char}")
    return pres
