"""Quivers and presentations.

A path is written left to right: the word (a, b) means "first traverse arrow
a, then arrow b".  Words are tuples of arrow indices; a relation is a tuple
of (coefficient, word) pairs over parallel paths, with Fraction coefficients
kept characteristic-agnostic until an algebra is built.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

from .errors import NonAdmissible, ValidationError
from .scalars import is_prime


class Arrow(NamedTuple):
    name: str
    source: int
    target: int


@dataclass(frozen=True)
class Quiver:
    vertices: tuple
    arrows: tuple

    def out_arrows(self, v):
        return [i for i, a in enumerate(self.arrows) if a.source == v]

    def in_arrows(self, v):
        return [i for i, a in enumerate(self.arrows) if a.target == v]

    def is_connected(self):
        if not self.vertices:
            return False
        seen = {self.vertices[0]}
        frontier = [self.vertices[0]]
        adj = {v: set() for v in self.vertices}
        for a in self.arrows:
            adj[a.source].add(a.target)
            adj[a.target].add(a.source)
        while frontier:
            v = frontier.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    frontier.append(w)
        return len(seen) == len(self.vertices)

    def word_source(self, word):
        return self.arrows[word[0]].source

    def word_target(self, word):
        return self.arrows[word[-1]].target

    def word_is_path(self, word):
        for x, y in zip(word, word[1:]):
            if self.arrows[x].target != self.arrows[y].source:
                return False
        return True

    def arrow_index(self, name):
        for i, a in enumerate(self.arrows):
            if a.name == name:
                return i
        raise KeyError(name)


@dataclass(frozen=True)
class Presentation:
    quiver: Quiver
    relations: tuple          # tuple of relations; each a tuple of (Fraction, word)
    char: int
    meta: dict = field(default_factory=dict, compare=False)

    def validate(self):
        q = self.quiver
        if self.char != 0 and not is_prime(self.char):
            raise ValidationError(f"characteristic must be 0 or prime, got {self.char}")
        if not q.is_connected():
            raise ValidationError("quiver is not connected")
        vset = set(q.vertices)
        for a in q.arrows:
            if a.source not in vset or a.target not in vset:
                raise ValidationError(f"arrow {a.name} has a dangling endpoint")
        for rel in self.relations:
            if not rel:
                raise ValidationError("empty relation")
            endpoints = None
            for coeff, word in rel:
                if coeff == 0:
                    raise ValidationError("zero coefficient in relation")
                if len(word) < 2:
                    raise NonAdmissible(
                        "relation has a component of path-length < 2 "
                        "(ideal is not admissible)")
                if not q.word_is_path(word):
                    raise ValidationError("relation term is not a path")
                ends = (q.word_source(word), q.word_target(word))
                if endpoints is None:
                    endpoints = ends
                elif ends != endpoints:
                    raise ValidationError(
                        "relation mixes non-parallel paths "
                        f"({endpoints} vs {ends})")
        return self

    def max_relation_length(self):
        return max((len(w) for rel in self.relations for _, w in rel), default=0)


def relation(*terms):
    """Build a relation tuple from (coefficient, word) pairs."""
    return tuple((Fraction(c), tuple(w)) for c, w in terms)
