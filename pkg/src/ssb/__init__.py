"""Exact workbench for symmetric special biserial algebras with at most one
non-uniserial indecomposable projective: construction by quiver and
relations, invariants (Cartan data, centre, power-map ideals, Hochschild
cohomology via explicit bimodule resolutions), and classification up to
derived and stable equivalence of Morita type.
"""

from .algebra import FiniteAlgebra
from .classify import (classify, derived_equivalent, derived_normal_form,
                       isomorphic, stably_equivalent_morita,
                       verify_explicit_iso)
from .families import (FamilySpec, build, gamma_presentation,
                       lambda_presentation, nakayama_presentation,
                       parse_family, validate_structure)
from .quiver import Arrow, Presentation, Quiver

__all__ = [
    "Arrow", "FamilySpec", "FiniteAlgebra", "Presentation", "Quiver",
    "build", "classify", "derived_equivalent", "derived_normal_form",
    "gamma_presentation", "isomorphic", "lambda_presentation",
    "nakayama_presentation", "parse_family", "stably_equivalent_morita",
    "validate_structure", "verify_explicit_iso",
]

__version__ = "0.1.0"
