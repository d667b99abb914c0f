"""Finite categorical models for homotopy limits of nerves of categories.

Weak equivalences are never decided directly: every verdict is a
homology proxy (π0 bijection plus integral homology isomorphism).
"""

from .fincat import (CategoryError, Diagram, FinCategory, Functor, NatTrans,
                     NotLeftFinite, ValidationReport, comma_over,
                     constant_diagram, degree_function, interval, layer,
                     over_category, poset_category, product_category,
                     subset_poset, terminal_category, validate_category,
                     validate_diagram)
from .search import SearchBudgetExceeded
from .simpl import (PROXY, LoopyCategory, SimplicialSet, homology,
                    is_homology_equivalence, nerve, smith_normal_form)

__version__ = "0.1.0"

__all__ = [
    "CategoryError", "Diagram", "FinCategory", "Functor", "NatTrans",
    "NotLeftFinite", "ValidationReport", "comma_over", "constant_diagram",
    "degree_function", "interval", "layer", "over_category",
    "poset_category", "product_category", "subset_poset",
    "terminal_category", "validate_category", "validate_diagram",
    "SearchBudgetExceeded", "PROXY", "LoopyCategory", "SimplicialSet",
    "homology", "is_homology_equivalence", "nerve", "smith_normal_form",
]
