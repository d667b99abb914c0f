"""Categorical models for homotopy limits of diagrams of categories."""

from .hom import (CommaCache, DiagramHom, Matching, components_key,
                  family_key, hom_category, hom_chains, lydakis_check,
                  matching_functor, matching_hom, matching_rows,
                  modifications, natural_families, overcat_diagram,
                  reedy_qf_check)
from .grothendieck import (F_U_functor, LayerInduction, barwick_kan,
                           barwick_kan_check, bk_to_grothendieck,
                           comma_pair_diagram, cospan_base, cospan_diagram,
                           cospan_legs, grothendieck, hom_to_bk,
                           lemma_indgrot_iso)
from .cubes import (UNVERIFIED, cofinality_check, cube_cartesian_check,
                    cube_ground, cube_initial, cube_total_fiber,
                    expected_conditions, holim_model, holim_report,
                    lambda_cofinality_check, lambda_functor,
                    lambda_initial_check, theorem_bn_conditions,
                    total_fiber_report)

__all__ = [
    "CommaCache",
    "DiagramHom",
    "Matching",
    "components_key",
    "family_key",
    "hom_category",
    "hom_chains",
    "lydakis_check",
    "matching_functor",
    "matching_hom",
    "matching_rows",
    "modifications",
    "natural_families",
    "overcat_diagram",
    "reedy_qf_check",
    "F_U_functor",
    "LayerInduction",
    "barwick_kan",
    "barwick_kan_check",
    "bk_to_grothendieck",
    "comma_pair_diagram",
    "cospan_base",
    "cospan_diagram",
    "cospan_legs",
    "grothendieck",
    "hom_to_bk",
    "lemma_indgrot_iso",
    "UNVERIFIED",
    "cofinality_check",
    "cube_cartesian_check",
    "cube_ground",
    "cube_initial",
    "cube_total_fiber",
    "expected_conditions",
    "holim_model",
    "holim_report",
    "lambda_cofinality_check",
    "lambda_functor",
    "lambda_initial_check",
    "theorem_bn_conditions",
    "total_fiber_report",
]
