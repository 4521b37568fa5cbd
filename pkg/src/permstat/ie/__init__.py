"""Inclusion-exclusion machinery for the minimum-jump indicators."""

from .graphs import (ColoredGraph, HeightLabelling, Z, Z_star, component_shapes, incline,
                     is_consistent, labellings, offset_set, pie_partial_sums, potentials,
                     z_omega)
from .moments import (Sm_formula, Sm_leading, Sm_values, bonferroni_bracket,
                      bonferroni_partial_sums, bracket_from_partials, expectation_from_nu, nu,
                      nu_of_type, subset_graph, type_graph)
from .subsets import (SubsetProfile, count_subsets_of_type, partitions, profile_subset,
                      types_of_size)
