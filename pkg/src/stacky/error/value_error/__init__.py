__all__ = ["combinatorial_change_error",
           "degenerate_polytope_error",
           "denominator_ceiling_error",
           "dependent_basis_error",
           "document_error",
           "empty_interior_error",
           "empty_polytope_error",
           "invalid_at_error",
           "invalid_decorated_polytope_error",
           "invalid_field_error",
           "invalid_hex_error",
           "not_a_lattice_error",
           "not_full_dimensional_error",
           "not_full_rank_error",
           "not_simple_error",
           "not_spanning_error",
           "out_of_bounds_error",
           "plot_dimension_error",
           "redundant_facet_error",
           "rounding_breaks_combinatorics_error",
           "too_many_facets_error",
           "unbounded_error",
           "zero_normal_error"]
