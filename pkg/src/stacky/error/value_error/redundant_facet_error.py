from .degenerate_polytope_error import DegeneratePolytopeError

class RedundantFacetError(DegeneratePolytopeError):
    kind = "Redundant"

    def __init__(self, facet: int):
        super().__init__(f"inequality f{facet + 1} touches no vertex", (facet,))
