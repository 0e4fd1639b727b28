from .degenerate_polytope_error import DegeneratePolytopeError

class NotFullDimensionalError(DegeneratePolytopeError):
    kind = "NotFullDimensional"

    def __init__(self, facet: int):
        super().__init__(f"facet f{facet + 1} is tight on the whole polytope", (facet,))
